#include "gordian/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "gordian/gordan.hpp"
#include "gordian/ledger.hpp"
#include "gordian/project.hpp"
#include "gordian/superbridge.hpp"
#include "gordian/wirtinger.hpp"

namespace gordian {

namespace {

Vec3 parse_direction(const std::string& text) {
    std::string s = text;
    for (char& c : s)
        if (c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream in(s);
    long long x, y, z;
    std::string extra;
    if (!(in >> x >> y >> z) || (in >> extra))
        throw ParseError("expected three integers, got \"" + text + "\"");
    return {Int(x), Int(y), Int(z)};
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
    if (path.empty()) {
        out << content;
        if (!content.empty() && content.back() != '\n') out << "\n";
    } else {
        std::ofstream f(path);
        if (!f) throw MissingFixture("cannot write " + path);
        f << content;
    }
}

std::string default_data_dir() {
    const char* env = std::getenv("GORDAN_DATA");
    return env ? env : "data";
}

// Load a bundled diagram + generator file into a completed labeling.
CompletedHom replay_hom(const std::string& diagram_path,
                        const std::string& gens_path, int m) {
    KnotDiagram D = parse_pd(read_text_file(diagram_path));
    auto gens = parse_gens(read_text_file(gens_path));
    WirtingerPresentation Pn = presentation(D);
    PartialLabeling partial(Pn.generators + 1, std::nullopt);
    for (const auto& [spec, t] : gens) partial[resolve_strand(D, spec)] = t;
    PropagationResult pr = propagate(Pn, partial);
    if (pr.status == PropagationStatus::Conflict)
        throw Error("labels conflict at crossing " +
                    std::to_string(pr.conflict_crossing));
    if (pr.status == PropagationStatus::Incomplete)
        throw Error("label propagation stalled with " +
                    std::to_string(pr.unreached.size()) + " arcs unreached");
    CompleteLabeling full = pr.complete();
    if (!surjective(full, m))
        throw Error("completed labeling does not generate S_" +
                    std::to_string(m));
    return {m, full};
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact certificates and bounds for polygonal superbridge "
                 "numbers"};
    app.require_subcommand(1);

    std::string poly_path, cert_path, diagram_path, gens_path, out_path;
    std::string data_dir = default_data_dir();
    std::string dir_text;
    int budget = 10000;
    std::uint64_t seed = 1;
    int m = 5;

    // exit status of the selected action, filled in by the callbacks
    int status = 0;

    CLI::App* verify = app.add_subcommand(
        "verify-cert", "check a certificate vector against a polygon");
    verify->add_option("--poly", poly_path, "polygon file")->required();
    verify->add_option("--cert", cert_path, "certificate file")->required();
    verify->callback([&] {
        PolygonalKnot P = parse_polygon(read_text_file(poly_path));
        GordanCertificate u = parse_certificate(read_text_file(cert_path));
        VerifyReport r = verify_certificate(sign_matrix(edge_vectors(P)), u);
        if (r.ok) {
            out << "certificate verifies: E u = 0, u >= 0, u != 0 (n = "
                << u.n() << ")\n";
            out << "superbridge number of this realization <= " << P.n() / 2 - 1
                << "\n";
        } else {
            out << "certificate REJECTED: " << r.reason << "\n";
            out << "residual E u = " << to_string(r.residual) << "\n";
            status = 1;
        }
    });

    CLI::App* find = app.add_subcommand(
        "find-cert", "search for a certificate vector for a polygon");
    find->add_option("--poly", poly_path, "polygon file")->required();
    find->add_option("--out", out_path, "write the certificate here");
    find->callback([&] {
        PolygonalKnot P = parse_polygon(read_text_file(poly_path));
        SignMatrix E = sign_matrix(edge_vectors(P));
        GordanVerdict v = gordan_check(E);
        if (v.certificate_branch) {
            out << "certificate found: superbridge number of this "
                   "realization <= "
                << P.n() / 2 - 1 << "\n";
            write_output(out_path, serialize_certificate(*v.cert), out);
        } else {
            out << "no certificate exists: direction " << to_string(v.dir->v)
                << " has positive products with every signed edge, so the "
                   "superbridge number of this realization is exactly "
                << P.n() / 2 << "\n";
        }
    });

    CLI::App* witness = app.add_subcommand(
        "witness", "search for a direction maximizing the descent count");
    witness->add_option("--poly", poly_path, "polygon file")->required();
    witness->add_option("--budget", budget, "random directions to sample");
    witness->add_option("--seed", seed, "random seed");
    witness->callback([&] {
        PolygonalKnot P = parse_polygon(read_text_file(poly_path));
        DirectionWitness w = witness_search(P, budget, seed);
        out << "direction " << to_string(w.v) << " attains " << w.count
            << " descents\n";
        out << "edge signs:";
        for (int s : w.signs) out << (s > 0 ? " +" : " -");
        out << "\n";
        out << "superbridge number of this realization >= " << w.count << "\n";
    });

    CLI::App* project_cmd = app.add_subcommand(
        "project", "compute a crossing diagram from a generic projection");
    project_cmd->add_option("--poly", poly_path, "polygon file")->required();
    project_cmd->add_option("--dir", dir_text,
                            "starting direction hint, e.g. \"0,0,1\"");
    project_cmd->add_option("--out", out_path, "write the PD code here");
    project_cmd->callback([&] {
        PolygonalKnot P = parse_polygon(read_text_file(poly_path));
        std::optional<Vec3> hint;
        if (!dir_text.empty()) hint = parse_direction(dir_text);
        ProjectionResult r = project(P, hint);
        out << "projection direction " << to_string(r.pose.direction) << " ("
            << r.diagram.crossing_count() << " crossings)\n";
        out << "gauss: " << gauss_code(r.diagram) << "\n";
        write_output(out_path, pd_code(r.diagram), out);
    });

    CLI::App* homs = app.add_subcommand(
        "hom-search", "search for surjective transposition labelings");
    homs->add_option("--diagram", diagram_path, "PD code file")->required();
    homs->add_option("--m", m, "symmetric group degree");
    homs->add_option("--out", out_path, "write the labelings here");
    homs->callback([&] {
        KnotDiagram D = parse_pd(read_text_file(diagram_path));
        WirtingerPresentation Pn = presentation(D);
        std::vector<CompleteLabeling> found = hom_search(Pn, m);
        std::ostringstream body;
        for (std::size_t k = 0; k < found.size(); ++k) {
            body << "# labeling " << k + 1 << "\n";
            for (int arc = 1; arc <= Pn.generators; ++arc)
                body << serialize_strand_spec(strand_spec_of(D, arc)) << " -> "
                     << to_string(found[k][arc - 1]) << "\n";
        }
        out << found.size() << " surjective labeling"
            << (found.size() == 1 ? "" : "s") << " onto S_" << m
            << " up to relabeling\n";
        write_output(out_path, body.str(), out);
    });

    CLI::App* conclude_cmd = app.add_subcommand(
        "conclude", "combine certificate, witness, and homomorphism bounds");
    conclude_cmd->add_option("--poly", poly_path, "polygon file")->required();
    conclude_cmd->add_option("--diagram", diagram_path,
                             "PD code file for the homomorphism bound");
    conclude_cmd->add_option("--gens", gens_path,
                             "generator file matching --diagram");
    conclude_cmd->add_option("--m", m, "symmetric group degree");
    conclude_cmd->add_option("--budget", budget, "witness search budget");
    conclude_cmd->add_option("--seed", seed, "witness search seed");
    conclude_cmd->callback([&] {
        if (diagram_path.empty() != gens_path.empty())
            throw CLI::ValidationError(
                "--diagram and --gens must be given together");
        PolygonalKnot P = parse_polygon(read_text_file(poly_path));
        std::optional<CompletedHom> hom;
        if (!diagram_path.empty())
            hom = replay_hom(diagram_path, gens_path, m);
        DirectionWitness w = witness_search(P, budget, seed);
        BoundLedger L = conclude(P, hom, KnowledgeTable::standard(), w);
        for (const Fact& f : L.facts)
            out << "[" << f.citation << "] " << f.detail << "\n";
        out << (L.knot.empty() ? std::string("(unnamed)") : L.knot)
            << ": superbridge index " << L.verdict() << " [" << L.citations()
            << "]\n";
    });

    CLI::App* reproduce_cmd = app.add_subcommand(
        "reproduce", "re-derive every bundled superbridge verdict");
    reproduce_cmd->add_option("--data", data_dir,
                              "fixture directory (default $GORDAN_DATA)");
    reproduce_cmd->add_option("--out", out_path, "write the TSV report here");
    reproduce_cmd->callback([&] {
        ReproduceReport r = reproduce_theorem1(data_dir);
        out << r.summary;
        write_output(out_path, r.tsv, out);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const OddEdgeCount& e) {
        err << "parity error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(std::move(args));
}

}  // namespace gordian
