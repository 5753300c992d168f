// Python bindings: a thin string/int facade over the exact-arithmetic core.
// Polygons, certificates, diagrams, and generator sets travel as the same
// text formats the CLI and the bundled fixtures use.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gordian/diagram.hpp>
#include <gordian/error.hpp>
#include <gordian/gordan.hpp>
#include <gordian/ints.hpp>
#include <gordian/ledger.hpp>
#include <gordian/poly.hpp>
#include <gordian/project.hpp>
#include <gordian/superbridge.hpp>
#include <gordian/wirtinger.hpp>

namespace py = pybind11;

namespace {

using namespace gordian;

Vec3 vec_of(const std::array<long long, 3>& v) {
    return Vec3{Int(v[0]), Int(v[1]), Int(v[2])};
}

SignMatrix matrix_of(const std::string& polygon) {
    return sign_matrix(edge_vectors(parse_polygon(polygon)));
}

py::int_ py_int(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact certification of superbridge-index bounds for polygonal "
        "knots.";

    m.def(
        "verify_certificate",
        [](const std::string& polygon, const std::string& certificate) {
            VerifyReport r = verify_certificate(matrix_of(polygon),
                                                parse_certificate(certificate));
            return py::make_tuple(r.ok, r.reason);
        },
        py::arg("polygon"), py::arg("certificate"),
        "Exactly verify a certificate vector against a polygon's sign "
        "matrix; returns (ok, reason).");

    m.def(
        "find_certificate",
        [](const std::string& polygon) -> std::optional<std::string> {
            std::optional<GordanCertificate> c =
                find_certificate(matrix_of(polygon));
            if (!c) return std::nullopt;
            return serialize_certificate(*c);
        },
        py::arg("polygon"),
        "Search for a nonnegative kernel certificate; returns its text form "
        "or None when the alternative holds instead.");

    m.def(
        "find_direction",
        [](const std::string& polygon) -> std::optional<std::string> {
            std::optional<DirectionVector> d = find_direction(matrix_of(polygon));
            if (!d) return std::nullopt;
            return to_string(d->v);
        },
        py::arg("polygon"),
        "Search for a direction strictly positive on every sign-matrix "
        "column; returns \"(x, y, z)\" or None.");

    m.def(
        "bridge_count",
        [](const std::string& polygon, const std::array<long long, 3>& v) {
            return bridge_count(edge_vectors(parse_polygon(polygon)), vec_of(v))
                .count;
        },
        py::arg("polygon"), py::arg("direction"),
        "Descent count of the polygon along an integer direction.");

    m.def(
        "witness_search",
        [](const std::string& polygon, int budget, unsigned long long seed) {
            DirectionWitness w = witness_search(parse_polygon(polygon), budget,
                                                seed);
            return py::make_tuple(to_string(w.v), w.count);
        },
        py::arg("polygon"), py::arg("budget") = 10000,
        py::arg("seed") = 1ULL,
        "Deterministic seeded search for a high-descent direction; returns "
        "(direction, count).");

    m.def(
        "project",
        [](const std::string& polygon) {
            ProjectionResult r = project(parse_polygon(polygon));
            return py::make_tuple(pd_code(r.diagram),
                                  to_string(r.pose.direction));
        },
        py::arg("polygon"),
        "Project the polygon to a validated knot diagram; returns "
        "(pd_text, direction).");

    m.def(
        "fox_determinant",
        [](const std::string& pd) {
            return py_int(fox_determinant(presentation(parse_pd(pd))));
        },
        py::arg("pd"),
        "Knot determinant, evaluated exactly from the diagram's Wirtinger "
        "presentation.");

    m.def(
        "hom_search",
        [](const std::string& pd, int m_) {
            std::vector<CompleteLabeling> found =
                hom_search(presentation(parse_pd(pd)), m_);
            std::vector<std::vector<std::string>> out;
            out.reserve(found.size());
            for (const CompleteLabeling& lab : found) {
                std::vector<std::string> row;
                row.reserve(lab.size());
                for (const Transposition& t : lab) row.push_back(to_string(t));
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("pd"), py::arg("m"),
        "All surjective transposition labelings onto S_m up to relabeling; "
        "each labeling lists one \"(a b)\" per arc.");

    m.def(
        "conclude",
        [](const std::string& polygon, const std::optional<std::string>& diagram,
           const std::optional<std::string>& gens, int m_, int budget,
           unsigned long long seed) {
            if (diagram.has_value() != gens.has_value())
                throw InputError(
                    "diagram and gens must be supplied together");
            PolygonalKnot P = parse_polygon(polygon);
            std::optional<CompletedHom> hom;
            if (diagram) {
                KnotDiagram D = parse_pd(*diagram);
                WirtingerPresentation W = presentation(D);
                PartialLabeling partial(W.generators + 1, std::nullopt);
                for (const auto& [spec, t] : parse_gens(*gens))
                    partial[resolve_strand(D, spec)] = t;
                PropagationResult pr = propagate(W, partial);
                if (pr.status != PropagationStatus::Complete)
                    throw Error(
                        "generator labels do not propagate to a complete "
                        "labeling");
                hom = CompletedHom{m_, pr.complete()};
            }
            DirectionWitness w = witness_search(P, budget, seed);
            BoundLedger L =
                conclude(P, hom, KnowledgeTable::standard(), w);
            py::dict out;
            out["knot"] = L.knot;
            out["sb_lower"] = *L.sb_lower;
            out["sb_upper"] = *L.sb_upper;
            out["verdict"] = L.verdict();
            out["citations"] = L.citations();
            py::list facts;
            for (const Fact& f : L.facts)
                facts.append(py::make_tuple(f.citation, f.detail));
            out["facts"] = facts;
            return out;
        },
        py::arg("polygon"), py::arg("diagram") = py::none(),
        py::arg("gens") = py::none(), py::arg("m") = 5,
        py::arg("budget") = 10000, py::arg("seed") = 1ULL,
        "Combine every applicable bound into a superbridge-index verdict; "
        "returns a dict with bounds, verdict, citations, and fact lines.");

    m.def(
        "reproduce",
        [](const std::string& data_dir) {
            ReproduceReport r = reproduce_theorem1(data_dir);
            return py::make_tuple(r.tsv, r.summary);
        },
        py::arg("data_dir"),
        "Re-derive the verdict for every bundled knot; returns "
        "(tsv, summary).");
}
