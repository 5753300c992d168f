#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <gordian/cli.hpp>
#include <gordian/gordan.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace gordian;

namespace {

struct CliResult {
  int status;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int s = cli_main(std::move(args), o, e);
  return {s, o.str(), e.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

std::string poly_path(const std::string& label) {
  return testutil::data_dir() + "/" + label + ".poly";
}

}  // namespace

TEST_CASE("verify-cert accepts the bundled pair") {
  CliResult r = run_cli({"verify-cert", "--poly", poly_path("8_5"), "--cert",
                         testutil::data_dir() + "/8_5.cert"});
  CAPTURE(r.err);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "certificate verifies"));
  CHECK(contains(r.out, "<= 4"));
}

TEST_CASE("verify-cert rejects a tampered vector with status 1") {
  std::string cert = testutil::slurp(testutil::data_dir() + "/8_5.cert");
  std::size_t at = cert.find("8061667015");
  REQUIRE(at != std::string::npos);
  cert.replace(at, 10, "8061667016");
  std::string path = temp_file("tampered_decoy.cert", cert);
  CliResult r = run_cli(
      {"verify-cert", "--poly", poly_path("8_5"), "--cert", path});
  CHECK(r.status == 1);
  CHECK(contains(r.out, "REJECTED"));
  CHECK(contains(r.out, "residual"));
  std::remove(path.c_str());
}

TEST_CASE("missing and malformed inputs exit with status 2") {
  CliResult missing = run_cli({"verify-cert", "--poly", "/nonexistent.poly",
                               "--cert", "/nonexistent.cert"});
  CHECK(missing.status == 2);
  CHECK(contains(missing.err, "cannot open"));

  std::string bad = temp_file("bad_decoy.poly", "name: x\n1 2\n");
  CliResult malformed = run_cli(
      {"witness", "--poly", bad, "--budget", "10"});
  CHECK(malformed.status == 2);
  CHECK(contains(malformed.err, "input error"));
  std::remove(bad.c_str());

  CliResult odd = run_cli({"find-cert", "--poly",
                           temp_file("odd_decoy.poly",
                                     "name: x\n0 0 0\n1 0 0\n1 1 0\n"
                                     "0 1 1\n0 2 0\n")});
  CHECK(odd.status == 2);
  CHECK(contains(odd.err, "parity error"));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"no-such-command"}).status == 2);
  CHECK(run_cli({"verify-cert"}).status == 2);  // missing required options
  CliResult help = run_cli({"--help"});
  CHECK(help.status == 0);
  CHECK(contains(help.out, "Usage"));
}

TEST_CASE("find-cert emits a certificate that verifies") {
  auto out_path = std::filesystem::temp_directory_path() / "found_decoy.cert";
  CliResult r = run_cli({"find-cert", "--poly", poly_path("8_10"), "--out",
                         out_path.string()});
  CAPTURE(r.err);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "certificate found"));
  GordanCertificate u = parse_certificate(testutil::slurp(out_path.string()));
  PolygonalKnot P = testutil::load_polygon("8_10");
  CHECK(verify_certificate(sign_matrix(edge_vectors(P)), u).ok);
  std::filesystem::remove(out_path);
}

TEST_CASE("witness prints the descent count and signs") {
  CliResult r = run_cli({"witness", "--poly", poly_path("8_10"), "--budget",
                         "2000", "--seed", "1"});
  CAPTURE(r.err);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "attains 4 descents"));
  CHECK(contains(r.out, "edge signs:"));
  CHECK(contains(r.out, "realization >= 4"));
}

TEST_CASE("project prints the diagram and its gauss code") {
  CliResult r = run_cli({"project", "--poly", poly_path("8_5")});
  CAPTURE(r.err);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "projection direction"));
  CHECK(contains(r.out, "crossings)"));
  CHECK(contains(r.out, "gauss: "));
  CHECK(contains(r.out, "X["));
}

TEST_CASE("hom-search reports the trefoil labeling") {
  CliResult r = run_cli({"hom-search", "--diagram",
                         testutil::data_dir() + "/diagrams/trefoil.pd",
                         "--m", "3"});
  CAPTURE(r.err);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "1 surjective labeling onto S_3 up to relabeling"));
  CHECK(contains(r.out, "# labeling 1"));
  CHECK(contains(r.out, ") -> ("));
}

TEST_CASE("conclude combines all bounds for a 10-vertex knot") {
  CliResult r = run_cli({"conclude", "--poly", poly_path("8_5"), "--budget",
                         "2000", "--seed", "1"});
  CAPTURE(r.err);
  CHECK(r.status == 0);
  CHECK(contains(r.out,
                 "8_5: superbridge index 4 [Thm6,Cor12,Thm3,Thm4,Witness]"));
  CHECK(contains(r.out, "[Thm6] 10-stick realization"));
}

TEST_CASE("conclude uses a diagram and generators when given") {
  CliResult r = run_cli(
      {"conclude", "--poly", poly_path("13n226"), "--diagram",
       testutil::data_dir() + "/diagrams/13n226.pd", "--gens",
       testutil::data_dir() + "/homs/13n226.gens", "--m", "5", "--budget",
       "10000", "--seed", "1"});
  CAPTURE(r.err);
  CHECK(r.status == 0);
  CHECK(contains(
      r.out,
      "13n226: superbridge index 5 [Thm6,Cor12,Thm3,Thm4,Lemma10,Witness]"));
  CHECK(contains(r.out, "[Lemma10]"));

  CliResult lonely = run_cli({"conclude", "--poly", poly_path("13n226"),
                              "--diagram", "x.pd"});
  CHECK(lonely.status == 2);
}

TEST_CASE("reproduce with a bad data directory exits 2") {
  CliResult r = run_cli({"reproduce", "--data", "/nonexistent_dir"});
  CHECK(r.status == 2);
  CHECK(contains(r.err, "cannot open"));
}
