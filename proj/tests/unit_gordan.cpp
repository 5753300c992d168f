#include <doctest.h>

#include <gordian/error.hpp>
#include <gordian/gordan.hpp>
#include <gordian/poly.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gordian;

namespace {

SignMatrix fixture_matrix(const std::string& label) {
  return sign_matrix(edge_vectors(testutil::load_polygon(label)));
}

GordanCertificate fixture_certificate(const std::string& label) {
  return parse_certificate(testutil::fixture(label + ".cert"));
}

}  // namespace

TEST_CASE("the shipped 8_5 certificate verifies with zero residual") {
  SignMatrix E = fixture_matrix("8_5");
  GordanCertificate u = fixture_certificate("8_5");
  REQUIRE(u.n() == 10);
  CHECK(u.u[2] == Int("8061667015"));
  CHECK(u.u[6] == Int("496072961"));
  CHECK(u.u[7] == Int("2237736971"));
  CHECK(u.u[8] == Int("3514960071"));
  CHECK(u.u[9] == Int("4046282755"));
  VerifyReport r = verify_certificate(E, u);
  CHECK(r.ok);
  CHECK(is_zero(r.residual));
  CHECK(r.reason.empty());
}

TEST_CASE("tampered certificates are rejected with a reason") {
  SignMatrix E = fixture_matrix("8_5");
  GordanCertificate u = fixture_certificate("8_5");
  u.u[0] += 1;
  VerifyReport r = verify_certificate(E, u);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(is_zero(r.residual));
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("certificate validation rejects bad vectors") {
  SignMatrix E = fixture_matrix("8_5");
  // The zero vector and vectors with negative entries are well-formed inputs
  // that simply fail the certificate conditions: the report says why.
  GordanCertificate zero;
  zero.u.assign(10, 0);
  VerifyReport rz = verify_certificate(E, zero);
  CHECK_FALSE(rz.ok);
  CHECK_FALSE(rz.reason.empty());
  GordanCertificate neg;
  neg.u.assign(10, 1);
  neg.u[3] = -2;
  VerifyReport rn = verify_certificate(E, neg);
  CHECK_FALSE(rn.ok);
  CHECK_FALSE(rn.reason.empty());
  // A length mismatch is a malformed call, not a verdict.
  GordanCertificate shorty;
  shorty.u.assign(4, 1);
  CHECK_THROWS_AS(verify_certificate(E, shorty), DimensionMismatch);
}

TEST_CASE("find_certificate succeeds on every shipped fixture and verifies") {
  for (const auto& label : testutil::all_labels()) {
    CAPTURE(label);
    SignMatrix E = fixture_matrix(label);
    auto found = find_certificate(E);
    REQUIRE(found.has_value());
    CHECK(verify_certificate(E, *found).ok);
  }
}

TEST_CASE("canonicalize clears denominators and is idempotent") {
  std::vector<Rat> u = {Rat(1) / Rat(2), Rat(3) / Rat(4), Rat(0), Rat(5)};
  GordanCertificate c = canonicalize(u);
  CHECK(c.u == std::vector<Int>{2, 3, 0, 20});
  std::vector<Rat> again(c.u.begin(), c.u.end());
  CHECK(canonicalize(again).u == c.u);
}

TEST_CASE("certificate parse/serialize round-trip") {
  GordanCertificate u = fixture_certificate("9_16");
  GordanCertificate v = parse_certificate(serialize_certificate(u));
  CHECK(v.u == u.u);
  CHECK_THROWS_AS(parse_certificate("1\nbanana\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("# nothing\n"), ParseError);
}

TEST_CASE("gordan_check populates exactly one branch") {
  // A matrix whose columns all lie strictly in a halfspace: direction branch.
  SignMatrix pos;
  pos.cols = {Vec3{1, 0, 0}, Vec3{1, 1, 0}, Vec3{1, 0, 1}, Vec3{1, -1, -1}};
  GordanVerdict v = gordan_check(pos);
  CHECK_FALSE(v.certificate_branch);
  REQUIRE(v.dir.has_value());
  CHECK_FALSE(v.cert.has_value());
  for (const auto& c : pos.cols) CHECK(dot(v.dir->v, c) > 0);

  // Columns containing an opposite pair: certificate branch.
  SignMatrix mix;
  mix.cols = {Vec3{1, 2, 3}, Vec3{-1, -2, -3}, Vec3{5, 0, 0}, Vec3{0, 7, 0}};
  GordanVerdict w = gordan_check(mix);
  CHECK(w.certificate_branch);
  REQUIRE(w.cert.has_value());
  CHECK_FALSE(w.dir.has_value());
  CHECK(verify_certificate(mix, *w.cert).ok);
}

TEST_CASE("find_direction result is gcd-reduced and orientation preserved") {
  SignMatrix pos;
  pos.cols = {Vec3{2, 0, 0}, Vec3{2, 2, 0}, Vec3{2, 0, 2}};
  auto d = find_direction(pos);
  REQUIRE(d.has_value());
  CHECK(vec_gcd(d->v) == 1);
  for (const auto& c : pos.cols) CHECK(dot(d->v, c) > 0);
}

TEST_CASE("exclusivity against the support-enumeration oracle (seeded)") {
  // Small-n version of the acceptance property suite, used as a unit check.
  SplitMix64 rng{0x5eed5eed5eed5eedULL};
  for (int n : {4, 6, 8}) {
    for (int iter = 0; iter < 100; ++iter) {
      SignMatrix E;
      E.cols = oracles::random_matrix(rng, n);
      auto oracle = oracles::support_feasible(E.cols);
      auto cert = find_certificate(E);
      auto dir = find_direction(E);
      CAPTURE(n);
      CAPTURE(iter);
      REQUIRE(cert.has_value() == oracle.has_value());
      REQUIRE(cert.has_value() != dir.has_value());
      if (cert) CHECK(verify_certificate(E, *cert).ok);
      if (oracle) {
        GordanCertificate cu;
        cu.u = *oracle;
        CHECK(verify_certificate(E, cu).ok);
      }
      if (dir)
        for (const auto& c : E.cols) CHECK(dot(dir->v, c) > 0);
    }
  }
}
