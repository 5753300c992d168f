#include <doctest.h>

#include <algorithm>
#include <gordian/error.hpp>
#include <gordian/superbridge.hpp>

#include "helpers.hpp"

using namespace gordian;

namespace {

DirectionWitness count_for(const std::string& label, const Vec3& v) {
  return bridge_count(edge_vectors(testutil::load_polygon(label)), v);
}

}  // namespace

TEST_CASE("x-axis projection of 8_10 and 9_7 has exactly 4 descents") {
  CHECK(count_for("8_10", Vec3{1, 0, 0}).count == 4);
  CHECK(count_for("9_7", Vec3{1, 0, 0}).count == 4);
}

TEST_CASE("bridge_count rejects non-generic directions, naming an edge") {
  PolygonalKnot p = testutil::load_polygon("8_5");
  // v orthogonal to the first edge (1000, 0, 0).
  try {
    bridge_count(edge_vectors(p), Vec3{0, 3, 5});
    FAIL("expected NonGenericDirection");
  } catch (const NonGenericDirection& e) {
    CHECK(e.edge == 1);
  }
  // The zero vector is orthogonal to everything; edge 1 is blamed.
  CHECK_THROWS_AS(bridge_count(edge_vectors(p), Vec3{0, 0, 0}),
                  NonGenericDirection);
}

TEST_CASE("b_v equals b_{-v} and counts are scale invariant") {
  SplitMix64 rng{17};
  PolygonalKnot p = testutil::load_polygon("8_12");
  EdgeVectors e = edge_vectors(p);
  int done = 0;
  while (done < 50) {
    Vec3 v{Int(rng.uniform(-40, 40)), Int(rng.uniform(-40, 40)),
           Int(rng.uniform(-40, 40))};
    try {
      DirectionWitness a = bridge_count(e, v);
      DirectionWitness b = bridge_count(e, -v);
      DirectionWitness c = bridge_count(e, Int(7) * v);
      CHECK(a.count == b.count);
      CHECK(a.count == c.count);
      CHECK(a.signs == c.signs);
      ++done;
    } catch (const NonGenericDirection&) {
      // skip degenerate draws
    }
  }
}

TEST_CASE("witness signs match the dot products and count the descents") {
  DirectionWitness w = count_for("8_10", Vec3{1, 0, 0});
  EdgeVectors e = edge_vectors(testutil::load_polygon("8_10"));
  REQUIRE(w.signs.size() == static_cast<size_t>(e.n()));
  int descents = 0;
  for (int i = 0; i < e.n(); ++i) {
    Int d = dot(e.edges[i], w.v);
    CHECK((d > 0 ? 1 : -1) == w.signs[i]);
    if (w.signs[i] == 1 && w.signs[(i + 1) % e.n()] == -1) ++descents;
  }
  CHECK(descents == w.count);
}

TEST_CASE("witness_search attains the halved stick bound on fixtures") {
  // 10-gon fixtures reach count 4 = 10/2 - 1; deterministic under the seed.
  DirectionWitness a =
      witness_search(testutil::load_polygon("8_10"), 2000, 1);
  CHECK(a.count == 4);
  DirectionWitness b =
      witness_search(testutil::load_polygon("8_10"), 2000, 1);
  CHECK(a.v == b.v);  // determinism
  CHECK(a.count == b.count);
}

TEST_CASE("upper_bound_from_certificate gives n/2 - 1 on fixtures") {
  auto b = upper_bound_from_certificate(testutil::load_polygon("8_5"));
  REQUIRE(b.has_value());
  CHECK(b->kind == SbBound::UpperRealization);
  CHECK(b->value == 4);
  REQUIRE(b->cert.has_value());

  auto c = upper_bound_from_certificate(testutil::load_polygon("13n350"));
  REQUIRE(c.has_value());
  CHECK(c->value == 5);
}

TEST_CASE("jin, torus, and adams bounds") {
  CHECK(jin_bound(10) == 5);
  CHECK(jin_bound(12) == 6);
  CHECK(jin_bound(7) == 3);
  CHECK_THROWS_AS(jin_bound(2), BadRange);

  CHECK(torus_superbridge(2, 3) == 3);   // trefoil: min(4, 3)
  CHECK(torus_superbridge(2, 5) == 4);   // min(4, 5)
  CHECK(torus_superbridge(3, 4) == 4);   // min(6, 4)
  CHECK(torus_superbridge(3, 7) == 6);   // min(6, 7)
  CHECK_THROWS_AS(torus_superbridge(4, 2), BadRange);
  CHECK_THROWS_AS(torus_superbridge(2, 4), NotCoprime);

  CHECK(adams_bound(2) == 5);
  CHECK(adams_bound(3) == 8);
  CHECK_THROWS_AS(adams_bound(0), BadRange);
}

TEST_CASE("witness_search examples: all 10-vertex fixtures reach 4") {
  for (const auto& label : {"8_1", "8_7", "9_33"}) {
    CAPTURE(label);
    DirectionWitness w =
        witness_search(testutil::load_polygon(label), 2000, 1);
    CHECK(w.count == 4);
  }
}
