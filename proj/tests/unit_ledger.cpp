#include <doctest.h>

#include <gordian/error.hpp>
#include <gordian/ledger.hpp>
#include <gordian/poly.hpp>
#include <gordian/superbridge.hpp>
#include <gordian/wirtinger.hpp>
#include <map>
#include <optional>

#include "helpers.hpp"

using namespace gordian;

TEST_CASE("ledger bounds only tighten") {
  BoundLedger L;
  L.knot = "test";
  L.tighten_lower(3, "A", "first");
  L.tighten_lower(2, "B", "weaker, ignored");
  CHECK(*L.sb_lower == 3);
  L.tighten_lower(4, "C", "stronger");
  CHECK(*L.sb_lower == 4);
  L.tighten_upper(9, "D", "first");
  L.tighten_upper(11, "E", "weaker, ignored");
  CHECK(*L.sb_upper == 9);
  L.tighten_upper(6, "F", "stronger");
  CHECK(*L.sb_upper == 6);
  // every call records a fact, even the non-tightening ones
  CHECK(L.facts.size() == 6);
}

TEST_CASE("verdict formats") {
  BoundLedger L;
  L.knot = "test";
  CHECK_THROWS_AS(L.verdict(), InconsistentLedger);  // no bounds yet
  L.tighten_lower(3, "A", "");
  CHECK_THROWS_AS(L.verdict(), InconsistentLedger);  // still no upper
  L.tighten_upper(7, "B", "");
  CHECK(L.verdict() == "3..7");
  L.tighten_upper(4, "B", "");
  CHECK(L.verdict() == "3 or 4");
  L.tighten_lower(4, "C", "");
  CHECK(L.verdict() == "4");
}

TEST_CASE("crossed bounds throw InconsistentLedger") {
  BoundLedger L;
  L.knot = "test";
  L.tighten_upper(3, "A", "");
  CHECK_THROWS_AS(L.tighten_lower(4, "B", ""), InconsistentLedger);
}

TEST_CASE("citations are deduplicated in first-use order") {
  BoundLedger L;
  L.knot = "test";
  L.note("Thm6", "one");
  L.note("Cor12", "two");
  L.note("Thm6", "again");
  L.note("Witness", "three");
  L.note("Cor12", "again");
  CHECK(L.citations() == "Thm6,Cor12,Witness");
}

TEST_CASE("knowledge table lists exceptions and 33 verdicts") {
  KnowledgeTable kb = KnowledgeTable::standard();
  CHECK(kb.exceptions.size() == 11);
  CHECK(kb.is_exception("3_1"));
  CHECK(kb.is_exception("8_4"));
  CHECK(kb.is_exception("8_9"));
  CHECK_FALSE(kb.is_exception("8_5"));
  CHECK_FALSE(kb.is_exception("13n350"));

  std::map<std::string, int> by_verdict;
  for (const auto& [k, v] : kb.expected_verdicts) ++by_verdict[v];
  CHECK(kb.expected_verdicts.size() == 33);
  CHECK(by_verdict["4"] == 20);
  CHECK(by_verdict["3 or 4"] == 2);
  CHECK(by_verdict["4 or 5"] == 1);
  CHECK(by_verdict["5"] == 10);
  CHECK(kb.expected_verdicts.at("10_76") == "4 or 5");
  CHECK(kb.expected_verdicts.at("9_28") == "4");
}

TEST_CASE("natural label ordering") {
  CHECK(natural_label_less("8_5", "8_10"));
  CHECK(natural_label_less("8_10", "9_7"));
  CHECK(natural_label_less("9_33", "10_76"));
  CHECK(natural_label_less("10_76", "13n226"));
  CHECK(natural_label_less("13n226", "13n2641"));
  CHECK(natural_label_less("13n2641", "14n1753"));
  // alternating-table labels sort before n-type at the same crossing count
  CHECK(natural_label_less("13_1", "13n226"));
  CHECK_FALSE(natural_label_less("8_5", "8_5"));
  CHECK_FALSE(natural_label_less("8_10", "8_5"));
}

TEST_CASE("read_text_file throws MissingFixture") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/path/nope.txt"),
                  MissingFixture);
  CHECK_FALSE(read_text_file(testutil::data_dir() + "/8_5.poly").empty());
}

TEST_CASE("conclude: certified 10-vertex knot pins verdict 4") {
  KnowledgeTable kb = KnowledgeTable::standard();
  BoundLedger L = conclude(testutil::load_polygon("8_5"), std::nullopt, kb);
  CHECK(*L.sb_lower == 4);
  CHECK(*L.sb_upper == 4);
  CHECK(L.verdict() == "4");
  CHECK(L.citations() == "Thm6,Cor12,Thm3,Thm4");
  CHECK_FALSE(L.b_lower.has_value());
}

TEST_CASE("conclude: exceptional knot keeps the gap open") {
  KnowledgeTable kb = KnowledgeTable::standard();
  BoundLedger L = conclude(testutil::load_polygon("8_4"), std::nullopt, kb);
  CHECK(L.verdict() == "3 or 4");
  CHECK(L.citations() == "Thm6,Cor12,Thm3");
}

TEST_CASE("conclude: 12-vertex knot without a homomorphism gives 4 or 5") {
  KnowledgeTable kb = KnowledgeTable::standard();
  BoundLedger L = conclude(testutil::load_polygon("10_76"), std::nullopt, kb);
  CHECK(*L.sb_lower == 4);
  CHECK(*L.sb_upper == 5);
  CHECK(L.verdict() == "4 or 5");
  CHECK(L.citations() == "Thm6,Cor12,Thm3,Thm4");
}

TEST_CASE("conclude: homomorphism and witness settle a 12-vertex knot at 5") {
  KnowledgeTable kb = KnowledgeTable::standard();
  PolygonalKnot P = testutil::load_polygon("13n226");

  KnotDiagram D = parse_pd(testutil::fixture("diagrams/13n226.pd"));
  auto gens = parse_gens(testutil::fixture("homs/13n226.gens"));
  WirtingerPresentation W = presentation(D);
  PartialLabeling partial(W.generators + 1, std::nullopt);
  for (const auto& [spec, t] : gens) partial[resolve_strand(D, spec)] = t;
  PropagationResult pr = propagate(W, partial);
  REQUIRE(pr.status == PropagationStatus::Complete);
  CompleteLabeling full = pr.complete();
  REQUIRE(surjective(full, 5));

  DirectionWitness w = witness_search(P, 10000, 1);
  BoundLedger L = conclude(P, CompletedHom{5, full}, kb, w);
  CHECK(*L.b_lower == 4);
  CHECK(*L.sb_lower == 5);
  CHECK(*L.sb_upper == 5);
  CHECK(L.verdict() == "5");
  CHECK(L.citations() == "Thm6,Cor12,Thm3,Thm4,Lemma10,Witness");
}

TEST_CASE("conclude: hexagonal trefoil has no certificate and verdict 3") {
  // A 6-stick trefoil (projected diagram has knot determinant 3; the only
  // 6-stick knots are the unknot and the trefoil).  Its superbridge number
  // is 3, so no feasibility certificate can exist and both bounds close at
  // 3 without the general >= 4 step (the trefoil is an exception).
  PolygonalKnot P = parse_polygon(
      "name: 3_1\n"
      "0 0 0\n-3 -6 -3\n0 3 5\n5 -3 2\n-5 -3 -2\n1 -3 3\n");
  KnowledgeTable kb = KnowledgeTable::standard();
  BoundLedger L = conclude(P, std::nullopt, kb);
  CHECK(L.verdict() == "3");
  CHECK(L.citations() == "Thm6,Cor12,Thm3");
  bool saw_absence = false;
  for (const Fact& f : L.facts)
    if (f.citation == "Cor12" &&
        f.detail.find("no certificate") != std::string::npos)
      saw_absence = true;
  CHECK(saw_absence);
}

TEST_CASE("conclude: odd stick counts skip the certificate step") {
  // A 7-stick trefoil, identified by determinant 3 as above.
  PolygonalKnot P = parse_polygon(
      "name: 3_1\n"
      "0 0 0\n6 -6 -6\n0 0 -5\n4 -3 -5\n2 3 4\n-2 -2 0\n3 -2 -6\n");
  KnowledgeTable kb = KnowledgeTable::standard();
  BoundLedger L = conclude(P, std::nullopt, kb);
  CHECK(L.verdict() == "3");
  CHECK(L.citations() == "Thm6,Thm3");
}

TEST_CASE("conclude: knot-level lower bounds reject an unknot polygon") {
  PolygonalKnot P =
      parse_polygon("name: square\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n");
  KnowledgeTable kb = KnowledgeTable::standard();
  CHECK_THROWS_AS(conclude(P, std::nullopt, kb), InconsistentLedger);
}

TEST_CASE("reproduction harness replays every fixture byte-stably") {
  ReproduceReport a = reproduce_theorem1(testutil::data_dir());
  ReproduceReport b = reproduce_theorem1(testutil::data_dir());
  CHECK(a.tsv == b.tsv);
  REQUIRE(a.rows.size() == 33);
  for (std::size_t i = 1; i < a.rows.size(); ++i)
    CHECK(natural_label_less(a.rows[i - 1].knot, a.rows[i].knot));
  CHECK(a.rows[0].knot == "8_1");
  CHECK(a.tsv.rfind("knot\tsb_lower\tsb_upper\tverdict\tcitations\n", 0) ==
        0);

  std::map<std::string, KnotRow> by_knot;
  for (const KnotRow& r : a.rows) by_knot[r.knot] = r;
  CHECK(by_knot.at("8_5").verdict == "4");
  CHECK(by_knot.at("8_5").citations == "Thm6,Cor12,Thm3,Thm4,Witness");
  CHECK(by_knot.at("8_4").verdict == "3 or 4");
  CHECK(by_knot.at("10_76").verdict == "4 or 5");
  CHECK(by_knot.at("13n350").verdict == "5");
  CHECK(by_knot.at("13n350").sb_lower == 5);
  CHECK(by_knot.at("13n350").citations ==
        "Thm6,Cor12,Thm3,Thm4,Lemma10,Witness");
  CHECK(a.summary.find("superbridge index 5: 10_76") == std::string::npos);
  CHECK(a.summary.find("superbridge index 4 or 5: 10_76") !=
        std::string::npos);
}
