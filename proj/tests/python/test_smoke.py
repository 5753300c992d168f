"""Smoke tests for the Python facade over the exact-arithmetic core."""

import os
from pathlib import Path

import pytest

import gordian

DATA = Path(os.environ.get("GORDAN_DATA", "data"))


def read(rel):
    return (DATA / rel).read_text()


def test_verify_bundled_certificate():
    ok, reason = gordian.verify_certificate(read("8_5.poly"), read("8_5.cert"))
    assert ok
    assert reason == ""


def test_verify_rejects_tampered_certificate():
    cert = read("8_5.cert").replace("8061667015", "8061667016")
    ok, reason = gordian.verify_certificate(read("8_5.poly"), cert)
    assert not ok
    assert reason


def test_find_certificate_round_trips():
    cert = gordian.find_certificate(read("8_10.poly"))
    assert cert is not None
    ok, _ = gordian.verify_certificate(read("8_10.poly"), cert)
    assert ok


def test_no_direction_when_certificate_exists():
    assert gordian.find_direction(read("8_5.poly")) is None


def test_bridge_count_known_direction():
    assert gordian.bridge_count(read("8_10.poly"), (1, 0, 0)) == 4
    assert gordian.bridge_count(read("9_7.poly"), (1, 0, 0)) == 4


def test_witness_search_attains_realization_bound():
    direction, count = gordian.witness_search(read("9_7.poly"), budget=2000,
                                              seed=1)
    assert count == 4
    assert direction.startswith("(") and direction.endswith(")")


def test_project_yields_odd_determinant_diagram():
    pd, direction = gordian.project(read("8_1.poly"))
    assert "X[" in pd
    assert direction.startswith("(")
    det = gordian.fox_determinant(pd)
    assert det > 1
    assert det % 2 == 1


def test_fox_determinant_reference_values():
    assert gordian.fox_determinant(read("diagrams/trefoil.pd")) == 3
    assert gordian.fox_determinant(read("diagrams/figure8.pd")) == 5


def test_hom_search_trefoil():
    found = gordian.hom_search(read("diagrams/trefoil.pd"), 3)
    assert len(found) == 1
    assert sorted(found[0]) == ["(1 2)", "(1 3)", "(2 3)"]


def test_conclude_with_homomorphism():
    out = gordian.conclude(
        read("13n226.poly"),
        diagram=read("diagrams/13n226.pd"),
        gens=read("homs/13n226.gens"),
        m=5,
        budget=10000,
        seed=1,
    )
    assert out["knot"] == "13n226"
    assert (out["sb_lower"], out["sb_upper"]) == (5, 5)
    assert out["verdict"] == "5"
    assert out["citations"] == "Thm6,Cor12,Thm3,Thm4,Lemma10,Witness"
    assert any(cite == "Lemma10" for cite, _ in out["facts"])


def test_conclude_rejects_half_supplied_diagram():
    with pytest.raises(Exception):
        gordian.conclude(read("8_5.poly"), diagram="X[1,4,2,5]")


def test_reproduce_matches_expected_classes():
    tsv, summary = gordian.reproduce(str(DATA))
    lines = tsv.strip().split("\n")
    assert lines[0] == "knot\tsb_lower\tsb_upper\tverdict\tcitations"
    assert len(lines) == 34  # header + one row per bundled knot
    assert "superbridge index 4 or 5: 10_76" in summary
