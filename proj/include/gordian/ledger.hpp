#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gordian/error.hpp"
#include "gordian/poly.hpp"
#include "gordian/superbridge.hpp"
#include "gordian/wirtinger.hpp"

namespace gordian {

// One applied result, tagged with its citation.
struct Fact {
    std::string citation;  // Thm2, Thm3, Thm4, Thm6, Thm7, Cor12, Lemma10, Witness
    std::string detail;
};

// Accumulated bounds for one knot.  sb_lower / sb_upper bound the
// superbridge INDEX sb[K]; realization-level facts about sb(gamma) of the
// particular polygon are recorded in `facts` but never move sb_lower —
// a realization's descent count says nothing about other realizations.
struct BoundLedger {
    std::string knot;
    std::optional<int> sb_lower, sb_upper;
    std::optional<int> b_lower;  // bridge-index lower bound, when known
    std::vector<Fact> facts;

    void tighten_lower(int v, const std::string& citation,
                       const std::string& detail);
    void tighten_upper(int v, const std::string& citation,
                       const std::string& detail);
    void note(const std::string& citation, const std::string& detail);

    // "4", "3 or 4" (gap of one), or "3..7" (wider interval).
    std::string verdict() const;
    // Unique citation tags in first-use order, comma-joined.
    std::string citations() const;

private:
    void check() const;  // InconsistentLedger when lower > upper
};

// Fixed background knowledge: the knots excluded from the general
// sb >= 4 lower bound, and the expected final verdicts used by the
// reproduction harness.
struct KnowledgeTable {
    std::vector<std::string> exceptions;  // sb >= 4 does NOT apply to these
    std::map<std::string, std::string> expected_verdicts;

    static KnowledgeTable standard();
    bool is_exception(const std::string& label) const;
};

// A surjective transposition labeling found for the knot's diagram.
struct CompletedHom {
    int m = 0;
    CompleteLabeling labels;
};

// Combine: certificate/no-certificate upper bound, general lower bounds,
// and the homomorphism-based lower bound when one is supplied.  `witness`
// adds a realization-level fact only.
BoundLedger conclude(const PolygonalKnot& P,
                     const std::optional<CompletedHom>& hom,
                     const KnowledgeTable& kb,
                     const std::optional<DirectionWitness>& witness =
                         std::nullopt);

// knot label ordering: crossing number, then alternating before n-type,
// then table index (8_5 < 8_10 < 9_7 < 13n226 < 14n1753).
bool natural_label_less(const std::string& a, const std::string& b);

// Slurp a file; throws MissingFixture when it cannot be opened.
std::string read_text_file(const std::string& path);

struct KnotRow {
    std::string knot;
    int sb_lower = 0, sb_upper = 0;
    std::string verdict;
    std::string citations;
};

struct ReproduceReport {
    std::vector<KnotRow> rows;
    std::string tsv;      // header + one line per knot, byte-stable
    std::string summary;  // human-readable class listing
};

// Replay the whole pipeline over the bundled fixtures: verify the stored
// certificate, find and verify a fresh one, locate a maximal direction
// witness, and (for the 12-vertex knots with bundled diagrams) re-propagate
// the stored generators; every knot's verdict must match the expected
// table.  Any failure throws, naming the knot.
ReproduceReport reproduce_theorem1(const std::string& data_dir);

}  // namespace gordian
