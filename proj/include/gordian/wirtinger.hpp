#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/error.hpp"
#include "gordian/ints.hpp"

namespace gordian {

// A transposition (a b) of positive integers, stored with a < b.
struct Transposition {
    int a, b;

    Transposition(int x, int y);

    int apply(int p) const { return p == a ? b : p == b ? a : p; }
    // Conjugation t * this * t (transpositions are involutions).
    Transposition conjugate(const Transposition& t) const {
        return {t.apply(a), t.apply(b)};
    }
    bool operator==(const Transposition& o) const = default;
    bool operator<(const Transposition& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
};

std::string to_string(const Transposition& t);          // "(a b)"
Transposition parse_transposition(const std::string&);  // "(a b)"

// Wirtinger relation at one crossing: out = over * in * over^{-1}.  The
// crossing sign is irrelevant for transposition images (involutions) but is
// kept for the Fox-calculus determinant.
struct Relation {
    int over, in, out;  // 1-based arc ids
    int sign;
    int crossing;  // 1-based crossing id this relation came from
};

struct WirtingerPresentation {
    int generators = 0;  // one per arc
    std::vector<Relation> relations;
};

// One generator per arc, one relation per crossing (0-crossing diagrams give
// the degenerate free presentation on a single generator).
WirtingerPresentation presentation(const KnotDiagram& D);

// A strand description "(-6, 7, 11, -9)": begins at the under-strand of
// crossing 6, passes over crossings 7 and 11 in order, ends under crossing 9.
struct StrandSpec {
    int begin;
    std::vector<int> overs;
    int end;

    bool operator==(const StrandSpec&) const = default;
};

StrandSpec parse_strand_spec(const std::string& text);
std::string serialize_strand_spec(const StrandSpec&);

// The unique arc of D matching the spec (throws UnresolvableStrand).
int resolve_strand(const KnotDiagram& D, const StrandSpec& spec);
// Inverse: the spec describing a given arc of D.
StrandSpec strand_spec_of(const KnotDiagram& D, int arc);

// Arc labels, indexed by arc id (slot 0 unused).  Unset = unlabeled.
using PartialLabeling = std::vector<std::optional<Transposition>>;
// A complete labeling, indexed arc-1.
using CompleteLabeling = std::vector<Transposition>;

enum class PropagationStatus { Complete, Conflict, Incomplete };

struct PropagationResult {
    PropagationStatus status;
    PartialLabeling labeling;
    int conflict_crossing = 0;    // set when status == Conflict
    std::vector<int> unreached;   // set when status == Incomplete
    CompleteLabeling complete() const;  // valid when status == Complete
};

// Fixpoint propagation through the relations.  Only the two determined
// directions are used (out from over+in, in from over+out); the over arc is
// never inferred.  A completed labeling is re-verified against every
// relation before Complete is returned.
PropagationResult propagate(const WirtingerPresentation& P,
                            const PartialLabeling& partial);

// True iff the transpositions' support graph is connected and spans
// {1, ..., m} — equivalently, the labels generate all of S_m.
bool surjective(const CompleteLabeling& labels, int m);

// All surjective labelings into S_m up to relabeling of {1, ..., m};
// canonical representative = lexicographically least assignment sequence,
// results sorted.  Backtracking with propagation; the first two branched
// arcs are symmetry-reduced.
std::vector<CompleteLabeling> hom_search(const WirtingerPresentation& P,
                                         int m);

// Lemma: a surjection to S_m with transposition meridians forces bridge
// index >= m - 1.
int bridge_lower_bound(const CompleteLabeling& labels, int m);

// |det| of the Alexander matrix at t = -1 (any (n-1)x(n-1) minor; the
// knot determinant).  1-crossing presentations give 1.
Int fox_determinant(const WirtingerPresentation& P);

// Lines "(-6, 7, 11, -9) -> (1 4)"; '#' comments and blanks skipped.
std::vector<std::pair<StrandSpec, Transposition>> parse_gens(
    const std::string& text);
std::string serialize_gens(
    const std::vector<std::pair<StrandSpec, Transposition>>& gens);

}  // namespace gordian
