#pragma once

#include <string>
#include <vector>

#include "gordian/error.hpp"

namespace gordian {

// One crossing of an oriented knot diagram.  Fields are the diagram-edge
// labels (1..2C, numbered along the traversal so that edge k ends at the
// k-th strand passage) entering and leaving the crossing on each strand.
struct Crossing {
    int under_in, under_out, over_in, over_out;
    int sign;  // +1 / -1, the usual right-handed crossing sign
};

// A combinatorial knot diagram.  Crossings are 1-based (crossings[0] is
// crossing 1).  Arcs are the maximal strands between consecutive
// under-passages, numbered by first appearance along the traversal; for a
// diagram with at least one crossing, #arcs = #crossings.
struct KnotDiagram {
    std::vector<Crossing> crossings;
    std::vector<int> edge_arc;  // 1-based edge -> 1-based arc (index 0 unused)
    int arc_count = 0;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int next_edge(int e) const { return e == edge_count() ? 1 : e + 1; }
};

// Traversal description of one arc.
struct ArcInfo {
    int arc;                        // 1-based arc id
    int begin_crossing;             // arc starts at this crossing's under-strand
    std::vector<int> over_crossings;  // crossings passed over, in order
    int end_crossing;               // arc ends under this crossing
};

// PD notation: whitespace-separated X[a,b,c,d] tuples, `#` comments, an
// optional `name:` header.  Tuple k defines crossing k.  a is the incoming
// under-edge, (b, d) the over pair, slots listed counterclockwise.
KnotDiagram parse_pd(const std::string& text);
std::string pd_code(const KnotDiagram& D);

// Signed Gauss code, one token per passage: {O|U}<crossing><+|->.
std::string gauss_code(const KnotDiagram& D);
KnotDiagram parse_gauss(const std::string& text);

// Recompute edge_arc / arc_count from the crossing list.  parse_* and the
// projection pipeline call this; it is exposed for code that assembles
// diagrams directly.
void finalize_arcs(KnotDiagram& D);

// Per-arc traversal info (begin/over/end crossings), indexed arc-1.
std::vector<ArcInfo> arc_info(const KnotDiagram& D);

}  // namespace gordian
