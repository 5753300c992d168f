#pragma once

#include <string>
#include <vector>

#include "gordian/error.hpp"
#include "gordian/ints.hpp"

namespace gordian {

// An ordered list of integer vertices describing a closed polygon in space.
struct PolygonalKnot {
    std::string name;
    std::vector<Vec3> vertices;
    int n() const { return static_cast<int>(vertices.size()); }
};

// Cyclic edge vectors e_i = v_{i+1} - v_i, with e_n = v_1 - v_n.
struct EdgeVectors {
    std::vector<Vec3> edges;
    int n() const { return static_cast<int>(edges.size()); }
};

// The 3 x n matrix whose columns are (-1)^{i+1} e_i (1-indexed): column i is
// +e_i for odd i, -e_i for even i.  Only defined for even n.
struct SignMatrix {
    std::vector<Vec3> cols;
    int n() const { return static_cast<int>(cols.size()); }
};

// File format: one integer triple per line, `#` comment lines, an optional
// `name:` header.  Errors name the offending line.
PolygonalKnot parse_polygon(const std::string& text);
std::string serialize_polygon(const PolygonalKnot& P);

EdgeVectors edge_vectors(const PolygonalKnot& P);

SignMatrix sign_matrix(const EdgeVectors& E);  // throws OddEdgeCount

// True iff v1 = 0, v2 on the positive x-axis, v3 in the xy-plane with y > 0.
bool is_posed(const PolygonalKnot& P);

// Exact pose normalization: an integer translation plus, if needed, one of
// the 24 orientation-preserving signed axis permutations.  A pose that would
// require a general (irrational) rotation is refused rather than rounded.
PolygonalKnot normalize_pose(const PolygonalKnot& P);

}  // namespace gordian
