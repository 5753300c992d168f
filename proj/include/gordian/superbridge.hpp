#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gordian/gordan.hpp"
#include "gordian/poly.hpp"

namespace gordian {

// A generic direction v together with its descent count
// b_v = #{ i : e_i . v > 0 and e_{i+1} . v < 0 } (cyclic).
struct DirectionWitness {
    Vec3 v;
    int count;
    std::vector<int> signs;  // sign(e_i . v), one per edge, each +1/-1
};

struct SbBound {
    enum Kind { UpperRealization, LowerRealization } kind;
    int value;
    std::string provenance;
    std::optional<GordanCertificate> cert;
};

// Throws NonGenericDirection naming the first edge orthogonal to v.
DirectionWitness bridge_count(const EdgeVectors& E, const Vec3& v);

// Deterministic maximal-count search: all chamber-adjacent candidates
// K (e_i x e_j) + a e_i + b e_j (a, b in {+-1, +-2}, K large enough that the
// perturbation cannot flip any other edge's sign), plus `budget` seeded
// random integer directions.  Ties break toward the canonically smallest
// direction, so the result is independent of evaluation order.
DirectionWitness witness_search(const PolygonalKnot& P, int budget,
                                std::uint64_t seed);

// Cor-12 bound: a certificate for the sign matrix proves sb(gamma) <= n/2-1;
// absence proves sb(gamma) = n/2 exactly.
std::optional<SbBound> upper_bound_from_certificate(const PolygonalKnot& P);

int jin_bound(int n);                    // floor(n / 2), n >= 3
int torus_superbridge(int p, int q);     // min(2p, q), 2 <= p < q coprime
int adams_bound(int bridge_index);       // 3 b - 1, b >= 1

}  // namespace gordian
