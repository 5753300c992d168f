#include "gordian/superbridge.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gordian {

DirectionWitness bridge_count(const EdgeVectors& E, const Vec3& v) {
    int n = E.n();
    DirectionWitness w{v, 0, {}};
    w.signs.reserve(n);
    for (int i = 0; i < n; ++i) {
        Int d = dot(E.edges[i], v);
        if (d == 0)
            throw NonGenericDirection(
                "direction is orthogonal to edge " + std::to_string(i + 1), i + 1);
        w.signs.push_back(d > 0 ? 1 : -1);
    }
    for (int i = 0; i < n; ++i)
        if (w.signs[i] > 0 && w.signs[(i + 1) % n] < 0) ++w.count;
    return w;
}

namespace {

// Order used for deterministic tie-breaking between equal-count witnesses.
bool canonical_less(const Vec3& a, const Vec3& b) {
    for (int k = 0; k < 3; ++k) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
}

}  // namespace

DirectionWitness witness_search(const PolygonalKnot& P, int budget,
                                std::uint64_t seed) {
    EdgeVectors E = edge_vectors(P);
    int n = E.n();

    // Magnitude bound: every |e_i . (a e_j + b e_k)| with |a|,|b| <= 2 is at
    // most 12 M^2 where M bounds the edge coordinates, so scaling the cross
    // product by K > 12 M^2 keeps every nonzero sign e_i . (e_j x e_k)
    // intact under the perturbation.
    Int M = 1;
    for (const Vec3& e : E.edges)
        for (const Int& c : e)
            if (abs(c) > M) M = abs(c);
    Int K = 12 * M * M + 1;

    bool have_best = false;
    int best_count = -1;
    Vec3 best_dir{Int(0), Int(0), Int(0)};

    auto consider = [&](const Vec3& cand) {
        if (is_zero(cand)) return;
        Vec3 c = sign_canonical(cand);  // b_v = b_{-v}, so this is safe
        try {
            DirectionWitness w = bridge_count(E, c);
            if (!have_best || w.count > best_count ||
                (w.count == best_count && canonical_less(c, best_dir))) {
                have_best = true;
                best_count = w.count;
                best_dir = c;
            }
        } catch (const NonGenericDirection&) {
            // skip non-generic candidates
        }
    };

    static const int steps[4] = {-2, -1, 1, 2};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Vec3 base = cross(E.edges[i], E.edges[j]);
            if (is_zero(base)) continue;
            for (int s = 0; s < 2; ++s) {
                Vec3 scaled = (s == 0 ? K : -K) * base;
                for (int a : steps)
                    for (int b : steps)
                        consider(scaled + Int(a) * E.edges[i] +
                                 Int(b) * E.edges[j]);
            }
        }
    }

    SplitMix64 rng(seed);
    for (int t = 0; t < budget; ++t) {
        Vec3 r{Int(rng.uniform(-1000000, 1000000)),
               Int(rng.uniform(-1000000, 1000000)),
               Int(rng.uniform(-1000000, 1000000))};
        consider(r);
    }

    if (!have_best)
        throw NoGenericDirectionFound(
            "no generic direction found; edge set is degenerate");
    return bridge_count(E, best_dir);
}

std::optional<SbBound> upper_bound_from_certificate(const PolygonalKnot& P) {
    EdgeVectors E = edge_vectors(P);
    SignMatrix M = sign_matrix(E);  // throws OddEdgeCount for odd n
    GordanVerdict verdict = gordan_check(M);
    if (!verdict.certificate_branch) return std::nullopt;
    SbBound bound;
    bound.kind = SbBound::UpperRealization;
    bound.value = E.n() / 2 - 1;
    bound.provenance = "Cor12";
    bound.cert = verdict.cert;
    return bound;
}

int jin_bound(int n) {
    if (n < 3) throw BadRange("edge count must be at least 3");
    return n / 2;
}

int torus_superbridge(int p, int q) {
    if (p < 2 || p >= q) throw BadRange("need 2 <= p < q");
    if (boost::multiprecision::gcd(Int(p), Int(q)) != 1)
        throw NotCoprime("p and q must be coprime");
    return std::min(2 * p, q);
}

int adams_bound(int bridge_index) {
    if (bridge_index < 1) throw BadRange("bridge index must be at least 1");
    return 3 * bridge_index - 1;
}

}  // namespace gordian
