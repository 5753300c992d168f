#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gordian {

// All arithmetic in the certificate pipeline is exact: arbitrary-precision
// integers for geometry and rationals for pivoting.  No floating point
// participates in any decision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec3 = std::array<Int, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec3 operator*(const Int& k, const Vec3& a) {
    return {k * a[0], k * a[1], k * a[2]};
}

inline Int dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}
inline Int det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return dot(a, cross(b, c));
}
inline bool is_zero(const Vec3& a) {
    return a[0] == 0 && a[1] == 0 && a[2] == 0;
}

inline Int vec_gcd(const Vec3& a) {
    using boost::multiprecision::gcd;
    Int g = gcd(gcd(abs(a[0]), abs(a[1])), abs(a[2]));
    return g;
}

// Divide out the content; the zero vector is returned unchanged.
inline Vec3 reduced(const Vec3& a) {
    Int g = vec_gcd(a);
    if (g == 0) return a;
    return {a[0] / g, a[1] / g, a[2] / g};
}

// Reduced form with the first nonzero entry positive.  Only meaningful for
// quantities invariant under v -> -v (e.g. descent counts); a Gordan
// direction witness must keep its orientation.
inline Vec3 sign_canonical(const Vec3& a) {
    Vec3 r = reduced(a);
    for (int k = 0; k < 3; ++k) {
        if (r[k] != 0) return r[k] > 0 ? r : -r;
    }
    return r;
}

inline std::string to_string(const Vec3& a) {
    return "(" + a[0].str() + ", " + a[1].str() + ", " + a[2].str() + ")";
}

// Deterministic 64-bit generator (splitmix64).  Used wherever tests or the
// witness search need reproducible random draws; identical streams on every
// platform, unlike the standard-library distributions.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Uniform draw from [lo, hi], inclusive.  The modulo bias is irrelevant
    // here; determinism is the contract.
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace gordian
