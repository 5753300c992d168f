#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gordian/poly.hpp"

namespace gordian {

// A nonzero nonnegative integer vector u with E u = 0, stored with coprime
// entries (canonical form).
struct GordanCertificate {
    std::vector<Int> u;
    int n() const { return static_cast<int>(u.size()); }
};

// An integer direction v whose dot product with every column of E is
// strictly positive.  Stored gcd-reduced with its orientation preserved:
// negating it would destroy the witness property.
struct DirectionVector {
    Vec3 v;
};

struct VerifyReport {
    bool ok;
    Vec3 residual;       // E u, exact
    std::string reason;  // empty when ok
};

// Exactly one branch is populated (Gordan's alternative).
struct GordanVerdict {
    bool certificate_branch;
    std::optional<GordanCertificate> cert;
    std::optional<DirectionVector> dir;
};

VerifyReport verify_certificate(const SignMatrix& E, const GordanCertificate& u);

// Exact phase-1 simplex (Bland's rule) on {E u = 0, sum(u) = 1, u >= 0};
// absent iff that system is infeasible.
std::optional<GordanCertificate> find_certificate(const SignMatrix& E);

// Exact LP maximizing the margin t subject to v . col_j >= t, -1 <= v_k <= 1;
// a witness exists iff the optimum is strictly positive.
std::optional<DirectionVector> find_direction(const SignMatrix& E);

// Runs both searches and asserts the exclusivity of the alternative.
GordanVerdict gordan_check(const SignMatrix& E);

// Clear denominators by their lcm and divide by the gcd; idempotent.
GordanCertificate canonicalize(const std::vector<Rat>& u);

// Certificate file format: one integer per line, `#` comments.
GordanCertificate parse_certificate(const std::string& text);
std::string serialize_certificate(const GordanCertificate& u);

}  // namespace gordian
