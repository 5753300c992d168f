#include "gordian/gordan.hpp"

#include <sstream>

namespace gordian {

namespace {

// ---------------------------------------------------------------------------
// Exact rational simplex, tableau form, maximizing c.x over {A x = b, x >= 0}.
// Bland's smallest-index rule everywhere, which guarantees termination.
// Sizes here are tiny (<= ~15 rows, ~25 columns), so no effort is spent on
// sparsity or revised-form updates.
// ---------------------------------------------------------------------------

struct SimplexOutcome {
    bool feasible = false;
    bool bounded = true;
    std::vector<Rat> x;  // structural variables only
    Rat value = 0;
};

struct Tableau {
    int m, n;                        // rows, columns currently in play
    std::vector<std::vector<Rat>> A; // m x n, kept as B^{-1} A
    std::vector<Rat> b;              // m, = B^{-1} b, invariant >= 0
    std::vector<Rat> z;              // n reduced costs (maximization)
    Rat value = 0;                   // current objective value
    std::vector<int> basis;          // m, column basic in each row

    void pivot(int r, int j) {
        Rat p = A[r][j];
        for (int k = 0; k < n; ++k) A[r][k] /= p;
        b[r] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || A[i][j] == 0) continue;
            Rat f = A[i][j];
            for (int k = 0; k < n; ++k) A[i][k] -= f * A[r][k];
            b[i] -= f * b[r];
        }
        if (z[j] != 0) {
            Rat f = z[j];
            for (int k = 0; k < n; ++k) z[k] -= f * A[r][k];
            value += f * b[r];
        }
        basis[r] = j;
    }

    // Returns true on optimality, false on unboundedness.
    bool run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (z[j] > 0) { enter = j; break; }  // Bland: smallest index
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (A[i][enter] <= 0) continue;
                Rat ratio = b[i] / A[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

// Reduced costs for the current basis from scratch: z = c - c_B B^{-1} A.
void load_costs(Tableau& T, const std::vector<Rat>& c) {
    T.z.assign(T.n, 0);
    T.value = 0;
    for (int j = 0; j < T.n; ++j) T.z[j] = j < (int)c.size() ? c[j] : Rat(0);
    for (int i = 0; i < T.m; ++i) {
        Rat cb = T.basis[i] < (int)c.size() ? c[T.basis[i]] : Rat(0);
        if (cb == 0) continue;
        for (int j = 0; j < T.n; ++j) T.z[j] -= cb * T.A[i][j];
        T.value += cb * T.b[i];
    }
}

SimplexOutcome simplex_max(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                           const std::vector<Rat>& c) {
    int m = static_cast<int>(A.size());
    int n_struct = m == 0 ? 0 : static_cast<int>(A[0].size());
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& a : A[i]) a = -a;
            b[i] = -b[i];
        }
    }

    // Phase 1: artificial basis, maximize -(sum of artificials).
    Tableau T;
    T.m = m;
    T.n = n_struct + m;
    T.A.assign(m, std::vector<Rat>(T.n, 0));
    T.b = b;
    T.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n_struct; ++j) T.A[i][j] = A[i][j];
        T.A[i][n_struct + i] = 1;
        T.basis[i] = n_struct + i;
    }
    std::vector<Rat> phase1(T.n, 0);
    for (int i = 0; i < m; ++i) phase1[n_struct + i] = -1;
    load_costs(T, phase1);
    if (!T.run())
        throw InternalContradiction("phase-1 simplex reported unbounded");
    SimplexOutcome out;
    if (T.value < 0) return out;  // infeasible

    // Drive artificials out of the basis; a row where that is impossible is
    // redundant and dropped.
    for (int i = 0; i < T.m;) {
        if (T.basis[i] < n_struct) { ++i; continue; }
        int j = 0;
        while (j < n_struct && T.A[i][j] == 0) ++j;
        if (j < n_struct) {
            T.pivot(i, j);
            ++i;
        } else {
            T.A.erase(T.A.begin() + i);
            T.b.erase(T.b.begin() + i);
            T.basis.erase(T.basis.begin() + i);
            --T.m;
            m = T.m;
        }
    }

    // Phase 2 on the structural columns only.
    for (int i = 0; i < T.m; ++i) T.A[i].resize(n_struct);
    T.n = n_struct;
    load_costs(T, c);
    bool bounded = T.run();

    out.feasible = true;
    out.bounded = bounded;
    out.x.assign(n_struct, 0);
    for (int i = 0; i < T.m; ++i)
        if (T.basis[i] < n_struct) out.x[T.basis[i]] = T.b[i];
    out.value = T.value;
    return out;
}

}  // namespace

GordanCertificate canonicalize(const std::vector<Rat>& u) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    if (u.empty()) throw ZeroVector("empty vector");
    bool some_positive = false;
    Int L = 1;
    for (const Rat& q : u) {
        if (q < 0) throw NegativeEntry("negative entry " + q.str());
        if (q > 0) some_positive = true;
        L = lcm(L, denominator(q));
    }
    if (!some_positive) throw ZeroVector("zero vector is not a certificate");
    GordanCertificate cert;
    Int g = 0;
    for (const Rat& q : u) {
        Int v = numerator(q) * (L / denominator(q));
        g = gcd(g, v);
        cert.u.push_back(v);
    }
    for (Int& v : cert.u) v /= g;
    return cert;
}

VerifyReport verify_certificate(const SignMatrix& E, const GordanCertificate& u) {
    if (u.n() != E.n())
        throw DimensionMismatch("certificate length " + std::to_string(u.n()) +
                                " vs " + std::to_string(E.n()) + " columns");
    VerifyReport rep{true, {Int(0), Int(0), Int(0)}, ""};
    bool some_positive = false;
    for (int j = 0; j < E.n(); ++j) {
        if (u.u[j] < 0) {
            rep.ok = false;
            rep.reason = "entry " + std::to_string(j + 1) + " is negative";
        }
        if (u.u[j] > 0) some_positive = true;
        rep.residual = rep.residual + u.u[j] * E.cols[j];
    }
    if (!some_positive) {
        rep.ok = false;
        if (rep.reason.empty()) rep.reason = "zero vector";
    }
    if (!is_zero(rep.residual)) {
        rep.ok = false;
        if (rep.reason.empty()) rep.reason = "nonzero residual " + to_string(rep.residual);
    }
    return rep;
}

std::optional<GordanCertificate> find_certificate(const SignMatrix& E) {
    int n = E.n();
    // Rows: the three components of E u = 0, plus the normalization
    // sum(u) = 1 that makes the cone problem a bounded feasibility problem.
    std::vector<std::vector<Rat>> A(4, std::vector<Rat>(n, 0));
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < 3; ++r) A[r][j] = Rat(E.cols[j][r]);
        A[3][j] = 1;
    }
    std::vector<Rat> b = {0, 0, 0, 1};
    std::vector<Rat> c(n, 0);
    SimplexOutcome out = simplex_max(A, b, c);
    if (!out.feasible) return std::nullopt;
    GordanCertificate cert = canonicalize(out.x);
    if (!verify_certificate(E, cert).ok)
        throw InternalContradiction("simplex produced a non-verifying certificate");
    return cert;
}

std::optional<DirectionVector> find_direction(const SignMatrix& E) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    int n = E.n();
    // Maximize t with v . col_j >= t and v in [-1,1]^3.  Substituting
    // w = v + (1,1,1) in [0,2]^3 and t = tp - tm gives the standard form
    //   sum_k w_k c_kj - tp + tm - s_j = sum_k c_kj   (slack s_j >= 0)
    //   w_k + r_k = 2                                 (box slack r_k >= 0)
    // The optimum exists (the box bounds t) and (v,t) = (0,0) is feasible,
    // so the LP value is >= 0; a witness exists iff it is > 0.
    int vars = 3 + 2 + n + 3;
    std::vector<std::vector<Rat>> A(n + 3, std::vector<Rat>(vars, 0));
    std::vector<Rat> b(n + 3, 0);
    for (int j = 0; j < n; ++j) {
        Rat sigma = 0;
        for (int k = 0; k < 3; ++k) {
            A[j][k] = Rat(E.cols[j][k]);
            sigma += Rat(E.cols[j][k]);
        }
        A[j][3] = -1;         // tp
        A[j][4] = 1;          // tm
        A[j][5 + j] = -1;     // s_j
        b[j] = sigma;
    }
    for (int k = 0; k < 3; ++k) {
        A[n + k][k] = 1;
        A[n + k][5 + n + k] = 1;
        b[n + k] = 2;
    }
    std::vector<Rat> c(vars, 0);
    c[3] = 1;
    c[4] = -1;
    SimplexOutcome out = simplex_max(A, b, c);
    if (!out.feasible || !out.bounded)
        throw InternalContradiction("margin LP must be feasible and bounded");
    if (out.value <= 0) return std::nullopt;

    std::array<Rat, 3> v;
    Int L = 1;
    for (int k = 0; k < 3; ++k) {
        v[k] = out.x[k] - 1;
        L = lcm(L, denominator(v[k]));
    }
    Vec3 w;
    for (int k = 0; k < 3; ++k) w[k] = numerator(v[k]) * (L / denominator(v[k]));
    Int g = vec_gcd(w);
    if (g > 1) w = {w[0] / g, w[1] / g, w[2] / g};
    for (int j = 0; j < n; ++j)
        if (dot(w, E.cols[j]) <= 0)
            throw InternalContradiction("direction fails strict positivity");
    return DirectionVector{w};
}

GordanVerdict gordan_check(const SignMatrix& E) {
    auto cert = find_certificate(E);
    auto dir = find_direction(E);
    if (cert.has_value() == dir.has_value())
        throw InternalContradiction(
            cert ? "both Gordan branches produced witnesses"
                 : "neither Gordan branch produced a witness");
    GordanVerdict v;
    v.certificate_branch = cert.has_value();
    v.cert = cert;
    v.dir = dir;
    return v;
}

GordanCertificate parse_certificate(const std::string& text) {
    GordanCertificate cert;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream row(line);
        std::string tok;
        while (row >> tok) {
            bool ok = !tok.empty();
            for (std::size_t i = (tok[0] == '-' ? 1 : 0); i < tok.size(); ++i)
                if (tok[i] < '0' || tok[i] > '9') ok = false;
            if (!ok)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": non-integer token '" + tok + "'");
            cert.u.push_back(Int(tok));
        }
    }
    if (cert.u.empty()) throw ParseError("empty certificate file");
    return cert;
}

std::string serialize_certificate(const GordanCertificate& cert) {
    std::ostringstream out;
    for (const Int& v : cert.u) out << v << "\n";
    return out.str();
}

}  // namespace gordian
