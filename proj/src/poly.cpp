#include "gordian/poly.hpp"

#include <sstream>

namespace gordian {

namespace {

bool integer_token(const std::string& t) {
    std::size_t i = (t.size() > 1 && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
    return true;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

PolygonalKnot parse_polygon(const std::string& text) {
    PolygonalKnot P;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("name:", 0) == 0) {
            P.name = strip(line.substr(5));
            continue;
        }
        std::istringstream row(line);
        std::string tx, ty, tz, extra;
        row >> tx >> ty >> tz;
        if (tz.empty())
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected three integers");
        if (row >> extra)
            throw ParseError("line " + std::to_string(lineno) +
                             ": trailing token '" + extra + "'");
        for (const std::string& t : {tx, ty, tz})
            if (!integer_token(t))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": non-integer token '" + t + "'");
        P.vertices.push_back({Int(tx), Int(ty), Int(tz)});
    }
    if (P.n() < 3)
        throw ParseError("polygon needs at least 3 vertices, got " +
                         std::to_string(P.n()));
    for (int i = 0; i < P.n(); ++i) {
        int j = (i + 1) % P.n();
        if (is_zero(P.vertices[j] - P.vertices[i]))
            throw ParseError("zero edge between vertices " +
                             std::to_string(i + 1) + " and " +
                             std::to_string(j + 1));
    }
    return P;
}

std::string serialize_polygon(const PolygonalKnot& P) {
    std::ostringstream out;
    if (!P.name.empty()) out << "name: " << P.name << "\n";
    for (const Vec3& v : P.vertices)
        out << v[0] << " " << v[1] << " " << v[2] << "\n";
    return out.str();
}

EdgeVectors edge_vectors(const PolygonalKnot& P) {
    EdgeVectors E;
    for (int i = 0; i < P.n(); ++i)
        E.edges.push_back(P.vertices[(i + 1) % P.n()] - P.vertices[i]);
    return E;
}

SignMatrix sign_matrix(const EdgeVectors& E) {
    if (E.n() % 2 != 0)
        throw OddEdgeCount("sign matrix needs an even edge count, got " +
                           std::to_string(E.n()));
    SignMatrix M;
    for (int i = 0; i < E.n(); ++i)
        M.cols.push_back(i % 2 == 0 ? E.edges[i] : -E.edges[i]);
    return M;
}

bool is_posed(const PolygonalKnot& P) {
    if (P.n() < 3) return false;
    const Vec3& a = P.vertices[0];
    const Vec3& b = P.vertices[1];
    const Vec3& c = P.vertices[2];
    return is_zero(a) && b[0] > 0 && b[1] == 0 && b[2] == 0 && c[1] > 0 &&
           c[2] == 0;
}

PolygonalKnot normalize_pose(const PolygonalKnot& P) {
    PolygonalKnot Q = P;
    Vec3 shift = P.vertices[0];
    for (Vec3& v : Q.vertices) v = v - shift;
    if (is_zero(cross(Q.vertices[1], Q.vertices[2])))
        throw CollinearFrame("first three vertices are collinear");
    if (is_posed(Q)) return Q;

    // Search the 24 proper signed axis permutations for one that lands
    // v2 on the positive x-axis and v3 in the upper xy half-plane.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int perm_sign[6] = {+1, -1, -1, +1, +1, -1};
    for (int p = 0; p < 6; ++p) {
        for (int mask = 0; mask < 8; ++mask) {
            int s[3] = {(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1,
                        (mask & 4) ? -1 : 1};
            if (perm_sign[p] * s[0] * s[1] * s[2] != 1) continue;  // rotation only
            auto apply = [&](const Vec3& v) -> Vec3 {
                return {Int(s[0]) * v[perms[p][0]], Int(s[1]) * v[perms[p][1]],
                        Int(s[2]) * v[perms[p][2]]};
            };
            Vec3 b = apply(Q.vertices[1]);
            Vec3 c = apply(Q.vertices[2]);
            if (b[0] > 0 && b[1] == 0 && b[2] == 0 && c[1] > 0 && c[2] == 0) {
                PolygonalKnot R = Q;
                for (Vec3& v : R.vertices) v = apply(v);
                return R;
            }
        }
    }
    throw UnsupportedRotation(
        "pose requires a general rotation; only exact integer translations "
        "and axis rotations are supported");
}

}  // namespace gordian
