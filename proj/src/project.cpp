#include "gordian/project.hpp"

#include <algorithm>
#include <utility>

namespace gordian {

namespace {

struct Vec2 {
    Int x, y;
};
inline Vec2 sub2(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
}
inline Int cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// A transverse crossing of the projections of polygon edges i < j.
struct PairCrossing {
    int i, j;
    Rat si, sj;      // parameters along edge i / edge j, strictly in (0,1)
    bool i_over;     // true iff edge i passes over edge j
    int sign;        // right-handed crossing sign
    Rat px, py;      // exact projected intersection point (scaled 2D coords)
};

struct Scan {
    bool ok = false;
    std::string failed_predicate;
    std::string detail;
    std::vector<PairCrossing> crossings;
};

// 2D coordinates that are exact linear functionals of the 3D position:
// alpha(x) = det[x, q, w], beta(x) = det[p, x, w] for a fixed positively
// oriented frame (p, q, w).  Then det2 of projected difference vectors
// equals det[p,q,w] * det3(.,.,w) > 0 times the 3D sign, so 2D orientation
// tests can be done directly as integer 3x3 determinants.
struct Frame {
    Vec3 p, q;
    explicit Frame(const Vec3& w) {
        static const Vec3 axes[3] = {{Int(1), Int(0), Int(0)},
                                     {Int(0), Int(1), Int(0)},
                                     {Int(0), Int(0), Int(1)}};
        for (int k = 0; k < 3; ++k) {
            Int D = det3(axes[k], axes[(k + 1) % 3], w);
            if (D != 0) {
                p = axes[k];
                q = axes[(k + 1) % 3];
                if (D < 0) std::swap(p, q);
                return;
            }
        }
        throw NoGenericProjection("zero projection direction");
    }
    Vec2 project(const Vec3& x, const Vec3& w) const {
        return {det3(x, q, w), det3(p, x, w)};
    }
};

Scan scan_pairs(const std::vector<Vec3>& V, const std::vector<Vec3>& E,
                const Vec3& w) {
    int n = static_cast<int>(V.size());
    Scan scan;
    Frame frame(w);
    std::vector<Vec2> pv;
    pv.reserve(n);
    for (const Vec3& v : V) pv.push_back(frame.project(v, w));

    for (int i = 0; i < n; ++i) {
        if (is_zero(cross(E[i], w))) {
            scan.failed_predicate = "edge not parallel to direction";
            scan.detail = "edge " + std::to_string(i + 1);
            return scan;
        }
    }
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        if (det3(E[i], E[j], w) == 0 && !is_zero(cross(E[i], E[j]))) {
            scan.failed_predicate = "adjacent projected edges transverse";
            scan.detail = "edges " + std::to_string(i + 1) + "," +
                          std::to_string(j + 1);
            return scan;
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            const Vec3 &a = V[i], &c = V[j];
            Int o1 = det3(E[i], c - a, w);
            Int o2 = det3(E[i], V[(j + 1) % n] - a, w);
            Int o3 = det3(E[j], a - c, w);
            Int o4 = det3(E[j], V[(i + 1) % n] - c, w);
            std::string pair_name =
                "edges " + std::to_string(i + 1) + "," + std::to_string(j + 1);
            if (o1 == 0 && o2 == 0) {
                // Projections are collinear; degenerate only if they overlap.
                Vec2 A = pv[i], B = pv[(i + 1) % n];
                Vec2 C = pv[j], D2 = pv[(j + 1) % n];
                Vec2 dir = sub2(B, A);
                bool use_x = dir.x != 0;
                auto coord = [&](const Vec2& P2) { return use_x ? P2.x : P2.y; };
                Int lo1 = std::min(coord(A), coord(B)),
                    hi1 = std::max(coord(A), coord(B));
                Int lo2 = std::min(coord(C), coord(D2)),
                    hi2 = std::max(coord(C), coord(D2));
                if (std::max(lo1, lo2) <= std::min(hi1, hi2)) {
                    scan.failed_predicate = "no collinear edge overlap";
                    scan.detail = pair_name;
                    return scan;
                }
                continue;
            }
            bool touch1 = o1 * o2 <= 0, touch2 = o3 * o4 <= 0;
            if (!(touch1 && touch2)) continue;  // projections disjoint
            if (!(o1 * o2 < 0 && o3 * o4 < 0)) {
                scan.failed_predicate = "crossings transverse and interior";
                scan.detail = pair_name;
                return scan;
            }
            // Proper crossing: solve A + s r = C + t u in the 2D coords.
            Vec2 A = pv[i], C = pv[j];
            Vec2 r = sub2(pv[(i + 1) % n], A), u = sub2(pv[(j + 1) % n], C);
            Int denom = cross2(r, u);
            Rat s = Rat(cross2(sub2(C, A), u)) / Rat(denom);
            Rat t = Rat(cross2(sub2(C, A), r)) / Rat(denom);
            Rat depth_i = Rat(dot(w, a)) + s * Rat(dot(w, E[i]));
            Rat depth_j = Rat(dot(w, c)) + t * Rat(dot(w, E[j]));
            if (depth_i == depth_j) {
                scan.failed_predicate = "distinct depths at crossings";
                scan.detail = pair_name;
                return scan;
            }
            PairCrossing pc;
            pc.i = i;
            pc.j = j;
            pc.si = s;
            pc.sj = t;
            pc.i_over = depth_i > depth_j;
            const Vec3& over = pc.i_over ? E[i] : E[j];
            const Vec3& under = pc.i_over ? E[j] : E[i];
            pc.sign = det3(over, under, w) > 0 ? +1 : -1;
            pc.px = Rat(A.x) + s * Rat(r.x);
            pc.py = Rat(A.y) + s * Rat(r.y);
            scan.crossings.push_back(pc);
        }
    }

    for (std::size_t a = 0; a < scan.crossings.size(); ++a) {
        for (std::size_t b = a + 1; b < scan.crossings.size(); ++b) {
            if (scan.crossings[a].px == scan.crossings[b].px &&
                scan.crossings[a].py == scan.crossings[b].py) {
                scan.failed_predicate = "no triple points";
                scan.detail = "crossing pair " + std::to_string(a + 1) + "," +
                              std::to_string(b + 1);
                return scan;
            }
        }
    }
    scan.ok = true;
    return scan;
}

KnotDiagram assemble(const std::vector<PairCrossing>& crossings, int n) {
    // Passages along the curve: edge by edge, ordered by the parameter.
    struct Passage {
        int pair;    // index into crossings
        bool first;  // true if this is the edge-i passage of the pair
    };
    std::vector<std::vector<std::pair<Rat, Passage>>> per_edge(n);
    for (int k = 0; k < static_cast<int>(crossings.size()); ++k) {
        per_edge[crossings[k].i].push_back({crossings[k].si, {k, true}});
        per_edge[crossings[k].j].push_back({crossings[k].sj, {k, false}});
    }
    std::vector<Passage> order;
    for (int e = 0; e < n; ++e) {
        std::sort(per_edge[e].begin(), per_edge[e].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& item : per_edge[e]) order.push_back(item.second);
    }

    int total = static_cast<int>(order.size());  // = 2C
    // Crossings numbered by first passage along the curve.
    std::vector<int> number(crossings.size(), 0);
    int next_number = 0;
    for (const Passage& p : order)
        if (number[p.pair] == 0) number[p.pair] = ++next_number;

    KnotDiagram D;
    D.crossings.assign(crossings.size(), Crossing{});
    for (int pos = 1; pos <= total; ++pos) {
        const Passage& p = order[pos - 1];
        const PairCrossing& pc = crossings[p.pair];
        Crossing& c = D.crossings[number[p.pair] - 1];
        bool over = p.first == pc.i_over;
        if (over) {
            c.over_in = pos;
            c.over_out = (pos % total) + 1;
        } else {
            c.under_in = pos;
            c.under_out = (pos % total) + 1;
        }
        c.sign = pc.sign;
    }
    finalize_arcs(D);
    return D;
}

}  // namespace

ProjectionResult project(const PolygonalKnot& P, std::optional<Vec3> hint) {
    const std::vector<Vec3>& V = P.vertices;
    int n = P.n();
    std::vector<Vec3> E;
    for (int i = 0; i < n; ++i) E.push_back(V[(i + 1) % n] - V[i]);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (!adjacent && V[i] == V[j])
                throw NoGenericProjection(
                    "coincident non-consecutive vertices " +
                    std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
    }
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        if (is_zero(cross(E[i], E[j])) && dot(E[i], E[j]) < 0)
            throw NoGenericProjection("polygon doubles back at vertex " +
                                      std::to_string(j + 1));
    }

    // Planar input: view along the plane normal; any contact between
    // nonadjacent projected edges is a genuine self-contact of the curve.
    Vec3 normal{Int(0), Int(0), Int(0)};
    for (int i = 1; i < n && is_zero(normal); ++i)
        for (int j = i + 1; j < n && is_zero(normal); ++j)
            normal = cross(V[i] - V[0], V[j] - V[0]);
    if (is_zero(normal)) throw PlanarInput("all vertices are collinear");
    bool planar = true;
    for (int i = 0; i < n; ++i)
        if (dot(V[i] - V[0], normal) != 0) planar = false;
    if (planar) {
        Scan scan = scan_pairs(V, E, normal);
        if (!scan.ok || !scan.crossings.empty())
            throw PlanarInput("planar polygon with self-contacts");
        ProjectionResult res;
        res.diagram = KnotDiagram{};
        finalize_arcs(res.diagram);
        res.pose.direction = normal;
        res.pose.checks.push_back(
            {"planar input without self-contacts", true, "unknot diagram"});
        return res;
    }

    Vec3 base = hint.value_or(Vec3{Int(0), Int(0), Int(1)});
    const Vec3 step1{Int(1), Int(3), Int(0)};
    const Vec3 step2{Int(0), Int(1), Int(7)};
    std::vector<PoseCheck> attempts;
    for (int k = 0; k < 64; ++k) {
        Vec3 w = base + Int(k) * step1 + Int(k) * Int(k) * step2;
        if (is_zero(w)) continue;
        Scan scan = scan_pairs(V, E, w);
        if (!scan.ok) {
            attempts.push_back({scan.failed_predicate, false,
                                to_string(w) + ": " + scan.detail});
            continue;
        }
        ProjectionResult res;
        res.diagram = assemble(scan.crossings, n);
        res.pose.direction = w;
        res.pose.schedule_index = k;
        res.pose.checks = std::move(attempts);
        res.pose.checks.push_back({"edge not parallel to direction", true, ""});
        res.pose.checks.push_back({"adjacent projected edges transverse", true, ""});
        res.pose.checks.push_back({"crossings transverse and interior", true, ""});
        res.pose.checks.push_back({"distinct depths at crossings", true, ""});
        res.pose.checks.push_back({"no triple points", true, ""});
        res.pose.checks.push_back(
            {"crossing count", true,
             std::to_string(res.diagram.crossing_count()) + " crossings"});
        return res;
    }
    throw NoGenericProjection(
        "no generic direction in the perturbation schedule; the polygon may "
        "self-intersect");
}

}  // namespace gordian
