#include "gordian/wirtinger.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gordian {

Transposition::Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y || a < 1)
        throw BadRange("not a transposition: (" + std::to_string(x) + " " +
                       std::to_string(y) + ")");
}

std::string to_string(const Transposition& t) {
    return "(" + std::to_string(t.a) + " " + std::to_string(t.b) + ")";
}

Transposition parse_transposition(const std::string& text) {
    std::string s = text;
    for (char& c : s)
        if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream in(s);
    int a, b;
    std::string extra;
    if (!(in >> a >> b) || (in >> extra))
        throw ParseError("expected a transposition \"(a b)\", got \"" + text +
                         "\"");
    return {a, b};
}

WirtingerPresentation presentation(const KnotDiagram& D) {
    WirtingerPresentation P;
    P.generators = D.arc_count;
    for (int c = 0; c < D.crossing_count(); ++c) {
        const Crossing& x = D.crossings[c];
        Relation r;
        r.over = D.edge_arc[x.over_in];
        r.in = D.edge_arc[x.under_in];
        r.out = D.edge_arc[x.under_out];
        r.sign = x.sign;
        r.crossing = c + 1;
        P.relations.push_back(r);
    }
    return P;
}

StrandSpec parse_strand_spec(const std::string& text) {
    std::string s = text;
    for (char& c : s)
        if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream in(s);
    std::vector<int> entries;
    int v;
    while (in >> v) entries.push_back(v);
    if (!in.eof())
        throw ParseError("non-integer token in strand spec \"" + text + "\"");
    if (entries.size() < 2)
        throw ParseError("strand spec needs at least begin and end: \"" + text +
                         "\"");
    if (entries.front() >= 0)
        throw ParseError("strand spec must begin with a negative (under) "
                         "crossing: \"" + text + "\"");
    if (entries.back() >= 0)
        throw ParseError("strand spec must end with a negative (under) "
                         "crossing: \"" + text + "\"");
    StrandSpec spec;
    spec.begin = -entries.front();
    spec.end = -entries.back();
    for (std::size_t i = 1; i + 1 < entries.size(); ++i) {
        if (entries[i] <= 0)
            throw ParseError("interior strand-spec entries must be positive "
                             "(over) crossings: \"" + text + "\"");
        spec.overs.push_back(entries[i]);
    }
    return spec;
}

std::string serialize_strand_spec(const StrandSpec& spec) {
    std::string out = "(-" + std::to_string(spec.begin);
    for (int o : spec.overs) out += ", " + std::to_string(o);
    out += ", -" + std::to_string(spec.end) + ")";
    return out;
}

int resolve_strand(const KnotDiagram& D, const StrandSpec& spec) {
    for (const ArcInfo& a : arc_info(D)) {
        if (a.begin_crossing == spec.begin && a.end_crossing == spec.end &&
            a.over_crossings == spec.overs)
            return a.arc;
    }
    throw UnresolvableStrand("no arc matches strand spec " +
                             serialize_strand_spec(spec));
}

StrandSpec strand_spec_of(const KnotDiagram& D, int arc) {
    std::vector<ArcInfo> info = arc_info(D);
    if (arc < 1 || arc > static_cast<int>(info.size()))
        throw BadRange("no arc " + std::to_string(arc));
    const ArcInfo& a = info[arc - 1];
    return {a.begin_crossing, a.over_crossings, a.end_crossing};
}

CompleteLabeling PropagationResult::complete() const {
    if (status != PropagationStatus::Complete)
        throw InternalContradiction("labeling is not complete");
    CompleteLabeling out;
    for (std::size_t i = 1; i < labeling.size(); ++i) out.push_back(*labeling[i]);
    return out;
}

namespace {

// One propagation pass; true if anything changed, Conflict reported via
// `conflict` (0 = none).  Exactly two inference rules: the over label is
// never derived.
bool propagate_pass(const std::vector<Relation>& relations,
                    PartialLabeling& lab, int& conflict) {
    bool changed = false;
    for (const Relation& r : relations) {
        const auto& o = lab[r.over];
        if (!o) continue;
        const auto& a = lab[r.in];
        const auto& b = lab[r.out];
        if (a) {
            Transposition want = a->conjugate(*o);
            if (b) {
                if (*b != want) {
                    conflict = r.crossing;
                    return changed;
                }
            } else {
                lab[r.out] = want;
                changed = true;
            }
        } else if (b) {
            lab[r.in] = b->conjugate(*o);
            changed = true;
        }
    }
    return changed;
}

}  // namespace

PropagationResult propagate(const WirtingerPresentation& P,
                            const PartialLabeling& partial) {
    PropagationResult res;
    res.labeling.assign(P.generators + 1, std::nullopt);
    for (std::size_t i = 0; i < partial.size() && i <= std::size_t(P.generators);
         ++i)
        res.labeling[i] = partial[i];
    res.labeling[0] = std::nullopt;

    int conflict = 0;
    while (propagate_pass(P.relations, res.labeling, conflict) && conflict == 0) {
    }
    if (conflict != 0) {
        res.status = PropagationStatus::Conflict;
        res.conflict_crossing = conflict;
        return res;
    }
    for (int arc = 1; arc <= P.generators; ++arc)
        if (!res.labeling[arc]) res.unreached.push_back(arc);
    if (!res.unreached.empty()) {
        res.status = PropagationStatus::Incomplete;
        return res;
    }
    // Completed: re-verify every relation independently of the fixpoint.
    for (const Relation& r : P.relations) {
        if (*res.labeling[r.out] !=
            res.labeling[r.in]->conjugate(*res.labeling[r.over])) {
            res.status = PropagationStatus::Conflict;
            res.conflict_crossing = r.crossing;
            return res;
        }
    }
    res.status = PropagationStatus::Complete;
    return res;
}

bool surjective(const CompleteLabeling& labels, int m) {
    if (m < 1) throw BadRange("symmetric group degree must be positive");
    std::vector<int> parent(m + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Transposition& t : labels) {
        if (t.b > m)
            throw BadRange("label " + to_string(t) + " does not live in S_" +
                           std::to_string(m));
        parent[find(t.a)] = find(t.b);
    }
    for (int p = 2; p <= m; ++p)
        if (find(p) != find(1)) return false;
    return true;
}

int bridge_lower_bound(const CompleteLabeling& labels, int m) {
    if (!surjective(labels, m))
        throw NotSurjective("labeling does not generate S_" + std::to_string(m));
    return m - 1;
}

namespace {

// Arc order for the backtracking search: breadth-first through the
// shared-relation adjacency, starting from arc 1.
std::vector<int> bfs_arc_order(const WirtingerPresentation& P) {
    int n = P.generators;
    std::vector<std::vector<int>> adj(n + 1);
    auto link = [&](int x, int y) {
        if (x != y) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
    };
    for (const Relation& r : P.relations) {
        link(r.over, r.in);
        link(r.over, r.out);
        link(r.in, r.out);
    }
    std::vector<int> order;
    std::vector<bool> seen(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::vector<int> queue{start};
        seen[start] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int arc = queue[head];
            order.push_back(arc);
            std::vector<int> next = adj[arc];
            std::sort(next.begin(), next.end());
            for (int nb : next)
                if (!seen[nb]) {
                    seen[nb] = true;
                    queue.push_back(nb);
                }
        }
    }
    return order;
}

// Lexicographically least S_m-relabeling of a complete assignment sequence.
CompleteLabeling canonical_form(const CompleteLabeling& labels, int m) {
    std::vector<int> perm(m + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<CompleteLabeling> best;
    do {
        CompleteLabeling mapped;
        mapped.reserve(labels.size());
        for (const Transposition& t : labels)
            mapped.emplace_back(perm[t.a], perm[t.b]);
        if (!best || mapped < *best) best = std::move(mapped);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return *best;
}

struct HomSearch {
    const WirtingerPresentation& P;
    int m;
    std::vector<int> order;
    std::vector<Transposition> all;  // transpositions of {1..m}, lex order
    std::set<CompleteLabeling> found;

    HomSearch(const WirtingerPresentation& Pn, int deg) : P(Pn), m(deg) {
        order = bfs_arc_order(P);
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b) all.emplace_back(a, b);
    }

    // Close the labeling under propagation; false on conflict.
    bool close(PartialLabeling& lab) const {
        int conflict = 0;
        while (propagate_pass(P.relations, lab, conflict) && conflict == 0) {
        }
        return conflict == 0;
    }

    void leaf(const PartialLabeling& lab) {
        CompleteLabeling full;
        for (int arc = 1; arc <= P.generators; ++arc) full.push_back(*lab[arc]);
        for (const Relation& r : P.relations)
            if (full[r.out - 1] != full[r.in - 1].conjugate(full[r.over - 1]))
                return;
        if (!surjective(full, m)) return;
        found.insert(canonical_form(full, m));
    }

    // `rank` counts arcs chosen by branching (not propagation) so far; the
    // first two choices are restricted to orbit representatives under the
    // relabeling symmetry.
    std::vector<Transposition> candidates(int rank) const {
        if (rank == 0) return {Transposition(1, 2)};
        if (rank == 1) {
            std::vector<Transposition> c{Transposition(1, 2)};
            if (m >= 3) c.emplace_back(1, 3);
            if (m >= 4) c.emplace_back(3, 4);
            return c;
        }
        return all;
    }

    void descend(std::size_t pos, int rank, PartialLabeling lab) {
        while (pos < order.size() && lab[order[pos]]) ++pos;
        if (pos == order.size()) {
            leaf(lab);
            return;
        }
        int arc = order[pos];
        for (const Transposition& t : candidates(rank)) {
            PartialLabeling next = lab;
            next[arc] = t;
            if (!close(next)) continue;
            descend(pos + 1, rank + 1, std::move(next));
        }
    }
};

}  // namespace

std::vector<CompleteLabeling> hom_search(const WirtingerPresentation& P,
                                         int m) {
    if (m < 2) throw BadRange("symmetric group degree must be at least 2");
    if (P.generators == 0) return {};
    HomSearch search(P, m);
    PartialLabeling empty(P.generators + 1, std::nullopt);
    search.descend(0, 0, std::move(empty));
    return {search.found.begin(), search.found.end()};
}

Int fox_determinant(const WirtingerPresentation& P) {
    int n = P.generators;
    if (n < 1 || P.relations.empty())
        throw BadRange("Fox determinant needs at least one crossing");
    // Alexander matrix at t = -1: each relation contributes +2 on the over
    // arc and -1 on each of the in/out arcs (independent of crossing sign).
    std::vector<std::vector<Int>> M(P.relations.size(),
                                    std::vector<Int>(n, Int(0)));
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
        M[r][P.relations[r].over - 1] += 2;
        M[r][P.relations[r].in - 1] -= 1;
        M[r][P.relations[r].out - 1] -= 1;
    }
    // Delete the last row and column, then Bareiss fraction-free elimination.
    int k = n - 1;
    if (k == 0) return Int(1);
    std::vector<std::vector<Int>> A(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) A[i][j] = M[i][j];
    Int prev(1);
    int sign = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (A[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Int(0);
        if (pivot != col) {
            std::swap(A[pivot], A[col]);
            sign = -sign;
        }
        for (int row = col + 1; row < k; ++row) {
            for (int j = col + 1; j < k; ++j)
                A[row][j] = (A[col][col] * A[row][j] - A[row][col] * A[col][j]) /
                            prev;
            A[row][col] = 0;
        }
        prev = A[col][col];
    }
    Int det = sign * A[k - 1][k - 1];
    return det < 0 ? -det : det;
}

std::vector<std::pair<StrandSpec, Transposition>> parse_gens(
    const std::string& text) {
    std::vector<std::pair<StrandSpec, Transposition>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::size_t arrow = body.find("->");
        if (arrow == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected \"<strand-spec> -> (a b)\"");
        out.emplace_back(parse_strand_spec(body.substr(0, arrow)),
                         parse_transposition(body.substr(arrow + 2)));
    }
    return out;
}

std::string serialize_gens(
    const std::vector<std::pair<StrandSpec, Transposition>>& gens) {
    std::string out;
    for (const auto& [spec, t] : gens)
        out += serialize_strand_spec(spec) + " -> " + to_string(t) + "\n";
    return out;
}

}  // namespace gordian
