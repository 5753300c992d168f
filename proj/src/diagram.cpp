#include "gordian/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gordian {

namespace {

std::string strip_comments(const std::string& text) {
    std::ostringstream out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.rfind("name:", 0) == 0) continue;
        out << line << "\n";
    }
    return out.str();
}

// Where edge e terminates: the crossing at whose passage it ends, and
// whether that passage goes under.
struct Head {
    int crossing;  // 1-based
    bool under;
};

std::vector<Head> edge_heads(const KnotDiagram& D) {
    std::vector<Head> head(D.edge_count() + 1, {0, false});
    for (int x = 0; x < D.crossing_count(); ++x) {
        const Crossing& c = D.crossings[x];
        auto set = [&](int e, bool under) {
            if (e < 1 || e > D.edge_count())
                throw ParseError("edge label " + std::to_string(e) +
                                 " out of range 1.." +
                                 std::to_string(D.edge_count()));
            if (head[e].crossing != 0)
                throw ParseError("edge " + std::to_string(e) +
                                 " enters two crossings");
            head[e] = {x + 1, under};
        };
        set(c.under_in, true);
        set(c.over_in, false);
    }
    for (int e = 1; e <= D.edge_count(); ++e)
        if (head[e].crossing == 0)
            throw ParseError("edge " + std::to_string(e) +
                             " never enters a crossing");
    return head;
}

void validate(KnotDiagram& D) {
    int n = D.edge_count();
    std::vector<int> out_seen(n + 1, 0);
    for (const Crossing& c : D.crossings) {
        for (int e : {c.under_in, c.under_out, c.over_in, c.over_out})
            if (e < 1 || e > n)
                throw ParseError("edge label " + std::to_string(e) +
                                 " out of range 1.." + std::to_string(n));
        if (c.under_out != (c.under_in % n) + 1)
            throw ParseError("under strand edges " +
                             std::to_string(c.under_in) + "," +
                             std::to_string(c.under_out) +
                             " are not consecutive");
        if (c.over_out != (c.over_in % n) + 1)
            throw ParseError("over strand edges " + std::to_string(c.over_in) +
                             "," + std::to_string(c.over_out) +
                             " are not consecutive");
        ++out_seen[c.under_out];
        ++out_seen[c.over_out];
    }
    for (int e = 1; e <= n; ++e)
        if (out_seen[e] != 1)
            throw ParseError("edge " + std::to_string(e) + " leaves " +
                             std::to_string(out_seen[e]) +
                             " crossings, expected exactly 1");
    edge_heads(D);  // validates the in-slots: once each, over+under paired
    finalize_arcs(D);
}

}  // namespace

void finalize_arcs(KnotDiagram& D) {
    int n = D.edge_count();
    D.edge_arc.assign(n + 1, 0);
    if (D.crossing_count() == 0) {
        D.arc_count = 1;  // a single closed unknotted strand
        return;
    }
    // An arc ends after the edge that goes under (the under-in edge).
    std::vector<char> break_after(n + 1, 0);
    for (const Crossing& c : D.crossings) break_after[c.under_in] = 1;

    std::vector<int> provisional(n + 1, 0);
    int id = 1;
    for (int e = 1; e <= n; ++e) {
        provisional[e] = id;
        if (break_after[e]) ++id;
    }
    // If the traversal does not break between edge n and edge 1, the last
    // provisional arc is the same arc as the first.
    if (!break_after[n]) {
        int last = provisional[n];
        for (int e = 1; e <= n; ++e)
            if (provisional[e] == last) provisional[e] = provisional[1];
    }
    // Renumber by first appearance along the traversal.
    std::map<int, int> renumber;
    int next_id = 0;
    for (int e = 1; e <= n; ++e) {
        if (!renumber.count(provisional[e])) renumber[provisional[e]] = ++next_id;
        D.edge_arc[e] = renumber[provisional[e]];
    }
    D.arc_count = next_id;
    if (D.arc_count != D.crossing_count())
        throw ParseError("diagram has " + std::to_string(D.arc_count) +
                         " arcs but " + std::to_string(D.crossing_count()) +
                         " crossings");
}

KnotDiagram parse_pd(const std::string& text) {
    KnotDiagram D;
    std::istringstream in(strip_comments(text));
    std::string tok;
    std::vector<std::array<int, 4>> tuples;
    while (in >> tok) {
        if (tok.rfind("X[", 0) != 0 || tok.back() != ']')
            throw ParseError("malformed tuple '" + tok + "'");
        std::string body = tok.substr(2, tok.size() - 3);
        std::array<int, 4> t{};
        int field = 0;
        std::istringstream bs(body);
        std::string num;
        while (std::getline(bs, num, ',')) {
            if (field >= 4)
                throw ParseError("tuple '" + tok + "' has more than 4 entries");
            try {
                std::size_t pos = 0;
                t[field] = std::stoi(num, &pos);
                if (pos != num.size()) throw std::invalid_argument(num);
            } catch (const std::exception&) {
                throw ParseError("malformed tuple entry '" + num + "'");
            }
            ++field;
        }
        if (field != 4)
            throw ParseError("tuple '" + tok + "' has " +
                             std::to_string(field) + " entries, expected 4");
        tuples.push_back(t);
    }
    if (tuples.empty()) return D;  // zero-crossing unknot diagram

    int n = 2 * static_cast<int>(tuples.size());
    for (const auto& t : tuples) {
        Crossing c{};
        c.under_in = t[0];
        c.under_out = t[2];
        int b = t[1], d = t[3];
        if (b < 1 || b > n || d < 1 || d > n)
            throw ParseError("edge label out of range in tuple");
        if (d == (b % n) + 1) {
            c.over_in = b;   // over strand runs b -> d: counterclockwise
            c.over_out = d;  // slot after the under-in is the over-in,
            c.sign = -1;     // which happens exactly at negative crossings
        } else if (b == (d % n) + 1) {
            c.over_in = d;
            c.over_out = b;
            c.sign = +1;
        } else {
            throw ParseError("over strand edges " + std::to_string(b) + "," +
                             std::to_string(d) + " are not consecutive");
        }
        D.crossings.push_back(c);
    }
    validate(D);
    return D;
}

std::string pd_code(const KnotDiagram& D) {
    std::ostringstream out;
    for (const Crossing& c : D.crossings) {
        int b = c.sign < 0 ? c.over_in : c.over_out;
        int d = c.sign < 0 ? c.over_out : c.over_in;
        out << "X[" << c.under_in << "," << b << "," << c.under_out << ","
            << d << "]\n";
    }
    return out.str();
}

std::string gauss_code(const KnotDiagram& D) {
    if (D.crossing_count() == 0) return "";
    std::vector<Head> head = edge_heads(D);
    std::ostringstream out;
    for (int e = 1; e <= D.edge_count(); ++e) {
        if (e > 1) out << " ";
        out << (head[e].under ? "U" : "O") << head[e].crossing
            << (D.crossings[head[e].crossing - 1].sign > 0 ? "+" : "-");
    }
    return out.str();
}

KnotDiagram parse_gauss(const std::string& text) {
    std::istringstream in(strip_comments(text));
    std::string tok;
    struct Passage {
        bool under;
        int crossing;
        int sign;
    };
    std::vector<Passage> seq;
    int max_label = 0;
    while (in >> tok) {
        if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
            throw ParseError("malformed gauss token '" + tok + "'");
        char sc = tok.back();
        if (sc != '+' && sc != '-')
            throw ParseError("gauss token '" + tok + "' lacks a sign");
        int label = 0;
        try {
            std::size_t pos = 0;
            label = std::stoi(tok.substr(1, tok.size() - 2), &pos);
            if (pos != tok.size() - 2) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("malformed gauss token '" + tok + "'");
        }
        seq.push_back({tok[0] == 'U', label, sc == '+' ? 1 : -1});
        max_label = std::max(max_label, label);
    }
    KnotDiagram D;
    if (seq.empty()) return D;
    if (static_cast<int>(seq.size()) != 2 * max_label)
        throw ParseError("gauss code length does not match its labels");
    D.crossings.assign(max_label, Crossing{});
    int n = 2 * max_label;
    std::vector<int> seen(max_label + 1, 0);
    for (int p = 1; p <= n; ++p) {
        const Passage& pass = seq[p - 1];
        if (pass.crossing < 1 || pass.crossing > max_label)
            throw ParseError("gauss label out of range");
        Crossing& c = D.crossings[pass.crossing - 1];
        if (pass.under) {
            if (seen[pass.crossing] & 1)
                throw ParseError("crossing " + std::to_string(pass.crossing) +
                                 " goes under twice");
            seen[pass.crossing] |= 1;
            c.under_in = p;
            c.under_out = (p % n) + 1;
        } else {
            if (seen[pass.crossing] & 2)
                throw ParseError("crossing " + std::to_string(pass.crossing) +
                                 " goes over twice");
            seen[pass.crossing] |= 2;
            c.over_in = p;
            c.over_out = (p % n) + 1;
        }
        if (c.sign != 0 && c.sign != pass.sign)
            throw ParseError("crossing " + std::to_string(pass.crossing) +
                             " has inconsistent signs");
        c.sign = pass.sign;
    }
    for (int x = 1; x <= max_label; ++x)
        if (seen[x] != 3)
            throw ParseError("crossing " + std::to_string(x) +
                             " does not appear once over and once under");
    finalize_arcs(D);
    return D;
}

std::vector<ArcInfo> arc_info(const KnotDiagram& D) {
    std::vector<Head> head = edge_heads(D);
    std::vector<ArcInfo> info(D.arc_count);
    std::vector<char> done(D.arc_count + 1, 0);
    for (const Crossing& c : D.crossings) {
        int start = c.under_out;
        int arc = D.edge_arc[start];
        if (done[arc]) continue;
        done[arc] = 1;
        ArcInfo a;
        a.arc = arc;
        a.begin_crossing = head[c.under_in].crossing;
        int e = start;
        for (;;) {
            if (head[e].under) {
                a.end_crossing = head[e].crossing;
                break;
            }
            a.over_crossings.push_back(head[e].crossing);
            e = D.next_edge(e);
        }
        info[arc - 1] = a;
    }
    return info;
}

}  // namespace gordian
