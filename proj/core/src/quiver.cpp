#include "flowfan/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace flowfan {

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> r;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
        if (arrows[a].s == v) r.push_back(a);
    return r;
}

std::vector<int> Quiver::arrows_to(int v) const {
    std::vector<int> r;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
        if (arrows[a].t == v) r.push_back(a);
    return r;
}

bool is_locally_gentle(const Quiver& q) {
    const int n = static_cast<int>(q.vertices.size());
    for (int v = 0; v < n; ++v)
        if (q.arrows_from(v).size() > 2 || q.arrows_to(v).size() > 2) return false;
    for (const auto& [a, b] : q.relations)
        if (q.arrows[a].t != q.arrows[b].s) return false;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        int after_rel = 0, after_free = 0, before_rel = 0, before_free = 0;
        for (int b : q.arrows_from(q.arrows[a].t)) (q.relations.count({a, b}) ? after_rel : after_free)++;
        for (int b : q.arrows_to(q.arrows[a].s)) (q.relations.count({b, a}) ? before_rel : before_free)++;
        if (after_rel > 1 || after_free > 1 || before_rel > 1 || before_free > 1) return false;
    }
    return true;
}

bool is_gentle(const Quiver& q) {
    if (!is_locally_gentle(q)) return false;
    // relation-free compositions must not close up
    const int m = static_cast<int>(q.arrows.size());
    std::vector<int> state(m, 0);
    std::function<bool(int)> has_cycle = [&](int a) {
        state[a] = 1;
        for (int b : q.arrows_from(q.arrows[a].t)) {
            if (q.relations.count({a, b})) continue;
            if (state[b] == 1) return true;
            if (state[b] == 0 && has_cycle(b)) return true;
        }
        state[a] = 2;
        return false;
    };
    for (int a = 0; a < m; ++a)
        if (state[a] == 0 && has_cycle(a)) return false;
    return true;
}

std::vector<int> string_vertices(const Quiver& q, const StringWord& w) {
    std::vector<int> vs{w.start};
    for (const auto& l : w.letters) {
        const auto& a = q.arrows[l.arrow];
        int cur = vs.back();
        if (l.exp > 0) {
            if (a.s != cur) throw Error(Errc::Precondition, "string letters do not chain");
            vs.push_back(a.t);
        } else {
            if (a.t != cur) throw Error(Errc::Precondition, "string letters do not chain");
            vs.push_back(a.s);
        }
    }
    return vs;
}

StringWord reversed(const Quiver& q, const StringWord& w) {
    StringWord r;
    r.start = string_vertices(q, w).back();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->arrow, -it->exp});
    return r;
}

bool is_string(const Quiver& q, const StringWord& w) {
    try {
        string_vertices(q, w);
    } catch (const Error&) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        const auto& x = w.letters[i];
        const auto& y = w.letters[i + 1];
        if (x.arrow == y.arrow && x.exp != y.exp) return false;
        if (x.exp > 0 && y.exp > 0 && q.relations.count({x.arrow, y.arrow})) return false;
        if (x.exp < 0 && y.exp < 0 && q.relations.count({y.arrow, x.arrow})) return false;
    }
    return true;
}

QuiverPair quiver_from_graph(const FramedGraph& fg) {
    if (!fg.has_colouring()) throw Error(Errc::Precondition, "quiver construction needs a colouring");
    const auto& g = fg.graph();
    for (int v : fg.internal())
        if (g.indeg(v) != 2 || g.outdeg(v) != 2) throw Error(Errc::NotFull, "vertex " + g.name(v) + " is not full");
    QuiverPair qp;
    for (int v = 0; v < g.vertex_count(); ++v) qp.blossoming.vertices.push_back(g.name(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (fg.colour(e) == Colour::Red)
            qp.blossoming.arrows.push_back({ed.id, ed.tail, ed.head});
        else
            qp.blossoming.arrows.push_back({ed.id, ed.head, ed.tail});
    }
    auto& B = qp.blossoming;
    for (int a = 0; a < static_cast<int>(B.arrows.size()); ++a)
        for (int b : B.arrows_from(B.arrows[a].t))
            if (a != b && fg.colour(a) != fg.colour(b)) B.relations.insert({a, b});

    qp.restricted_of.assign(g.vertex_count(), -1);
    for (int v : fg.internal()) {
        qp.restricted_of[v] = static_cast<int>(qp.restricted.vertices.size());
        qp.restricted.vertices.push_back(g.name(v));
    }
    qp.arrow_of.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& a = B.arrows[e];
        if (qp.restricted_of[a.s] < 0 || qp.restricted_of[a.t] < 0) continue;
        qp.arrow_of[e] = static_cast<int>(qp.restricted.arrows.size());
        qp.restricted.arrows.push_back({a.id, qp.restricted_of[a.s], qp.restricted_of[a.t]});
    }
    for (const auto& [a, b] : B.relations)
        if (qp.arrow_of[a] >= 0 && qp.arrow_of[b] >= 0) qp.restricted.relations.insert({qp.arrow_of[a], qp.arrow_of[b]});
    return qp;
}

StringWord route_string(const FramedGraph& fg, const Route& r) {
    StringWord w;
    w.start = fg.graph().edge(r.edges.front()).tail;
    for (int e : r.edges) w.letters.push_back({e, fg.colour(e) == Colour::Red ? 1 : -1});
    return w;
}

IVec g_vector(const FramedGraph& fg, const StringWord& w) {
    const auto& g = fg.graph();
    // walking along the graph: a direct letter runs tail -> head of a red edge, an inverse
    // letter runs tail -> head of a blue edge, so vertices follow the edges
    std::vector<int> vs{w.start};
    for (const auto& l : w.letters) {
        const auto& ed = g.edge(l.arrow);
        bool red = fg.colour(l.arrow) == Colour::Red;
        int from = (l.exp > 0) == red ? ed.tail : ed.head;
        int to = (l.exp > 0) == red ? ed.head : ed.tail;
        if (from != vs.back()) throw Error(Errc::Precondition, "string letters do not chain");
        vs.push_back(to);
    }
    if (g.is_internal(vs.front()) || g.is_internal(vs.back()))
        throw Error(Errc::NotMaximal, "string does not end at blossoming vertices");
    IVec out(fg.internal().size(), 0);
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
        int x = w.letters[i - 1].exp, y = w.letters[i].exp;
        int k = fg.internal_index(vs[i]);
        if (k < 0) continue;
        if (x < 0 && y > 0) out[k] += 1;
        if (x > 0 && y < 0) out[k] -= 1;
    }
    return out;
}

QVec phi_map(const FramedGraph& fg, const QVec& x) {
    const auto& g = fg.graph();
    QVec out(fg.internal().size(), Rational(0));
    for (int e = 0; e < g.edge_count(); ++e) {
        if (x[e] == 0) continue;
        Rational half = x[e] / 2;
        if (fg.colour(e) == Colour::Blue) half = -half;
        int t = fg.internal_index(g.edge(e).tail), h = fg.internal_index(g.edge(e).head);
        if (t >= 0) out[t] += half;
        if (h >= 0) out[h] -= half;
    }
    return out;
}

StringWord projective_string(const Quiver& q, int v) {
    std::vector<std::vector<int>> paths;
    for (int b : q.arrows_from(v)) {
        std::vector<int> path{b};
        for (;;) {
            std::vector<int> next;
            for (int c : q.arrows_from(q.arrows[path.back()].t))
                if (!q.relations.count({path.back(), c})) next.push_back(c);
            if (next.empty()) break;
            if (next.size() > 1) throw Error(Errc::Precondition, "quiver is not gentle at " + q.vertices[q.arrows[path.back()].t]);
            path.push_back(next[0]);
            if (path.size() > q.arrows.size()) throw Error(Errc::Precondition, "projective is infinite-dimensional");
        }
        paths.push_back(std::move(path));
    }
    StringWord w;
    w.start = v;
    if (paths.empty()) return w;
    if (paths.size() == 1) {
        for (int a : paths[0]) w.letters.push_back({a, 1});
        return w;
    }
    w.start = q.arrows[paths[0].back()].t;
    for (auto it = paths[0].rbegin(); it != paths[0].rend(); ++it) w.letters.push_back({*it, -1});
    for (int a : paths[1]) w.letters.push_back({a, 1});
    return w;
}

bool same_up_to_reversal(const Quiver& q, const StringWord& a, const StringWord& b) {
    auto eq = [](const StringWord& x, const StringWord& y) { return x.start == y.start && x.letters == y.letters; };
    return eq(a, b) || eq(a, reversed(q, b));
}

ModuleLabel gamma(const FramedGraph& fg, const QuiverPair& qp, const Route& r) {
    if (r.is_cycle()) throw Error(Errc::Precondition, "gamma is defined on source-to-sink routes");
    const auto& g = fg.graph();
    const auto& es = r.edges;
    const int k = static_cast<int>(es.size());
    auto red = [&](int i) { return fg.colour(es[i]) == Colour::Red; };  // 0-based
    bool mono = true;
    for (int i = 1; i < k; ++i) mono = mono && red(i) == red(0);
    if (mono) throw Error(Errc::ExceptionalRoute, "route is exceptional");
    int a = 0;
    while (a < k && red(a)) ++a;
    int rest = a;
    while (rest < k && !red(rest)) ++rest;
    ModuleLabel m;
    if (rest == k) {
        // red^a blue^(k-a)
        m.kind = ModuleLabel::Kind::ShiftedProjective;
        m.vertex = g.edge(es[a - 1]).head;
        m.string.start = qp.restricted_of[m.vertex];
        return m;
    }
    int j = k - 1;
    while (!red(j)) --j;  // last red, 0-based
    // trimmed word: edges a+1 .. j-1 (0-based), starting at the head of edge a
    int v = g.edge(es[a]).head;
    m.string.start = qp.restricted_of[v];
    for (int i = a + 1; i < j; ++i) {
        int arr = qp.arrow_of[es[i]];
        if (arr < 0) throw Error(Errc::Internal, "trimmed word leaves the internal vertices");
        m.string.letters.push_back({arr, red(i) ? 1 : -1});
    }
    m.vertex = m.string.lazy() ? v : -1;
    m.kind = ModuleLabel::Kind::StringModule;
    for (int x : fg.internal())
        if (same_up_to_reversal(qp.restricted, m.string, projective_string(qp.restricted, qp.restricted_of[x]))) {
            m.kind = ModuleLabel::Kind::Projective;
            m.vertex = x;
            break;
        }
    return m;
}

std::string to_string(const FramedGraph& fg, const ModuleLabel& m) {
    const auto& g = fg.graph();
    switch (m.kind) {
    case ModuleLabel::Kind::Projective: return "P_" + g.name(m.vertex);
    case ModuleLabel::Kind::ShiftedProjective: return "P_" + g.name(m.vertex) + "[1]";
    case ModuleLabel::Kind::StringModule:
        if (m.string.lazy()) return "S_" + g.name(m.vertex);
        {
            std::string s = "M(";
            for (std::size_t i = 0; i < m.string.letters.size(); ++i) {
                if (i) s += " ";
                s += std::to_string(m.string.letters[i].arrow);
                if (m.string.letters[i].exp < 0) s += "^-1";
            }
            return s + ")";
        }
    }
    return "?";
}

namespace {

std::vector<int> encode(const StringWord& w) {
    std::vector<int> k{w.start};
    for (const auto& l : w.letters) {
        k.push_back(l.arrow);
        k.push_back(l.exp);
    }
    return k;
}

// canonical keys of the top (want_top) or bottom substrings through inner vertices only
std::set<std::vector<int>> substrings(const Quiver& q, const std::vector<char>& inner, const StringWord& w, bool want_top) {
    const auto vs = string_vertices(q, w);
    const int m = static_cast<int>(w.letters.size());
    std::set<std::vector<int>> out;
    // letters i..j (1-based), vertices v_{i-1} .. v_j; i = j+1 is the lazy substring at v_j
    for (int i = 1; i <= m + 1; ++i) {
        for (int j = i - 1; j <= m; ++j) {
            bool ok = true;
            for (int t = i - 1; t <= j && ok; ++t) ok = inner[vs[t]];
            if (!ok) break;
            bool left_in = i == 1 || w.letters[i - 2].exp < 0;   // arrow before points into the substring
            bool right_in = j == m || w.letters[j].exp > 0;     // arrow after points into the substring
            bool left_out = i == 1 || w.letters[i - 2].exp > 0;
            bool right_out = j == m || w.letters[j].exp < 0;
            bool keep = want_top ? (left_in && right_in) : (left_out && right_out);
            if (!keep) continue;
            StringWord sub;
            sub.start = vs[i - 1];
            for (int t = i; t <= j; ++t) sub.letters.push_back(w.letters[t - 1]);
            out.insert(std::min(encode(sub), encode(reversed(q, sub))));
        }
    }
    return out;
}

bool kisses(const Quiver& q, const std::vector<char>& inner, const StringWord& a, const StringWord& b) {
    auto top = substrings(q, inner, a, true);
    for (const auto& k : substrings(q, inner, b, false))
        if (top.count(k)) return true;
    return false;
}

}  // namespace

bool kissing(const Quiver& q, const std::vector<char>& inner, const StringWord& a, const StringWord& b) {
    return kisses(q, inner, a, b) || kisses(q, inner, b, a);
}

}  // namespace flowfan
