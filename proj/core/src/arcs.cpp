#include "flowfan/arcs.hpp"

#include "flowfan/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace flowfan {

std::vector<Bipartition> all_bipartitions(int c) {
    const int n = c + 1;
    if (n > 20) throw Error(Errc::SizeCap, "too many bipartitions");
    std::vector<Bipartition> out;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        Bipartition p;
        for (int i = 0; i < n; ++i) (mask >> i & 1u ? p.A : p.B).push_back(i + 1);
        out.push_back(std::move(p));
    }
    return out;
}

bool valid_bipartition(int c, const Bipartition& p) {
    if (p.A.empty() || p.B.empty()) return false;
    std::vector<int> all(p.A);
    all.insert(all.end(), p.B.begin(), p.B.end());
    std::sort(all.begin(), all.end());
    for (int i = 0; i < static_cast<int>(all.size()); ++i)
        if (all[i] != i + 1) return false;
    return static_cast<int>(all.size()) == c + 1 && std::is_sorted(p.A.begin(), p.A.end()) &&
           std::is_sorted(p.B.begin(), p.B.end());
}

std::string format_bipartition(const Bipartition& p) {
    const bool wide = (!p.A.empty() && p.A.back() > 9) || (!p.B.empty() && p.B.back() > 9);
    auto part = [&](const std::vector<int>& s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (wide && i) out += ',';
            out += std::to_string(s[i]);
        }
        return out;
    };
    return part(p.A) + "|" + part(p.B);
}

Bipartition parse_bipartition(int c, const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw Error(Errc::Parse, "bipartition needs a '|': " + s);
    const bool wide = s.find(',') != std::string::npos;
    auto part = [&](const std::string& t) {
        std::vector<int> out;
        if (wide) {
            std::stringstream ss(t);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) out.push_back(std::stoi(tok));
        } else {
            for (char ch : t) {
                if (ch < '0' || ch > '9') throw Error(Errc::Parse, "bad bipartition character in " + s);
                out.push_back(ch - '0');
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    Bipartition p{part(s.substr(0, bar)), part(s.substr(bar + 1))};
    if (!valid_bipartition(c, p)) throw Error(Errc::Parse, "not a bipartition of [" + std::to_string(c + 1) + "]: " + s);
    return p;
}

ArcDiagram to_diagram(int c, const Bipartition& p) {
    std::vector<int> side(c + 2, 0);
    for (int i : p.A) side[i] = +1;
    for (int i : p.B) side[i] = -1;
    ArcDiagram d;
    int start = 1;
    for (int g = 1; g <= c + 1; ++g)
        if (g == c + 1 || side[g + 1] != side[g]) {
            d.push_back({start - 1, g, side[g]});
            start = g + 1;
        }
    return d;
}

Bipartition from_diagram(int c, const ArcDiagram& d) {
    if (!valid_diagram(c, d)) throw Error(Errc::Precondition, "not an arc diagram");
    Bipartition p;
    for (const auto& a : d)
        for (int g = a.i + 1; g <= a.j; ++g) (a.sign > 0 ? p.A : p.B).push_back(g);
    return p;
}

bool valid_diagram(int c, const ArcDiagram& d) {
    if (d.empty() || d.front().i != 0 || d.back().j != c + 1) return false;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k].i >= d[k].j || (d[k].sign != 1 && d[k].sign != -1)) return false;
        if (k && (d[k].i != d[k - 1].j || d[k].sign == d[k - 1].sign)) return false;
    }
    return true;
}

bool arcs_cross(const SignedArc& x, const SignedArc& y) {
    if (x.sign != y.sign) return false;
    const SignedArc& l = x.i <= y.i ? x : y;
    const SignedArc& r = x.i <= y.i ? y : x;
    return l.i < r.i && r.i <= l.j && l.j < r.j;
}

bool diagrams_cross(const ArcDiagram& d1, const ArcDiagram& d2) {
    for (const auto& x : d1)
        for (const auto& y : d2)
            if (arcs_cross(x, y)) return true;
    return false;
}

namespace {

// arc of d ending / starting at x
const SignedArc* arc_into(const ArcDiagram& d, int x) {
    for (const auto& a : d)
        if (a.j == x) return &a;
    return nullptr;
}
const SignedArc* arc_out_of(const ArcDiagram& d, int x) {
    for (const auto& a : d)
        if (a.i == x) return &a;
    return nullptr;
}

// which of two arcs covering the same gap is drawn higher
std::optional<int> higher(const SignedArc& x, const SignedArc& y) {
    if (x == y) return 0;
    if (x.sign != y.sign) return x.sign > y.sign ? 1 : -1;
    const bool x_outer = x.i <= y.i && y.j <= x.j;
    const bool y_outer = y.i <= x.i && x.j <= y.j;
    if (!x_outer && !y_outer) return std::nullopt;
    const int outer_higher = x.sign > 0 ? 1 : -1;
    return x_outer ? outer_higher : -outer_higher;
}

}  // namespace

bool interfere(int c, const ArcDiagram& d1, const ArcDiagram& d2) {
    for (int i0 = 1; i0 <= c; ++i0) {
        const SignedArc* in1 = arc_into(d1, i0);
        const SignedArc* in2 = arc_into(d2, i0);
        if (!in1 || !in2 || *in1 == *in2 || in1->sign != in2->sign) continue;
        int x = i0;
        const SignedArc *o1 = nullptr, *o2 = nullptr;
        while (x <= c) {
            o1 = arc_out_of(d1, x);
            o2 = arc_out_of(d2, x);
            if (!o1 || !o2 || !(*o1 == *o2)) break;
            x = o1->j;
        }
        if (x > c || !o1 || !o2 || o1->sign != o2->sign) continue;
        const int a = in1->i, a2 = in2->i, b = o1->j, b2 = o2->j;
        if ((a < a2 && b < b2) || (a > a2 && b > b2)) return true;
    }
    return false;
}

bool nested(const Bipartition& p, const Bipartition& q) {
    return std::includes(p.A.begin(), p.A.end(), q.A.begin(), q.A.end()) ||
           std::includes(q.A.begin(), q.A.end(), p.A.begin(), p.A.end());
}

std::optional<int> compare_heights(int c, const ArcDiagram& d1, const ArcDiagram& d2) {
    bool above = false, below = false;
    for (int g = 1; g <= c + 1; ++g) {
        const SignedArc *x = nullptr, *y = nullptr;
        for (const auto& a : d1)
            if (a.i < g && g <= a.j) x = &a;
        for (const auto& a : d2)
            if (a.i < g && g <= a.j) y = &a;
        auto h = higher(*x, *y);
        if (!h) return std::nullopt;
        above |= *h > 0;
        below |= *h < 0;
    }
    if (above && below) return std::nullopt;
    return above ? 1 : below ? -1 : 0;
}

bool stacked(int c, const std::vector<ArcDiagram>& ds) {
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (!compare_heights(c, ds[i], ds[j])) return false;
    return true;
}

bool admissible(int c, FaceMode mode, const Bipartition& p, const Bipartition& q) {
    const auto d1 = to_diagram(c, p), d2 = to_diagram(c, q);
    if (mode == FaceMode::Stacked) return compare_heights(c, d1, d2).has_value();
    return !diagrams_cross(d1, d2) && !interfere(c, d1, d2);
}

namespace {

std::vector<std::vector<char>> admissibility(int c, FaceMode mode, const std::vector<Bipartition>& ps) {
    const std::size_t n = ps.size();
    std::vector<ArcDiagram> ds;
    for (const auto& p : ps) ds.push_back(to_diagram(c, p));
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool ok = mode == FaceMode::Stacked ? compare_heights(c, ds[i], ds[j]).has_value()
                                                : !diagrams_cross(ds[i], ds[j]) && !interfere(c, ds[i], ds[j]);
            adj[i][j] = adj[j][i] = ok;
        }
    return adj;
}

}  // namespace

std::vector<std::int64_t> faces_by_codim(int c, FaceMode mode, int max_c) {
    if (c < 1) throw Error(Errc::Precondition, "c must be positive");
    if (c > max_c) throw Error(Errc::SizeCap, "c too large for exhaustive face enumeration");
    const auto ps = all_bipartitions(c);
    const auto adj = admissibility(c, mode, ps);
    std::vector<std::int64_t> counts(c + 2, 0);
    counts[0] = 1;
    std::function<void(int, const std::vector<int>&)> grow = [&](int size, const std::vector<int>& cand) {
        for (std::size_t t = 0; t < cand.size(); ++t) {
            const int v = cand[t];
            if (size + 1 < static_cast<int>(counts.size())) ++counts[size + 1];
            std::vector<int> next;
            for (std::size_t u = t + 1; u < cand.size(); ++u)
                if (adj[v][cand[u]]) next.push_back(cand[u]);
            grow(size + 1, next);
        }
    };
    std::vector<int> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    grow(0, all);
    if (counts[c + 1] != 0) throw Error(Errc::Internal, "admissible set larger than the dimension");
    counts.resize(c + 1);
    return counts;
}

std::vector<std::int64_t> f_vector(int c, FaceMode mode) {
    auto codim = faces_by_codim(c, mode);
    std::vector<std::int64_t> f(c + 1);
    for (int k = 0; k <= c; ++k) f[c - k] = codim[k];
    return f;
}

std::vector<std::int64_t> permutohedron_f_vector(int c) {
    const int n = c + 1;
    std::vector<std::vector<std::int64_t>> S(n + 1, std::vector<std::int64_t>(n + 1, 0));
    S[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) S[i][j] = j * S[i - 1][j] + S[i - 1][j - 1];
    std::vector<std::int64_t> f(c + 1);
    for (int k = 0; k <= c; ++k) {
        std::int64_t fact = 1;
        for (int t = 2; t <= k + 1; ++t) fact *= t;
        f[c - k] = fact * S[n][k + 1];
    }
    return f;
}

std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f) {
    const int d = static_cast<int>(f.size());
    std::vector<std::int64_t> h(d, 0);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i <= k; ++i) {
            std::int64_t term = f[k] * to_i64(binomial(k, i));
            h[i] += (k - i) % 2 ? -term : term;
        }
    return h;
}

std::vector<std::int64_t> eulerian_numbers(int n) {
    std::vector<std::int64_t> a(n, 0);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        int des = 0;
        for (int i = 0; i + 1 < n; ++i) des += w[i] > w[i + 1];
        ++a[des];
    } while (std::next_permutation(w.begin(), w.end()));
    return a;
}

std::vector<int> two_face_sizes(int c, FaceMode mode) {
    if (c < 2) return {};
    const auto ps = all_bipartitions(c);
    const auto adj = admissibility(c, mode, ps);
    const int want = c - 2;
    std::set<int> sizes;
    std::vector<int> face;
    std::function<void(int)> go = [&](int from) {
        if (static_cast<int>(face.size()) == want) {
            int edges = 0;
            for (int f = 0; f < static_cast<int>(ps.size()); ++f) {
                if (std::find(face.begin(), face.end(), f) != face.end()) continue;
                if (std::all_of(face.begin(), face.end(), [&](int g) { return adj[f][g]; })) ++edges;
            }
            sizes.insert(edges);
            return;
        }
        for (int v = from; v < static_cast<int>(ps.size()); ++v) {
            if (!std::all_of(face.begin(), face.end(), [&](int g) { return adj[v][g]; })) continue;
            face.push_back(v);
            go(v + 1);
            face.pop_back();
        }
    };
    go(0);
    return {sizes.begin(), sizes.end()};
}

// --- multisets -----------------------------------------------------------------

ArcMultiset arc_multiset(const std::vector<ArcDiagram>& ds) {
    ArcMultiset m;
    for (const auto& d : ds) m.insert(m.end(), d.begin(), d.end());
    std::sort(m.begin(), m.end());
    return m;
}

int multiset_rank(const ArcMultiset& m) {
    return static_cast<int>(std::count_if(m.begin(), m.end(), [](const SignedArc& a) { return a.i == 0; }));
}

bool consistent(int c, const ArcMultiset& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (arcs_cross(m[i], m[j])) return false;
    std::vector<int> in(c + 2, 0), out(c + 2, 0);
    for (const auto& a : m) {
        if (a.i < 0 || a.j > c + 1 || a.i >= a.j) return false;
        ++out[a.i];
        ++in[a.j];
    }
    for (int x = 1; x <= c; ++x)
        if (in[x] != out[x]) return false;
    return true;
}

std::vector<ArcMultiset> consistent_multisets(int c, int k) {
    std::vector<ArcMultiset> out;
    ArcMultiset chosen;
    std::vector<int> in(c + 2, 0);
    std::function<void(int)> at_vertex;
    // choose `need` more arcs out of x, as a multiset with options from index `from`
    std::function<void(int, int, int)> pick = [&](int x, int need, int from) {
        if (need == 0) {
            at_vertex(x + 1);
            return;
        }
        std::vector<SignedArc> options;
        for (int y = x + 1; y <= c + 1; ++y) {
            if (x == 0 && y == c + 1) continue;  // only the one-sided diagrams use these
            for (int s : {+1, -1}) options.push_back({x, y, s});
        }
        for (int t = from; t < static_cast<int>(options.size()); ++t) {
            const auto& a = options[t];
            bool ok = true;
            for (const auto& b : chosen)
                if (arcs_cross(a, b)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(a);
            ++in[a.j];
            pick(x, need - 1, t);
            --in[a.j];
            chosen.pop_back();
        }
    };
    at_vertex = [&](int x) {
        if (x == c + 1) {
            auto m = chosen;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        pick(x, x == 0 ? k : in[x], 0);
    };
    at_vertex(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ArcDiagram> stacked_reconstruction(int c, const ArcMultiset& m) {
    if (!consistent(c, m)) throw Error(Errc::Precondition, "arc multiset is not consistent");
    std::multiset<SignedArc> left(m.begin(), m.end());
    auto top_key = [](const SignedArc& a) { return a.sign > 0 ? std::make_pair(1, a.j) : std::make_pair(0, -a.j); };
    std::vector<ArcDiagram> out;
    const int k = multiset_rank(m);
    for (int r = 0; r < k; ++r) {
        ArcDiagram d;
        int x = 0;
        while (x != c + 1) {
            auto best = left.end();
            for (auto it = left.begin(); it != left.end(); ++it)
                if (it->i == x && (best == left.end() || top_key(*it) > top_key(*best))) best = it;
            if (best == left.end()) throw Error(Errc::Internal, "no arc leaves vertex " + std::to_string(x));
            d.push_back(*best);
            x = best->j;
            left.erase(best);
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<ArcDiagram> noninterfering_reconstruction(int c, const ArcMultiset& m) {
    if (!consistent(c, m)) throw Error(Errc::Precondition, "arc multiset is not consistent");
    const int n = static_cast<int>(m.size());
    std::vector<int> next(n, -1);
    for (int x = 1; x <= c; ++x) {
        std::vector<int> in, out;
        for (int t = 0; t < n; ++t) {
            if (m[t].j == x) in.push_back(t);
            if (m[t].i == x) out.push_back(t);
        }
        if (in.size() != out.size()) throw Error(Errc::Internal, "unbalanced vertex");
        for (int t : in)
            if (m[t].sign != m[in.front()].sign) throw Error(Errc::Precondition, "arcs enter a vertex on both sides");
        std::stable_sort(in.begin(), in.end(), [&](int a, int b) { return m[a].i < m[b].i; });
        std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return m[a].j > m[b].j; });
        for (std::size_t r = 0; r < in.size(); ++r) next[in[r]] = out[r];
    }
    std::vector<ArcDiagram> res;
    for (int t = 0; t < n; ++t) {
        if (m[t].i != 0) continue;
        ArcDiagram d;
        for (int u = t; u >= 0; u = next[u]) {
            d.push_back(m[u]);
            if (m[u].j == c + 1) break;
        }
        res.push_back(std::move(d));
    }
    return res;
}

MultisetReport multiset_bijections_check(int c, int k) {
    MultisetReport rep;
    auto fail = [&](std::string s) {
        rep.ok = false;
        if (rep.failures.size() < 20) rep.failures.push_back(std::move(s));
    };
    const auto ms = consistent_multisets(c, k);
    rep.consistent = static_cast<std::int64_t>(ms.size());
    const std::set<ArcMultiset> mset(ms.begin(), ms.end());
    const auto ps = all_bipartitions(c);
    std::vector<ArcDiagram> ds;
    for (const auto& p : ps) ds.push_back(to_diagram(c, p));
    for (FaceMode mode : {FaceMode::Stacked, FaceMode::Noninterfering}) {
        const auto adj = admissibility(c, mode, ps);
        std::set<ArcMultiset> images;
        std::int64_t count = 0;
        std::vector<int> pick;
        std::function<void(int)> go = [&](int from) {
            if (static_cast<int>(pick.size()) == k) {
                ++count;
                std::vector<ArcDiagram> coll;
                for (int i : pick) coll.push_back(ds[i]);
                auto img = arc_multiset(coll);
                if (!mset.count(img)) fail("diagram multiset maps outside the consistent multisets");
                if (!images.insert(img).second) fail("two diagram multisets share an arc multiset");
                return;
            }
            for (int v = from; v < static_cast<int>(ps.size()); ++v) {
                if (!std::all_of(pick.begin(), pick.end(), [&](int g) { return g == v || adj[v][g]; })) continue;
                pick.push_back(v);
                go(v);
                pick.pop_back();
            }
        };
        go(0);
        (mode == FaceMode::Stacked ? rep.stacked : rep.noninterfering) = count;
        if (count != rep.consistent)
            fail(std::string(mode == FaceMode::Stacked ? "stacked" : "noninterfering") + " count " + std::to_string(count) +
                 " differs from " + std::to_string(rep.consistent));
    }
    for (const auto& m : ms) {
        auto s = stacked_reconstruction(c, m);
        if (arc_multiset(s) != m || !stacked(c, s)) fail("stacked reconstruction is not stacked or loses arcs");
        auto nf = noninterfering_reconstruction(c, m);
        if (arc_multiset(nf) != m) fail("noninterfering reconstruction loses arcs");
        for (std::size_t i = 0; i < nf.size(); ++i) {
            if (!valid_diagram(c, nf[i])) fail("noninterfering reconstruction built a broken diagram");
            for (std::size_t j = i + 1; j < nf.size(); ++j)
                if (diagrams_cross(nf[i], nf[j]) || interfere(c, nf[i], nf[j])) fail("reconstructed diagrams interfere");
        }
    }
    return rep;
}

// --- certificates --------------------------------------------------------------

std::vector<Bipartition> neighbours(int c, FaceMode mode, const Bipartition& p) {
    std::vector<Bipartition> out;
    for (const auto& q : all_bipartitions(c))
        if (q != p && admissible(c, mode, p, q)) out.push_back(q);
    return out;
}

PentagonCertificate pentagon_certificate() {
    const int c = 3;
    PentagonCertificate cert;
    cert.facet = parse_bipartition(c, "12|34");
    cert.neighbours = neighbours(c, FaceMode::Noninterfering, cert.facet);
    const int n = static_cast<int>(cert.neighbours.size());
    if (n == 5) {
        // each neighbour meets exactly two others, and they form one cycle
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && admissible(c, FaceMode::Noninterfering, cert.neighbours[i], cert.neighbours[j]))
                    adj[i].push_back(j);
        bool deg2 = std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; });
        int steps = 0;
        if (deg2) {
            int prev = -1, cur = 0;
            do {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++steps;
            } while (cur != 0 && steps <= n);
        }
        cert.is_pentagon = deg2 && steps == n;
    }
    cert.permutohedron_two_faces = two_face_sizes(c, FaceMode::Stacked);
    const bool only_squares_hexagons = std::all_of(cert.permutohedron_two_faces.begin(), cert.permutohedron_two_faces.end(),
                                                   [](int s) { return s == 4 || s == 6; });
    cert.ok = cert.is_pentagon && only_squares_hexagons;
    return cert;
}

bool facet_iso_check(int c) {
    if (c < 2) throw Error(Errc::Precondition, "facet iso needs c >= 2");
    auto lift = [](const Bipartition& p) {
        Bipartition q;
        q.A.push_back(1);
        for (int a : p.A) q.A.push_back(a + 1);
        for (int b : p.B) q.B.push_back(b + 1);
        return q;
    };
    Bipartition p0{{1}, {}};
    for (int i = 2; i <= c + 1; ++i) p0.B.push_back(i);
    auto nb = neighbours(c, FaceMode::Noninterfering, p0);
    std::sort(nb.begin(), nb.end());
    const auto small = all_bipartitions(c - 1);
    std::vector<Bipartition> img;
    for (const auto& p : small) img.push_back(lift(p));
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != nb) return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j)
            if (admissible(c - 1, FaceMode::Noninterfering, small[i], small[j]) !=
                admissible(c, FaceMode::Noninterfering, img[i], img[j]))
                return false;
    return true;
}

std::optional<Bipartition> bipartition_of_route(int c, const Route& r) {
    if (r.is_cycle()) return std::nullopt;
    Bipartition p;
    for (int e : r.edges) {
        if (e >= 2 * (c + 1)) continue;  // red edge
        const int a = e / 2, b = e % 2 + 1;
        (b == 1 ? p.A : p.B).push_back(a + 1);
    }
    std::sort(p.A.begin(), p.A.end());
    std::sort(p.B.begin(), p.B.end());
    if (!valid_bipartition(c, p)) return std::nullopt;
    return p;
}

}  // namespace flowfan
