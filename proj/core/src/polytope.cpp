#include "flowfan/polytope.hpp"

#include "flowfan/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace flowfan {

namespace {

Rational dot(const QVec& a, const QVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

int affine_rank(const QMat& pts) {
    if (pts.size() < 2) return 0;
    QMat d;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec r(pts[i].size());
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
        d.push_back(std::move(r));
    }
    return rank(d);
}

QMat select(const QMat& pts, const std::vector<int>& idx) {
    QMat out;
    for (int i : idx) out.push_back(pts[i]);
    return out;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(int dim, QMat pts) {
    if (pts.empty()) throw Error(Errc::Precondition, "polytope needs at least one point");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != dim) throw Error(Errc::Precondition, "point of the wrong dimension");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return {dim, std::move(pts)};
}

QMat LatticePolytope::vertices() const { return select(points, hull_vertex_indices(points)); }

bool same_polytope(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim != q.dim) return false;
    for (const auto& x : p.points)
        if (!in_convex_hull(q.points, x)) return false;
    for (const auto& x : q.points)
        if (!in_convex_hull(p.points, x)) return false;
    return true;
}

// --- fence posets ------------------------------------------------------------

std::vector<std::vector<char>> order_ideals(const FencePoset& p) {
    const int k = static_cast<int>(p.elements.size());
    if (k > 24) throw Error(Errc::SizeCap, "poset too large for subset enumeration");
    std::vector<std::vector<char>> out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool ok = true;
        for (auto [lo, hi] : p.covers)
            if ((mask >> hi & 1u) && !(mask >> lo & 1u)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        std::vector<char> m(k);
        for (int i = 0; i < k; ++i) m[i] = static_cast<char>(mask >> i & 1u);
        out.push_back(std::move(m));
    }
    return out;
}

LatticePolytope order_polytope(const FencePoset& p, int dim) {
    QMat pts;
    for (const auto& ideal : order_ideals(p)) {
        QVec x(dim, Rational(0));
        for (std::size_t i = 0; i < ideal.size(); ++i)
            if (ideal[i]) x[p.elements[i]] += 1;
        pts.push_back(std::move(x));
    }
    return LatticePolytope::from_points(dim, std::move(pts));
}

FencePoset string_fence(const Quiver& q, const StringWord& w) {
    FencePoset p;
    p.elements = string_vertices(q, w);
    for (int i = 1; i <= static_cast<int>(w.letters.size()); ++i) {
        if (w.letters[i - 1].exp > 0)
            p.covers.emplace_back(i, i - 1);
        else
            p.covers.emplace_back(i - 1, i);
    }
    return p;
}

LatticePolytope hn_polytope(const Quiver& q, const StringWord& w) {
    auto p = string_fence(q, w);
    std::set<int> seen(p.elements.begin(), p.elements.end());
    if (seen.size() != p.elements.size()) throw Error(Errc::RepeatedVertex, "string visits a vertex twice");
    return order_polytope(p, static_cast<int>(q.vertices.size()));
}

FencePoset walk_fence(const FramedGraph& fg, int start, const std::vector<int>& edges) {
    const auto& g = fg.graph();
    FencePoset p;
    int cur = start;
    p.elements.push_back(fg.internal_index(cur));
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
        const auto& e = g.edge(edges[k]);
        if (e.tail != cur) throw Error(Errc::Precondition, "walk edges do not chain");
        cur = e.head;
        p.elements.push_back(fg.internal_index(cur));
        if (fg.colour(edges[k]) == Colour::Red)
            p.covers.emplace_back(k + 1, k);
        else
            p.covers.emplace_back(k, k + 1);
    }
    for (int x : p.elements)
        if (x < 0) throw Error(Errc::Precondition, "walk leaves the internal vertices");
    return p;
}

std::vector<LatticePolytope> order_polytope_summands(const FramedGraph& fg) {
    const auto& g = fg.graph();
    if (!g.acyclic()) throw Error(Errc::Precondition, "walks are only finite in a DAG");
    if (!fg.has_colouring()) throw Error(Errc::Precondition, "order polytopes need a colouring");
    const int dim = static_cast<int>(fg.internal().size());
    std::vector<LatticePolytope> out;
    std::vector<int> walk;
    std::function<void(int, int)> go = [&](int start, int v) {
        out.push_back(order_polytope(walk_fence(fg, start, walk), dim));
        for (int e : g.out(v)) {
            if (!g.is_internal(g.edge(e).head)) continue;
            walk.push_back(e);
            go(start, g.edge(e).head);
            walk.pop_back();
        }
    };
    for (int v : fg.internal()) go(v, v);
    return out;
}

// --- shards ------------------------------------------------------------------

bool valid_arc(int n, const Arc& arc) {
    if (arc.a < 1 || arc.a >= arc.b || arc.b > n + 1) return false;
    std::vector<int> all(arc.A);
    all.insert(all.end(), arc.B.begin(), arc.B.end());
    std::sort(all.begin(), all.end());
    std::vector<int> want;
    for (int i = arc.a + 1; i < arc.b; ++i) want.push_back(i);
    return all == want;
}

std::vector<std::vector<int>> alternating_matchings(const Arc& arc) {
    std::vector<int> tops(arc.A), bottoms(arc.B);
    tops.push_back(arc.a);
    bottoms.push_back(arc.b);
    std::sort(tops.begin(), tops.end());
    std::sort(bottoms.begin(), bottoms.end());
    std::vector<std::vector<int>> out;
    std::vector<int> m;
    std::function<void(int)> go = [&](int last) {
        out.push_back(m);
        for (int x : tops) {
            if (x <= last) continue;
            for (int y : bottoms) {
                if (y <= x) continue;
                m.push_back(x);
                m.push_back(y);
                go(y);
                m.pop_back();
                m.pop_back();
            }
        }
    };
    go(arc.a - 1);
    std::sort(out.begin(), out.end());
    return out;
}

IVec characteristic_vector(int n, const std::vector<int>& m) {
    IVec x(n + 1, 0);
    for (std::size_t i = 0; i + 1 < m.size(); i += 2) {
        x[m[i] - 1] += 1;
        x[m[i + 1] - 1] -= 1;
    }
    return x;
}

LatticePolytope shard_polytope(int n, const Arc& arc) {
    if (!valid_arc(n, arc)) throw Error(Errc::Precondition, "invalid arc");
    QMat pts;
    for (const auto& m : alternating_matchings(arc)) pts.push_back(to_qvec(characteristic_vector(n, m)));
    return LatticePolytope::from_points(n + 1, std::move(pts));
}

int ladder_alpha(int i) { return 2 * (i - 2); }
int ladder_beta(int i) { return 2 * (i - 2) + 1; }

Quiver ladder_quiver(int n) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 2; i <= n; ++i) {
        q.arrows.push_back({"alpha" + std::to_string(i), i - 2, i - 1});
        q.arrows.push_back({"beta" + std::to_string(i), i - 1, i - 2});
        q.relations.insert({ladder_alpha(i), ladder_beta(i)});
        q.relations.insert({ladder_beta(i), ladder_alpha(i)});
    }
    return q;
}

StringWord ladder_string(const Quiver& q, const LadderString& s) {
    (void)q;
    StringWord w;
    w.start = s.c - 1;
    for (int i = s.c + 1; i <= s.d; ++i) {
        if (std::find(s.C.begin(), s.C.end(), i) != s.C.end())
            w.letters.push_back({ladder_alpha(i), +1});
        else if (std::find(s.D.begin(), s.D.end(), i) != s.D.end())
            w.letters.push_back({ladder_beta(i), -1});
        else
            throw Error(Errc::Precondition, "C and D must cover [c+1, d]");
    }
    return w;
}

std::vector<LadderString> all_ladder_strings(int n) {
    std::vector<LadderString> out;
    for (int c = 1; c <= n; ++c)
        for (int d = c; d <= n; ++d) {
            const int len = d - c;
            for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
                LadderString s{c, d, {}, {}};
                for (int k = 0; k < len; ++k) (mask >> k & 1u ? s.C : s.D).push_back(c + 1 + k);
                out.push_back(std::move(s));
            }
        }
    return out;
}

Arc theta(const LadderString& s) { return {s.c, s.d + 1, s.C, s.D}; }

QVec iota(const QVec& x) {
    QVec y(x.size() + 1, Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += x[i];
        y[i + 1] -= x[i];
    }
    return y;
}

bool theta_iota_check(int n, const LadderString& s) {
    auto q = ladder_quiver(n);
    auto hn = hn_polytope(q, ladder_string(q, s));
    QMat image;
    for (const auto& x : hn.points) image.push_back(iota(x));
    auto lhs = LatticePolytope::from_points(n + 1, image).vertices();
    auto rhs = shard_polytope(n, theta(s)).vertices();
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

// --- sums and fans -----------------------------------------------------------

QMat minkowski_sum_vertices(const std::vector<LatticePolytope>& summands) {
    if (summands.empty()) throw Error(Errc::Precondition, "empty Minkowski sum");
    const int dim = summands.front().dim;
    QMat acc{QVec(dim, Rational(0))};
    for (const auto& s : summands) {
        if (s.dim != dim) throw Error(Errc::Precondition, "summands live in different dimensions");
        const auto vs = s.vertices();
        std::set<QVec> next;
        for (const auto& a : acc)
            for (const auto& v : vs) next.insert(add(a, v));
        QMat pts(next.begin(), next.end());
        acc = select(pts, hull_vertex_indices(pts));
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

int lex_argmax(const QMat& pts, const QVec& w) {
    int best = -1;
    Rational bv;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        Rational v = dot(pts[i], w);
        if (best < 0 || v > bv || (v == bv && pts[i] > pts[best])) best = i, bv = v;
    }
    return best;
}

std::vector<int> argmax_set(const QMat& pts, const QVec& w) {
    std::vector<int> out;
    Rational bv;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        Rational v = dot(pts[i], w);
        if (out.empty() || v > bv) {
            out.assign(1, i);
            bv = v;
        } else if (v == bv) {
            out.push_back(i);
        }
    }
    return out;
}

NormalFanCertificate certify_normal_fan(const std::vector<LatticePolytope>& summands, const Fan& candidate) {
    NormalFanCertificate cert;
    auto fail = [&](std::string why) { cert.failures.push_back(std::move(why)); };
    if (!fan_is_complete(candidate)) fail("candidate fan is not complete and simplicial");
    std::vector<QMat> verts;
    for (const auto& s : summands) {
        if (s.dim != candidate.dim) {
            fail("summand dimension differs from the fan");
            return cert;
        }
        verts.push_back(s.vertices());
    }
    for (std::size_t k = 0; k < candidate.cones.size(); ++k) {
        const auto& cone = candidate.cones[k];
        QVec w(candidate.dim, Rational(0));
        for (int r : cone) w = add(w, to_qvec(candidate.rays[r]));
        QVec vertex(candidate.dim, Rational(0));
        for (std::size_t s = 0; s < verts.size(); ++s) {
            auto best = argmax_set(verts[s], w);
            if (best.size() != 1) {
                fail("cone " + std::to_string(k) + ": interior functional ties on summand " + std::to_string(s));
                continue;
            }
            const auto& q = verts[s][best[0]];
            for (int r : cone) {
                auto rq = to_qvec(candidate.rays[r]);
                Rational top = dot(q, rq);
                for (const auto& x : verts[s])
                    if (dot(x, rq) > top) {
                        fail("cone " + std::to_string(k) + ": ray " + std::to_string(r) + " leaves the normal cone on summand " +
                             std::to_string(s));
                        break;
                    }
            }
            vertex = add(vertex, q);
        }
        cert.cone_vertex.push_back(std::move(vertex));
    }
    std::set<QVec> distinct(cert.cone_vertex.begin(), cert.cone_vertex.end());
    if (distinct.size() != cert.cone_vertex.size()) fail("two cones share a vertex of the sum");
    cert.ok = cert.failures.empty();
    return cert;
}

Fan minkowski_normal_fan(const std::vector<LatticePolytope>& summands, const Fan& candidate) {
    auto cert = certify_normal_fan(summands, candidate);
    if (!cert.ok) throw Error(Errc::DegenerateFunctional, cert.failures.front());
    return candidate;
}

Fan phi_image_fan(const FramedGraph& fg, const RouteSystem& rs, const std::vector<Clique>& cliques, std::vector<int>* ray_route) {
    const auto& g = fg.graph();
    Fan f;
    std::map<int, int> ray_of;
    std::vector<int> routes;
    QMat rows;
    for (std::size_t i = 0; i < rs.routes.size(); ++i) {
        if (rs.exceptional[i]) continue;
        auto img = phi_map(fg, to_qvec(indicator(g, rs.routes[i])));
        ray_of[static_cast<int>(i)] = static_cast<int>(f.rays.size());
        f.rays.push_back(primitive(img));
        rows.push_back(img);
        routes.push_back(static_cast<int>(i));
    }
    f.dim = rank(rows);
    for (const auto& k : cliques) {
        std::vector<int> cone;
        for (int r : k)
            if (ray_of.count(r)) cone.push_back(ray_of[r]);
        std::sort(cone.begin(), cone.end());
        f.cones.push_back(std::move(cone));
    }
    std::sort(f.cones.begin(), f.cones.end());
    if (ray_route) *ray_route = routes;
    return f;
}

Fan fan_in_basis(const Fan& f, const IMat& basis) {
    QMat rows;
    for (const auto& b : basis) rows.push_back(to_qvec(b));
    Fan out;
    out.dim = static_cast<int>(basis.size());
    out.cones = f.cones;
    for (const auto& r : f.rays) {
        auto c = coordinates_in_span(rows, to_qvec(r));
        if (!c) throw Error(Errc::Precondition, "ray outside the span of the basis");
        out.rays.push_back(primitive(*c));
    }
    return out;
}

QMat convex_hull_2d(QMat pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const QVec& o, const QVec& a, const QVec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    QMat h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

Fan polygon_normal_fan(const QMat& ccw) {
    Fan f;
    f.dim = 2;
    const std::size_t k = ccw.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& p = ccw[i];
        const auto& q = ccw[(i + 1) % k];
        f.rays.push_back(primitive({q[1] - p[1], p[0] - q[0]}));
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> c{static_cast<int>(i), static_cast<int>((i + 1) % k)};
        std::sort(c.begin(), c.end());
        f.cones.push_back(c);
    }
    std::sort(f.cones.begin(), f.cones.end());
    return f;
}

// --- cyclic ------------------------------------------------------------------

namespace {

QMat cycle_rows(const FramedGraph& fg) {
    const auto& g = fg.graph();
    QMat m;
    for (const auto& c : fg.minimal_cycles()) {
        QVec row(fg.internal().size(), Rational(0));
        for (int v : route_vertices(g, c)) row[fg.internal_index(v)] = 1;
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

QVec project_to_W(const FramedGraph& fg, const QVec& x) {
    const QMat m = cycle_rows(fg);
    if (m.empty()) return x;
    QMat gram(m.size(), QVec(m.size()));
    QVec mx(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        mx[i] = dot(m[i], x);
        for (std::size_t j = 0; j < m.size(); ++j) gram[i][j] = dot(m[i], m[j]);
    }
    auto lambda = solve(gram, mx);
    if (!lambda) throw Error(Errc::Internal, "singular cycle Gram matrix");
    QVec y = x;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) y[j] -= (*lambda)[i] * m[i][j];
    return y;
}

IMat w_basis(const FramedGraph& fg) {
    IMat out;
    for (const auto& v : nullspace(cycle_rows(fg), static_cast<int>(fg.internal().size()))) out.push_back(primitive(v));
    return out;
}

LatticePolytope delta_ab(int n, int a, int b) {
    std::vector<int> interval{a};
    while (interval.back() != b) interval.push_back(interval.back() % n + 1);
    QMat pts{QVec(n, Rational(0))};
    for (std::size_t i = 0; i < interval.size(); ++i) {
        QVec x(n, Rational(0));
        for (std::size_t j = i; j < interval.size(); ++j) x[interval[j] - 1] = 1;
        pts.push_back(std::move(x));
    }
    return LatticePolytope::from_points(n, std::move(pts));
}

std::vector<LatticePolytope> cyclohedron_summands(int n) {
    const auto fg = blossomed_cycle(n);
    const auto basis = w_basis(fg);
    std::vector<LatticePolytope> out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b % n + 1) continue;
            QMat pts;
            for (const auto& x : delta_ab(n, a, b).points) {
                auto px = project_to_W(fg, x);
                QVec y;
                for (const auto& row : basis) y.push_back(dot(to_qvec(row), px));
                pts.push_back(std::move(y));
            }
            out.push_back(LatticePolytope::from_points(static_cast<int>(basis.size()), std::move(pts)));
        }
    return out;
}

std::pair<int, int> cycle_route_label(int n, const Route& r) {
    if (r.is_cycle()) return {0, 0};
    return {r.edges.front() - n + 1, r.edges.back() - 2 * n + 1};
}

bool diagonals_cross(int n, std::pair<int, int> d1, std::pair<int, int> d2) {
    const int m = 2 * n;
    auto members = [&](std::pair<int, int> d) {
        std::vector<std::pair<int, int>> out;
        for (int shift : {0, n}) {
            int x = (d.first - 1 + shift) % m, y = (d.second - 1 + shift) % m;
            if (x > y) std::swap(x, y);
            if (std::find(out.begin(), out.end(), std::make_pair(x, y)) == out.end()) out.emplace_back(x, y);
        }
        return out;
    };
    for (auto [x1, y1] : members(d1))
        for (auto [x2, y2] : members(d2)) {
            if (x2 == x1 || x2 == y1 || y2 == x1 || y2 == y1) continue;
            bool in2 = x1 < x2 && x2 < y1;
            bool in3 = x1 < y2 && y2 < y1;
            if (in2 != in3) return true;
        }
    return false;
}

namespace {

// maximal cliques of a small graph given by an adjacency predicate
std::vector<std::vector<int>> small_maximal_cliques(int k, const std::function<bool(int, int)>& adj) {
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    std::function<void(std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            auto c = r;
            std::sort(c.begin(), c.end());
            out.push_back(c);
            return;
        }
        while (!p.empty()) {
            int v = p.back();
            p.pop_back();
            std::vector<int> p2, x2;
            for (int u : p)
                if (adj(u, v)) p2.push_back(u);
            for (int u : x)
                if (adj(u, v)) x2.push_back(u);
            r.push_back(v);
            bk(p2, x2);
            r.pop_back();
            x.push_back(v);
        }
    };
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 0);
    bk(all, {});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DiagonalFan cyclohedron_diagonal_fan(int n) {
    DiagonalFan df;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= a + n; ++b) df.labels.emplace_back(a, b);
    df.fan.dim = n - 1;
    for (auto [a, b] : df.labels) df.fan.rays.push_back({a, b});
    const int k = static_cast<int>(df.labels.size());
    df.fan.cones = small_maximal_cliques(k, [&](int i, int j) { return !diagonals_cross(n, df.labels[i], df.labels[j]); });
    return df;
}

Fan braid_fan(int m) {
    Fan f;
    f.dim = m - 1;
    std::map<std::uint32_t, int> index;
    for (std::uint32_t s = 1; s + 1 < (1u << m); ++s) {
        index[s] = static_cast<int>(f.rays.size());
        IVec r(m, 0);
        for (int i = 0; i < m; ++i) r[i] = s >> i & 1u;
        f.rays.push_back(std::move(r));
    }
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> cone;
        std::uint32_t s = 0;
        for (int i = 0; i + 1 < m; ++i) {
            s |= 1u << perm[i];
            cone.push_back(index[s]);
        }
        std::sort(cone.begin(), cone.end());
        f.cones.push_back(std::move(cone));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(f.cones.begin(), f.cones.end());
    return f;
}

std::vector<std::int64_t> fan_face_counts(const Fan& f) {
    std::set<std::vector<int>> faces;
    for (const auto& c : f.cones) {
        if (c.size() > 24) throw Error(Errc::SizeCap, "cone too large");
        for (std::uint32_t mask = 0; mask < (1u << c.size()); ++mask) {
            std::vector<int> s;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (mask >> i & 1u) s.push_back(c[i]);
            faces.insert(std::move(s));
        }
    }
    std::vector<std::int64_t> out(f.dim + 1, 0);
    for (const auto& s : faces)
        if (static_cast<int>(s.size()) <= f.dim) ++out[s.size()];
    return out;
}

bool fan_isomorphic(const Fan& f1, const Fan& f2) {
    const int n = static_cast<int>(f1.rays.size());
    if (n != static_cast<int>(f2.rays.size()) || f1.cones.size() != f2.cones.size()) return false;
    auto profile = [](const Fan& f) {
        std::vector<std::size_t> s;
        for (const auto& c : f.cones) s.push_back(c.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    if (profile(f1) != profile(f2)) return false;
    auto prep = [n](const Fan& f, std::vector<int>& deg, std::vector<std::vector<char>>& adj,
                    std::vector<std::vector<int>>& cones_at) {
        deg.assign(n, 0);
        adj.assign(n, std::vector<char>(n, 0));
        cones_at.assign(n, {});
        for (std::size_t k = 0; k < f.cones.size(); ++k)
            for (int r : f.cones[k]) {
                ++deg[r];
                cones_at[r].push_back(static_cast<int>(k));
                for (int s : f.cones[k]) adj[r][s] = 1;
            }
    };
    std::vector<int> deg1, deg2;
    std::vector<std::vector<char>> adj1, adj2;
    std::vector<std::vector<int>> at1, at2;
    prep(f1, deg1, adj1, at1);
    prep(f2, deg2, adj2, at2);
    {
        auto a = deg1, b = deg2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::set<std::vector<int>> cones2;
    for (auto c : f2.cones) {
        std::sort(c.begin(), c.end());
        cones2.insert(c);
    }
    // visit rays of f1 in BFS order so each new ray has mapped neighbours
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        order.push_back(root);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i)
            for (int s = 0; s < n; ++s)
                if (adj1[order[i]][s] && !seen[s]) seen[s] = 1, order.push_back(s);
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> go = [&](int i) {
        if (i == n) return true;
        const int r = order[i];
        for (int t = 0; t < n; ++t) {
            if (used[t] || deg2[t] != deg1[r]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (adj1[r][order[j]] != adj2[t][map[order[j]]]) ok = false;
            if (!ok) continue;
            map[r] = t;
            used[t] = 1;
            for (int k : at1[r]) {
                const auto& c = f1.cones[k];
                bool complete = std::all_of(c.begin(), c.end(), [&](int x) { return map[x] >= 0; });
                if (!complete) continue;
                std::vector<int> img;
                for (int x : c) img.push_back(map[x]);
                std::sort(img.begin(), img.end());
                if (!cones2.count(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok && go(i + 1)) return true;
            map[r] = -1;
            used[t] = 0;
        }
        return false;
    };
    return go(0);
}

// --- H-descriptions ----------------------------------------------------------

HPolytope h_description(const QMat& A, const QVec& b, const QVec& eq, const Rational& eq_rhs) {
    const int n = static_cast<int>(eq.size());
    const int m = static_cast<int>(A.size());
    const int k = n - 1;
    if (k > m) throw Error(Errc::Precondition, "not enough inequalities for a vertex");
    HPolytope hp;
    std::set<QVec> found;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        QMat M{eq};
        QVec rhs{eq_rhs};
        for (int i : idx) {
            M.push_back(A[i]);
            rhs.push_back(b[i]);
        }
        if (rank(M) == n) {
            auto x = solve(M, rhs);
            if (x) {
                bool inside = true;
                for (int i = 0; i < m && inside; ++i)
                    if (dot(A[i], *x) > b[i]) inside = false;
                if (inside) found.insert(*x);
            }
        }
        int p = k - 1;
        while (p >= 0 && idx[p] == m - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    hp.vertices.assign(found.begin(), found.end());
    hp.dim = affine_rank(hp.vertices);
    const int nv = static_cast<int>(hp.vertices.size());
    std::vector<std::vector<int>> tight(nv);
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < m; ++i)
            if (dot(A[i], hp.vertices[v]) == b[i]) tight[v].push_back(i);
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
            std::vector<int> common;
            std::set_intersection(tight[u].begin(), tight[u].end(), tight[v].begin(), tight[v].end(),
                                  std::back_inserter(common));
            QMat M{eq};
            for (int i : common) M.push_back(A[i]);
            if (rank(M) == n - 1) hp.edges.emplace_back(u, v);
        }
    std::set<std::vector<int>> facet_sets;
    for (int i = 0; i < m; ++i) {
        std::vector<int> on;
        for (int v = 0; v < nv; ++v)
            if (std::binary_search(tight[v].begin(), tight[v].end(), i)) on.push_back(v);
        if (on.empty() || affine_rank(select(hp.vertices, on)) != hp.dim - 1) continue;
        if (!facet_sets.insert(on).second) continue;
        hp.facet_inequalities.push_back(i);
        hp.facet_vertices.push_back(on);
    }
    return hp;
}

}  // namespace flowfan
