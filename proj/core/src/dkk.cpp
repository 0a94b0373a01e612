#include "flowfan/dkk.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace flowfan {

int RouteSystem::index_of(const std::vector<int>& edges) const {
    auto it = lookup.find(edges);
    return it == lookup.end() ? -1 : it->second;
}

RouteSystem route_system(const FramedGraph& fg, RouteOptions opt) {
    RouteSystem rs;
    rs.routes = enumerate_routes(fg, opt);
    const std::size_t n = rs.routes.size();
    rs.compat.assign(n, std::vector<char>(n, 1));
    rs.exceptional.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        rs.lookup[rs.routes[i].edges] = static_cast<int>(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            bool c = compatible(fg, rs.routes[i], rs.routes[j]);
            rs.compat[i][j] = rs.compat[j][i] = c;
            if (!c) rs.exceptional[i] = rs.exceptional[j] = 0;
        }
    }
    return rs;
}

namespace {

QMat incidence_rows(const Digraph& g) {
    QMat m;
    for (int v : g.internal()) {
        QVec row(g.edge_count(), Rational(0));
        for (int e : g.out(v)) row[e] += 1;
        for (int e : g.in(v)) row[e] -= 1;
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

int flow_space_dim(const FramedGraph& fg) {
    const auto& g = fg.graph();
    return g.edge_count() - rank(incidence_rows(g));
}

IMat flow_lattice_basis(const Digraph& g) {
    // the incidence matrix is totally unimodular, so the free-variable kernel basis is integral
    // and, having an identity block, spans every integer kernel vector
    IMat out;
    for (const auto& v : nullspace(incidence_rows(g), g.edge_count())) {
        IVec row;
        for (const auto& q : v) {
            if (boost::multiprecision::denominator(q) != 1) throw Error(Errc::Internal, "non-integral kernel vector");
            row.push_back(to_i64(boost::multiprecision::numerator(q)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Clique> maximal_cliques(const RouteSystem& rs, std::size_t cap) {
    std::vector<int> core, universal;
    for (int i = 0; i < static_cast<int>(rs.routes.size()); ++i)
        (rs.exceptional[i] ? universal : core).push_back(i);
    std::vector<Clique> out;
    std::vector<int> r;
    // Bron–Kerbosch with pivot on the non-universal routes
    std::function<void(std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            if (out.size() >= cap) throw Error(Errc::CliqueExplosion, "more than " + std::to_string(cap) + " cliques");
            Clique k = r;
            k.insert(k.end(), universal.begin(), universal.end());
            std::sort(k.begin(), k.end());
            out.push_back(std::move(k));
            return;
        }
        int pivot = -1;
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
            for (int u : *set) {
                std::size_t cnt = 0;
                for (int w : p) cnt += rs.compat[u][w] && u != w;
                if (pivot < 0 || cnt > best) {
                    pivot = u;
                    best = cnt;
                }
            }
        std::vector<int> cand;
        for (int w : p)
            if (!(rs.compat[pivot][w] && w != pivot)) cand.push_back(w);
        for (int w : cand) {
            std::vector<int> np, nx;
            for (int y : p)
                if (y != w && rs.compat[w][y]) np.push_back(y);
            for (int y : x)
                if (y != w && rs.compat[w][y]) nx.push_back(y);
            r.push_back(w);
            bk(np, nx);
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), w));
            x.push_back(w);
        }
    };
    bk(core, {});
    std::sort(out.begin(), out.end());
    return out;
}

IVec indicator(const Digraph& g, const Route& r) {
    IVec v(g.edge_count(), 0);
    for (int e : r.edges) v[e] += 1;
    return v;
}

bool is_unimodular(const FramedGraph& fg, const RouteSystem& rs, const Clique& k) {
    if (static_cast<int>(k.size()) != flow_space_dim(fg)) return false;
    std::vector<std::vector<BigInt>> rows;
    for (int i : k) {
        std::vector<BigInt> row;
        for (auto x : indicator(fg.graph(), rs.routes[i])) row.emplace_back(x);
        rows.push_back(std::move(row));
    }
    return has_unit_invariant_factors(rows);
}

std::map<int, Rational> decompose_flow(const FramedGraph& fg, const RouteSystem& rs, const QVec& f) {
    const auto& g = fg.graph();
    const int m = g.edge_count();
    if (static_cast<int>(f.size()) != m) throw Error(Errc::Precondition, "flow vector has the wrong length");
    for (int e = 0; e < m; ++e)
        if (f[e] < 0) throw Error(Errc::NegativeFlow, "negative value on edge " + g.edge(e).id);
    for (int v : fg.internal()) {
        Rational net = 0;
        for (int e : g.out(v)) net += f[e];
        for (int e : g.in(v)) net -= f[e];
        if (net != 0) throw Error(Errc::UnbalancedFlow, "netflow " + to_string(net) + " at " + g.name(v));
    }
    QVec h = f;
    std::map<int, Rational> coef;
    for (const auto& c : fg.minimal_cycles()) {
        Rational mc = h[c.edges[0]];
        for (int e : c.edges) mc = std::min(mc, h[e]);
        if (mc == 0) continue;
        for (int e : c.edges) h[e] -= mc;
        int idx = rs.index_of(c.edges);
        if (idx < 0) throw Error(Errc::Internal, "cycle missing from the route list");
        coef[idx] += mc;
    }
    // stack inflow by the in-order and outflow by the out-order; matching positions chain into routes
    QVec in_off(m, Rational(0)), out_off(m, Rational(0));
    for (const auto& [v, o] : fg.orders()) {
        Rational s = 0;
        for (int e : o.in) in_off[e] = s, s += h[e];
        s = 0;
        for (int e : o.out) out_off[e] = s, s += h[e];
    }
    std::vector<int> path;
    std::function<void(int, const Rational&, const Rational&)> walk = [&](int e, const Rational& lo, const Rational& hi) {
        if (static_cast<int>(path.size()) > m) throw Error(Errc::Internal, "decomposition walk does not terminate");
        int v = g.edge(e).head;
        if (g.is_sink(v)) {
            int idx = rs.index_of(path);
            if (idx < 0) throw Error(Errc::Internal, "decomposition produced an unknown route");
            coef[idx] += hi - lo;
            return;
        }
        Rational a = in_off[e] + lo, b = in_off[e] + hi;
        for (int f2 : fg.orders().at(v).out) {
            Rational end = out_off[f2] + h[f2];
            Rational x = std::max(a, out_off[f2]), y = std::min(b, end);
            if (x >= y) continue;
            path.push_back(f2);
            walk(f2, x - out_off[f2], y - out_off[f2]);
            path.pop_back();
        }
    };
    for (int s : g.sources())
        for (int e : g.out(s)) {
            if (h[e] == 0) continue;
            path.assign(1, e);
            walk(e, 0, h[e]);
        }
    for (auto it = coef.begin(); it != coef.end();) it = it->second == 0 ? coef.erase(it) : std::next(it);
    for (auto i = coef.begin(); i != coef.end(); ++i)
        for (auto j = std::next(i); j != coef.end(); ++j)
            if (!rs.compat[i->first][j->first]) throw Error(Errc::Internal, "decomposition support is not a clique");
    return coef;
}

std::vector<Clique> cliques_by_zero_edges(const FramedGraph& fg, const RouteSystem& rs) {
    const auto& cycles = fg.minimal_cycles();
    if (!fg.has_colouring()) throw Error(Errc::Precondition, "zero-edge assembly needs a colouring");
    std::set<Clique> all;
    std::vector<int> choice(cycles.size(), 0);
    for (;;) {
        std::vector<int> removed;
        for (std::size_t i = 0; i < cycles.size(); ++i) removed.push_back(cycles[i].edges[choice[i]]);
        std::vector<int> emap;
        Digraph h = fg.graph().without_edges(removed, &emap);
        std::vector<Colour> col;
        for (int old : emap) col.push_back(fg.colour(old));
        FramedGraph sub(std::move(h), std::move(col));
        auto srs = route_system(sub);
        for (const auto& k : maximal_cliques(srs)) {
            Clique big;
            for (int i : k) {
                std::vector<int> edges;
                for (int e : srs.routes[i].edges) edges.push_back(emap[e]);
                int idx = rs.index_of(edges);
                if (idx < 0) throw Error(Errc::Internal, "route of H - S is not a route of H");
                big.push_back(idx);
            }
            for (const auto& c : cycles) big.push_back(rs.index_of(c.edges));
            std::sort(big.begin(), big.end());
            all.insert(big);
        }
        std::size_t i = 0;
        for (; i < cycles.size(); ++i) {
            if (++choice[i] < static_cast<int>(cycles[i].edges.size())) break;
            choice[i] = 0;
        }
        if (i == cycles.size()) break;
    }
    return {all.begin(), all.end()};
}

TriangulationReport verify_triangulation(const FramedGraph& fg, const RouteSystem& rs, const std::vector<Clique>& cliques,
                                         int samples, std::uint64_t seed) {
    TriangulationReport rep;
    const auto& g = fg.graph();
    const int dim = flow_space_dim(fg);
    rep.cones = static_cast<int>(cliques.size());
    for (const auto& k : cliques) {
        if (static_cast<int>(k.size()) != dim) rep.cardinality = false;
        std::vector<char> used(g.edge_count(), 0);
        for (int i : k)
            for (int e : rs.routes[i].edges) used[e] = 1;
        if (std::count(used.begin(), used.end(), 0)) rep.edges_covered = false;
    }
    if (!rep.cardinality) rep.failures.push_back("a maximal clique has the wrong size");
    if (!rep.edges_covered) rep.failures.push_back("a maximal clique misses an edge");

    std::vector<QMat> rows(cliques.size());
    for (std::size_t c = 0; c < cliques.size(); ++c)
        for (int i : cliques[c]) rows[c].push_back(to_qvec(indicator(g, rs.routes[i])));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 1000), den(1, 97);
    for (int s = 0; s < samples; ++s) {
        QVec f(g.edge_count(), Rational(0));
        for (const auto& r : rs.routes) {
            Rational w(num(rng), den(rng));
            for (int e : r.edges) f[e] += w;
        }
        std::map<int, Rational> dec;
        try {
            dec = decompose_flow(fg, rs, f);
        } catch (const Error& e) {
            rep.sampling = false;
            rep.failures.push_back(std::string("sample ") + std::to_string(s) + ": " + e.what());
            continue;
        }
        int hits = 0;
        bool agree = false;
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            auto x = coordinates_in_span(rows[c], f);
            if (!x) continue;
            if (std::any_of(x->begin(), x->end(), [](const Rational& q) { return q < 0; })) continue;
            ++hits;
            std::map<int, Rational> sol;
            for (std::size_t t = 0; t < cliques[c].size(); ++t)
                if ((*x)[t] != 0) sol[cliques[c][t]] = (*x)[t];
            agree = agree || sol == dec;
        }
        ++rep.samples;
        if (hits != 1 || !agree) {
            rep.sampling = false;
            rep.failures.push_back("sample " + std::to_string(s) + " lies in " + std::to_string(hits) + " cones");
        }
    }
    if (!fg.minimal_cycles().empty()) {
        auto assembled = cliques_by_zero_edges(fg, rs);
        auto sorted = cliques;
        std::sort(sorted.begin(), sorted.end());
        if (assembled != sorted) {
            rep.cyclic_union = false;
            rep.failures.push_back("cones differ from the union over zero-edge choices");
        }
    }
    rep.ok = rep.cardinality && rep.edges_covered && rep.sampling && rep.cyclic_union;
    return rep;
}

bool fan_is_simplicial_full(const Fan& f) {
    for (const auto& c : f.cones) {
        if (static_cast<int>(c.size()) != f.dim) return false;
        QMat m;
        for (int r : c) m.push_back(to_qvec(f.rays[r]));
        if (rank(m) != f.dim) return false;
    }
    return true;
}

bool fan_is_complete(const Fan& f) {
    if (f.cones.empty() || !fan_is_simplicial_full(f)) return false;
    std::map<std::vector<int>, int> ridges;
    for (const auto& c : f.cones)
        for (std::size_t i = 0; i < c.size(); ++i) {
            auto r = c;
            r.erase(r.begin() + static_cast<long>(i));
            ++ridges[r];
        }
    for (const auto& [r, n] : ridges)
        if (n != 2) return false;
    return true;
}

ReducedFan reduced_fan(const FramedGraph& fg, const RouteSystem& rs, const std::vector<Clique>& cliques) {
    const auto& g = fg.graph();
    const int m = g.edge_count();
    if (fg.minimal_cycles().empty()) {
        std::vector<char> on_exc(m, 0);
        for (std::size_t i = 0; i < rs.routes.size(); ++i)
            if (rs.exceptional[i])
                for (int e : rs.routes[i].edges) on_exc[e] = 1;
        for (int e = 0; e < m; ++e)
            if (!on_exc[e]) throw Error(Errc::NotAmple, "edge " + g.edge(e).id + " lies on no exceptional route");
    }
    QMat cons = incidence_rows(g);
    for (std::size_t i = 0; i < rs.routes.size(); ++i)
        if (rs.exceptional[i]) cons.push_back(to_qvec(indicator(g, rs.routes[i])));
    ReducedFan rf;
    for (const auto& v : nullspace(cons, m)) rf.quotient.push_back(primitive(v));
    rf.fan.dim = static_cast<int>(rf.quotient.size());
    std::map<int, int> ray_of;
    for (std::size_t i = 0; i < rs.routes.size(); ++i) {
        if (rs.exceptional[i]) continue;
        auto ind = indicator(g, rs.routes[i]);
        QVec y;
        for (const auto& p : rf.quotient) {
            std::int64_t s = 0;
            for (int e = 0; e < m; ++e) s += p[e] * ind[e];
            y.emplace_back(s);
        }
        ray_of[static_cast<int>(i)] = static_cast<int>(rf.fan.rays.size());
        rf.fan.rays.push_back(primitive(y));
        rf.ray_route.push_back(static_cast<int>(i));
    }
    for (const auto& k : cliques) {
        std::vector<int> cone;
        for (int i : k)
            if (!rs.exceptional[i]) cone.push_back(ray_of.at(i));
        std::sort(cone.begin(), cone.end());
        rf.fan.cones.push_back(std::move(cone));
    }
    rf.complete = fan_is_complete(rf.fan);
    return rf;
}

}  // namespace flowfan
