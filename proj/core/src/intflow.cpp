#include "flowfan/intflow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace flowfan {

Netflow volume_netflow(const Digraph& g) {
    Netflow t(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_internal(v)) t[v] = g.indeg(v) - 1;
    return t;
}

std::vector<IVec> enumerate_integer_flows(const Digraph& g, const Netflow& target, std::size_t cap) {
    if (static_cast<int>(target.size()) != g.vertex_count()) throw Error(Errc::Precondition, "netflow target has the wrong length");
    const auto order = g.topological_order();
    std::vector<IVec> out;
    IVec f(g.edge_count(), 0);
    std::function<void(std::size_t)> at_vertex;
    // spread `left` units over out-edges i.. of v, then move on to the next vertex
    std::function<void(int, std::size_t, std::int64_t, std::size_t)> spread = [&](int v, std::size_t i, std::int64_t left,
                                                                                 std::size_t next) {
        const auto& outs = g.out(v);
        if (i + 1 == outs.size()) {
            f[outs[i]] = left;
            at_vertex(next);
            f[outs[i]] = 0;
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            f[outs[i]] = x;
            spread(v, i + 1, left - x, next);
        }
        f[outs[i]] = 0;
    };
    at_vertex = [&](std::size_t pos) {
        while (pos < order.size() && g.out(order[pos]).empty()) ++pos;
        if (pos == order.size()) {
            if (out.size() >= cap) throw Error(Errc::FlowExplosion, "more than " + std::to_string(cap) + " flows");
            out.push_back(f);
            return;
        }
        int v = order[pos];
        std::int64_t inflow = 0;
        for (int e : g.in(v)) inflow += f[e];
        std::int64_t total = target[v] + inflow;
        if (total < 0) return;
        spread(v, 0, total, pos + 1);
    };
    at_vertex(0);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_flows_gf(const Digraph& g, const Netflow& target) {
    if (static_cast<int>(target.size()) != g.vertex_count()) throw Error(Errc::Precondition, "netflow target has the wrong length");
    const auto order = g.topological_order();
    std::vector<int> pos(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::int64_t bound = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.is_sink(v)) bound += std::max<std::int64_t>(0, target[v]);
    std::vector<int> edges(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) edges[e] = e;
    std::stable_sort(edges.begin(), edges.end(), [&](int a, int b) { return pos[g.edge(a).head] < pos[g.edge(b).head]; });
    std::vector<int> remaining(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) remaining[v] = g.indeg(v) + g.outdeg(v);

    using Poly = std::map<std::vector<std::int64_t>, BigInt>;
    Poly poly;
    poly[std::vector<std::int64_t>(g.vertex_count(), 0)] = 1;
    auto close = [&](int v) {
        // every edge at v is multiplied in: keep only the wanted exponent of z_v and drop the variable
        Poly next;
        for (auto& [mono, c] : poly) {
            if (!g.is_sink(v) && mono[v] != target[v]) continue;
            auto m2 = mono;
            m2[v] = 0;
            next[m2] += c;
        }
        poly.swap(next);
    };
    for (int v = 0; v < g.vertex_count(); ++v)
        if (remaining[v] == 0) close(v);
    for (int e : edges) {
        const int t = g.edge(e).tail, h = g.edge(e).head;
        Poly next;
        for (auto& [mono, c] : poly)
            for (std::int64_t k = 0; k <= bound; ++k) {
                auto m2 = mono;
                m2[t] += k;
                m2[h] -= k;
                next[m2] += c;
            }
        poly.swap(next);
        if (--remaining[t] == 0) close(t);
        if (--remaining[h] == 0) close(h);
    }
    BigInt total = 0;
    for (auto& [mono, c] : poly) total += c;
    return total;
}

std::vector<VolumeFlow> volume_flows(const FramedGraph& fg, std::size_t cap) {
    const auto& g = fg.graph();
    const auto& cycles = fg.minimal_cycles();
    std::vector<VolumeFlow> out;
    if (cycles.empty()) {
        for (auto& f : enumerate_integer_flows(g, volume_netflow(g), cap)) out.push_back({std::move(f), {}});
        return out;
    }
    if (!fg.has_colouring() || !is_cyclic_ample(fg))
        throw Error(Errc::Precondition, "cyclic volume flows need a cyclic ample colouring");
    std::vector<int> choice(cycles.size(), 0);
    for (;;) {
        std::vector<int> zero;
        for (std::size_t i = 0; i < cycles.size(); ++i) zero.push_back(cycles[i].edges[choice[i]]);
        std::vector<int> emap;
        Digraph h = g.without_edges(zero, &emap);
        Netflow t(g.vertex_count(), 0);
        for (int v : fg.internal()) t[v] = h.indeg(v) - 1;
        for (const auto& fp : enumerate_integer_flows(h, t, cap)) {
            IVec f(g.edge_count(), 0);
            for (std::size_t e = 0; e < fp.size(); ++e) f[emap[e]] = fp[e];
            for (std::size_t i = 0; i < cycles.size(); ++i)
                for (int e : cycles[i].edges)
                    if (e != zero[i]) f[e] += 1;
            out.push_back({std::move(f), zero});
            if (out.size() > cap) throw Error(Errc::FlowExplosion, "too many cyclic volume flows");
        }
        std::size_t i = 0;
        for (; i < cycles.size(); ++i) {
            if (++choice[i] < static_cast<int>(cycles[i].edges.size())) break;
            choice[i] = 0;
        }
        if (i == cycles.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<int>> cyclic_volume_zero_edges(const FramedGraph& fg, const IVec& f) {
    const auto& g = fg.graph();
    if (static_cast<int>(f.size()) != g.edge_count()) return std::nullopt;
    for (auto x : f)
        if (x < 0) return std::nullopt;
    std::vector<int> zero;
    std::vector<int> drop(g.vertex_count(), 0);
    for (const auto& c : fg.minimal_cycles()) {
        int z = -1, count = 0;
        for (int e : c.edges)
            if (f[e] == 0) z = e, ++count;
        if (count != 1) return std::nullopt;
        zero.push_back(z);
        ++drop[g.edge(z).tail];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        std::int64_t net = 0;
        for (int e : g.out(v)) net += f[e];
        for (int e : g.in(v)) net -= f[e];
        std::int64_t want = g.is_internal(v) ? g.indeg(v) - 1 - drop[v] : 0;
        if (net != want) return std::nullopt;
    }
    return zero;
}

IVec phi(const FramedGraph& fg, const RouteSystem& rs, const Clique& k) {
    const auto& g = fg.graph();
    if (static_cast<int>(k.size()) != flow_space_dim(fg)) throw Error(Errc::NotMaximal, "clique is not maximal");
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            if (!rs.compat[k[i]][k[j]]) throw Error(Errc::NotMaximal, "routes are not pairwise compatible");
    std::vector<std::set<std::vector<int>>> prefixes(g.edge_count());
    for (int i : k) {
        const auto& r = rs.routes[i];
        if (r.is_cycle()) {
            auto key = r.edges;
            key.push_back(-1);
            for (int e : r.edges) prefixes[e].insert(key);
            continue;
        }
        std::vector<int> pre;
        for (int e : r.edges) {
            pre.push_back(e);
            prefixes[e].insert(pre);
        }
    }
    IVec f(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) f[e] = static_cast<std::int64_t>(prefixes[e].size()) - 1;
    return f;
}

bool phi_is_bijective(const FramedGraph& fg, const RouteSystem& rs, const std::vector<Clique>& cliques) {
    std::set<IVec> images;
    for (const auto& k : cliques) images.insert(phi(fg, rs, k));
    if (images.size() != cliques.size()) return false;
    std::set<IVec> flows;
    for (const auto& vf : volume_flows(fg)) flows.insert(vf.flow);
    return images == flows;
}

BigInt flow_complex_volume(const FramedGraph& fg) {
    auto rs = route_system(fg);
    auto n = maximal_cliques(rs).size();
    auto m = volume_flows(fg).size();
    if (n != m)
        throw Error(Errc::Internal, std::to_string(n) + " maximal cliques but " + std::to_string(m) + " volume flows");
    return BigInt(n);
}

}  // namespace flowfan
