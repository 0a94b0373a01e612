#include "flowfan/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace flowfan {

int Digraph::add_vertex(const std::string& name) {
    if (vindex_.count(name)) throw Error(Errc::Precondition, "duplicate vertex id '" + name + "'");
    int v = vertex_count();
    names_.push_back(name);
    in_.emplace_back();
    out_.emplace_back();
    vindex_[name] = v;
    return v;
}

int Digraph::add_edge(int tail, int head, const std::string& id) {
    if (tail < 0 || head < 0 || tail >= vertex_count() || head >= vertex_count())
        throw Error(Errc::Precondition, "edge endpoint is not a declared vertex");
    int e = edge_count();
    std::string eid = id.empty() ? "e" + std::to_string(e) : id;
    if (eindex_.count(eid)) throw Error(Errc::Precondition, "duplicate edge id '" + eid + "'");
    edges_.push_back({eid, tail, head});
    out_[tail].push_back(e);
    in_[head].push_back(e);
    eindex_[eid] = e;
    return e;
}

std::optional<int> Digraph::vertex_index(const std::string& name) const {
    auto it = vindex_.find(name);
    if (it == vindex_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Digraph::edge_index(const std::string& id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Digraph::sources() const {
    std::vector<int> r;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_source(v)) r.push_back(v);
    return r;
}

std::vector<int> Digraph::sinks() const {
    std::vector<int> r;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_sink(v)) r.push_back(v);
    return r;
}

std::vector<int> Digraph::internal() const {
    std::vector<int> r;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_internal(v)) r.push_back(v);
    return r;
}

bool Digraph::weakly_connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        auto visit = [&](int w) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        };
        for (int e : out_[v]) visit(edges_[e].head);
        for (int e : in_[v]) visit(edges_[e].tail);
    }
    return count == vertex_count();
}

std::vector<int> Digraph::topological_order() const {
    std::vector<int> indeg(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) indeg[v] = this->indeg(v);
    std::queue<int> q;
    for (int v = 0; v < vertex_count(); ++v)
        if (indeg[v] == 0) q.push(v);
    std::vector<int> order;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int e : out_[v])
            if (--indeg[edges_[e].head] == 0) q.push(edges_[e].head);
    }
    if (static_cast<int>(order.size()) != vertex_count())
        throw Error(Errc::Precondition, "graph has a directed cycle");
    return order;
}

bool Digraph::acyclic() const {
    try {
        topological_order();
        return true;
    } catch (const Error&) {
        return false;
    }
}

Digraph Digraph::without_edges(const std::vector<int>& removed, std::vector<int>* edge_map) const {
    std::set<int> rm(removed.begin(), removed.end());
    Digraph h;
    for (const auto& n : names_) h.add_vertex(n);
    if (edge_map) edge_map->clear();
    for (int e = 0; e < edge_count(); ++e) {
        if (rm.count(e)) continue;
        h.add_edge(edges_[e].tail, edges_[e].head, edges_[e].id);
        if (edge_map) edge_map->push_back(e);
    }
    return h;
}

std::vector<int> route_vertices(const Digraph& g, const Route& r) {
    std::vector<int> vs;
    if (r.edges.empty()) return vs;
    vs.push_back(g.edge(r.edges.front()).tail);
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        if (r.is_cycle() && i + 1 == r.edges.size()) break;
        vs.push_back(g.edge(r.edges[i]).head);
    }
    return vs;
}

// --- FramedGraph ---------------------------------------------------------------

FramedGraph::FramedGraph(Digraph g, std::vector<Colour> colouring) : g_(std::move(g)) {
    if (static_cast<int>(colouring.size()) != g_.edge_count())
        throw Error(Errc::Precondition, "colouring size does not match edge count");
    colour_ = std::move(colouring);
    for (int v : g_.internal()) {
        VertexOrder o;
        auto sorted = [&](const std::vector<int>& es, const char* side) {
            std::vector<int> r, b;
            for (int e : es) ((*colour_)[e] == Colour::Red ? r : b).push_back(e);
            if (r.size() > 1 || b.size() > 1)
                throw Error(Errc::Precondition, std::string("colouring repeats a colour on the ") + side +
                                                    " side of vertex " + g_.name(v));
            r.insert(r.end(), b.begin(), b.end());
            return r;
        };
        o.in = sorted(g_.in(v), "incoming");
        o.out = sorted(g_.out(v), "outgoing");
        orders_[v] = std::move(o);
    }
    init();
}

FramedGraph::FramedGraph(Digraph g, std::map<int, VertexOrder> orders) : g_(std::move(g)), orders_(std::move(orders)) {
    auto internal = g_.internal();
    if (orders_.size() != internal.size())
        throw Error(Errc::Precondition, "order framing must cover exactly the internal vertices");
    for (int v : internal) {
        auto it = orders_.find(v);
        if (it == orders_.end()) throw Error(Errc::Precondition, "no order at vertex " + g_.name(v));
        auto a = it->second.in, b = g_.in(v);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        auto c = it->second.out, d = g_.out(v);
        std::sort(c.begin(), c.end());
        std::sort(d.begin(), d.end());
        if (a != b || c != d) throw Error(Errc::Precondition, "order at " + g_.name(v) + " is not a permutation");
    }
    init();
}

void FramedGraph::init() {
    const int m = g_.edge_count();
    rank_in_.assign(m, 0);
    rank_out_.assign(m, 0);
    for (const auto& [v, o] : orders_) {
        for (std::size_t i = 0; i < o.in.size(); ++i) rank_in_[o.in[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < o.out.size(); ++i) rank_out_[o.out[i]] = static_cast<int>(i);
    }
    internal_ = g_.internal();
    sources_ = g_.sources();
    sinks_ = g_.sinks();
    internal_pos_.assign(g_.vertex_count(), -1);
    for (std::size_t i = 0; i < internal_.size(); ++i) internal_pos_[internal_[i]] = static_cast<int>(i);
    cycles_ = flowfan::minimal_cycles(g_);
}

// --- validation ----------------------------------------------------------------

ValidationReport validate(const Digraph& g) {
    ValidationReport r;
    r.edges = g.edge_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_source(v)) {
            ++r.sources;
            if (g.outdeg(v) != 1)
                r.violations.push_back("source " + g.name(v) + " has degree " + std::to_string(g.outdeg(v)));
        } else if (g.is_sink(v)) {
            ++r.sinks;
            if (g.indeg(v) != 1)
                r.violations.push_back("sink " + g.name(v) + " has degree " + std::to_string(g.indeg(v)));
        } else {
            ++r.internal;
            if (g.indeg(v) != 2 || g.outdeg(v) != 2) r.full = false;
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (g.is_internal(ed.tail) && g.is_internal(ed.head) && (g.outdeg(ed.tail) == 1 || g.indeg(ed.head) == 1))
            r.violations.push_back("idle edge " + ed.id);
    }
    if (!g.weakly_connected()) r.violations.push_back("graph is not weakly connected");
    r.valid = r.violations.empty();
    if (!r.full) {
        for (int v : g.internal())
            if (g.indeg(v) != 2 || g.outdeg(v) != 2) r.violations.push_back("not full at " + g.name(v));
    }
    return r;
}

std::vector<Route> minimal_cycles(const Digraph& g) {
    std::vector<Route> out;
    const int m = g.edge_count();
    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<int> path;
    for (int e0 = 0; e0 < m; ++e0) {
        const int start = g.edge(e0).tail;
        if (g.edge(e0).head == start) {
            out.push_back({Route::Kind::Cycle, {e0}, -1, -1});
            continue;
        }
        path.assign(1, e0);
        on_path[start] = on_path[g.edge(e0).head] = 1;
        std::function<void(int)> dfs = [&](int v) {
            for (int e : g.out(v)) {
                if (e <= e0) continue;
                int w = g.edge(e).head;
                if (w == start) {
                    auto c = path;
                    c.push_back(e);
                    out.push_back({Route::Kind::Cycle, c, -1, -1});
                } else if (!on_path[w]) {
                    on_path[w] = 1;
                    path.push_back(e);
                    dfs(w);
                    path.pop_back();
                    on_path[w] = 0;
                }
            }
        };
        dfs(g.edge(e0).head);
        on_path[start] = on_path[g.edge(e0).head] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_cyclic_ample(const FramedGraph& fg) {
    if (!fg.has_colouring()) throw Error(Errc::Precondition, "cyclic ampleness needs a colouring");
    const auto& g = fg.graph();
    for (int v : fg.internal()) {
        auto one_each = [&](const std::vector<int>& es) {
            if (es.size() != 2) return false;
            return fg.colour(es[0]) != fg.colour(es[1]);
        };
        if (!one_each(g.in(v)) || !one_each(g.out(v))) return false;
    }
    for (const auto& c : fg.minimal_cycles())
        for (int e : c.edges)
            if (fg.colour(e) != fg.colour(c.edges[0])) return false;
    return true;
}

namespace {

void simple_paths(const Digraph& g, std::size_t cap, std::vector<Route>& out) {
    std::vector<char> on(g.vertex_count(), 0);
    std::vector<int> path;
    for (int s : g.sources()) {
        std::function<void(int)> dfs = [&](int v) {
            if (g.is_sink(v)) {
                if (out.size() >= cap) throw Error(Errc::RouteExplosion, "more than " + std::to_string(cap) + " routes");
                out.push_back({Route::Kind::Path, path, s, v});
                return;
            }
            for (int e : g.out(v)) {
                int w = g.edge(e).head;
                if (on[w]) continue;
                on[w] = 1;
                path.push_back(e);
                dfs(w);
                path.pop_back();
                on[w] = 0;
            }
        };
        if (g.outdeg(s) == 0) continue;
        on[s] = 1;
        dfs(s);
        on[s] = 0;
    }
}

}  // namespace

std::vector<Route> enumerate_simple_routes(const Digraph& g, RouteOptions opt) {
    std::vector<Route> out;
    simple_paths(g, opt.cap, out);
    auto cyc = minimal_cycles(g);
    out.insert(out.end(), cyc.begin(), cyc.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Route> enumerate_routes(const FramedGraph& fg, RouteOptions opt) {
    const auto& g = fg.graph();
    if (!fg.minimal_cycles().empty()) {
        if (!fg.has_colouring() || !is_cyclic_ample(fg))
            throw Error(Errc::Precondition, "routes of a cyclic graph need a cyclic ample colouring");
    }
    // in a DAG every route is vertex-simple; good routes of cyclic ample graphs are too
    return enumerate_simple_routes(g, opt);
}

bool compatible(const FramedGraph& fg, const Route& a, const Route& b) {
    if (a.is_cycle() || b.is_cycle()) return true;
    const auto& g = fg.graph();
    auto va = route_vertices(g, a);
    auto vb = route_vertices(g, b);
    std::map<int, int> pos_b;
    for (std::size_t j = 0; j < vb.size(); ++j) pos_b[vb[j]] = static_cast<int>(j);
    const std::size_t na = a.edges.size(), nb = b.edges.size();
    for (std::size_t i = 0; i < va.size(); ++i) {
        auto it = pos_b.find(va[i]);
        if (it == pos_b.end()) continue;
        std::size_t j = it->second;
        if (i > 0 && j > 0 && a.edges[i - 1] == b.edges[j - 1]) continue;  // not the start of a maximal common piece
        std::size_t len = 0;
        while (i + len < na && j + len < nb && a.edges[i + len] == b.edges[j + len]) ++len;
        if (i == 0 || j == 0) continue;                      // both start at the same source
        if (i + len == na || j + len == nb) continue;        // both end at the same sink
        bool in_less = fg.rank_in(a.edges[i - 1]) < fg.rank_in(b.edges[j - 1]);
        bool out_less = fg.rank_out(a.edges[i + len]) < fg.rank_out(b.edges[j + len]);
        if (in_less != out_less) return false;
    }
    return true;
}

bool is_exceptional(const FramedGraph& fg, const Route& r) {
    if (!fg.has_colouring()) throw Error(Errc::Precondition, "monochromatic test needs a colouring");
    for (int e : r.edges)
        if (fg.colour(e) != fg.colour(r.edges.front())) return false;
    return true;
}

std::vector<char> universal_routes(const FramedGraph& fg, const std::vector<Route>& routes) {
    std::vector<char> u(routes.size(), 1);
    for (std::size_t i = 0; i < routes.size(); ++i)
        for (std::size_t j = i + 1; j < routes.size(); ++j)
            if (!compatible(fg, routes[i], routes[j])) u[i] = u[j] = 0;
    return u;
}

std::optional<std::vector<Colour>> find_cyclic_ample_colouring(const Digraph& g) {
    const int m = g.edge_count();
    if (m > 24) throw Error(Errc::SizeCap, "brute-force colouring search limited to 24 edges");
    auto internal = g.internal();
    for (int v : internal)
        if (g.indeg(v) != 2 || g.outdeg(v) != 2) return std::nullopt;
    auto cycles = minimal_cycles(g);
    std::vector<Colour> c(m);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        for (int e = 0; e < m; ++e) c[e] = (mask >> e) & 1u ? Colour::Blue : Colour::Red;
        bool ok = true;
        for (int v : internal) {
            if (c[g.in(v)[0]] == c[g.in(v)[1]] || c[g.out(v)[0]] == c[g.out(v)[1]]) {
                ok = false;
                break;
            }
        }
        for (const auto& cy : cycles) {
            if (!ok) break;
            for (int e : cy.edges)
                if (c[e] != c[cy.edges[0]]) ok = false;
        }
        if (ok) return c;
    }
    return std::nullopt;
}

FramingResult framing_from_exceptional_set(const Digraph& g, const std::vector<Route>& X) {
    FramingResult res;
    auto fail = [&](int cond, std::string why) {
        res.violated = cond;
        res.detail = std::move(why);
        return res;
    };
    // (i) cycles inside X, everything else a good route
    auto cycles = minimal_cycles(g);
    std::set<std::vector<int>> xs;
    for (const auto& r : X) xs.insert(r.edges);
    for (const auto& c : cycles)
        if (!xs.count(c.edges)) return fail(1, "cycle " + route_to_string(g, c) + " is missing");
    std::set<std::vector<int>> cyc_set;
    for (const auto& c : cycles) cyc_set.insert(c.edges);
    for (const auto& r : X) {
        if (cyc_set.count(r.edges)) continue;
        if (r.edges.empty()) return fail(1, "empty route");
        auto vs = route_vertices(g, Route{Route::Kind::Path, r.edges, -1, -1});
        std::set<int> uniq(vs.begin(), vs.end());
        bool ok = uniq.size() == vs.size() && g.is_source(vs.front()) && g.is_sink(vs.back());
        for (std::size_t i = 0; ok && i + 1 < r.edges.size(); ++i)
            ok = g.edge(r.edges[i]).head == g.edge(r.edges[i + 1]).tail;
        if (!ok) return fail(1, route_to_string(g, r) + " is not a good route");
    }
    // (ii) exact edge cover
    std::vector<int> uses(g.edge_count(), 0);
    for (const auto& r : X)
        for (int e : r.edges) ++uses[e];
    for (int e = 0; e < g.edge_count(); ++e)
        if (uses[e] != 1)
            return fail(2, "edge " + g.edge(e).id + " lies in " + std::to_string(uses[e]) + " routes");
    // (iii) bipartite adjacency through shared internal vertices
    const int n = static_cast<int>(X.size());
    std::vector<std::set<int>> verts(n);
    for (int i = 0; i < n; ++i) {
        Route r = X[i];
        for (int v : route_vertices(g, r))
            if (g.is_internal(v)) verts[i].insert(v);
    }
    auto adjacent = [&](int i, int j) {
        for (int v : verts[i])
            if (verts[j].count(v)) return true;
        return false;
    };
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        std::vector<int> comp{s};
        side[s] = 0;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            int i = comp[k];
            for (int j = 0; j < n; ++j) {
                if (j == i || !adjacent(i, j)) continue;
                if (side[j] < 0) {
                    side[j] = 1 - side[i];
                    comp.push_back(j);
                } else if (side[j] == side[i]) {
                    return fail(3, "odd cycle through " + route_to_string(g, X[i]) + " and " + route_to_string(g, X[j]));
                }
            }
        }
        // red side: the one holding a cycle, else the one holding the component's first route
        int red = 0;
        for (int i : comp)
            if (cyc_set.count(X[i].edges)) { red = side[i]; break; }
        if (red == 1)
            for (int i : comp) side[i] = 1 - side[i];
    }
    std::vector<Colour> col(g.edge_count(), Colour::Red);
    for (int i = 0; i < n; ++i)
        for (int e : X[i].edges) col[e] = side[i] == 0 ? Colour::Red : Colour::Blue;
    try {
        FramedGraph fg(g, col);
        if (!is_cyclic_ample(fg)) return fail(4, "resulting colouring is not cyclic ample");
        std::set<std::vector<int>> exc;
        for (const auto& r : enumerate_routes(fg))
            if (is_exceptional(fg, r)) exc.insert(r.edges);
        if (exc != xs) return fail(4, "exceptional set of the resulting colouring differs from X");
    } catch (const Error& e) {
        return fail(4, e.what());
    }
    res.colouring = std::move(col);
    return res;
}

std::string route_to_string(const Digraph& g, const Route& r) {
    std::string s = r.is_cycle() ? "cycle(" : "(";
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        if (i) s += ",";
        s += g.edge(r.edges[i]).id;
    }
    return s + ")";
}

}  // namespace flowfan
