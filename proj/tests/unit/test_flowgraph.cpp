#include "flowfan/families.hpp"
#include "flowfan/graph.hpp"

#include <doctest.h>

#include <set>

using namespace flowfan;

namespace {
// DFS over simple source-to-sink walks, independent of the route enumerator
void walks(const Digraph& g, int v, std::vector<int>& path, std::vector<char>& seen, std::set<std::vector<int>>& out) {
    if (g.is_sink(v)) {
        out.insert(path);
        return;
    }
    for (int e : g.out(v)) {
        int h = g.edge(e).head;
        if (seen[h]) continue;
        seen[h] = 1;
        path.push_back(e);
        walks(g, h, path, seen, out);
        path.pop_back();
        seen[h] = 0;
    }
}

std::set<std::vector<int>> all_walks(const Digraph& g) {
    std::set<std::vector<int>> out;
    for (int s : g.sources()) {
        std::vector<int> path;
        std::vector<char> seen(g.vertex_count(), 0);
        seen[s] = 1;
        walks(g, s, path, seen, out);
    }
    return out;
}
}  // namespace

TEST_CASE("builtin graphs satisfy the conventions") {
    for (const auto& fg : {x_graph(), xx_graph(), path_graph(3), blossomed_cycle(3), h_cp(2, 3)}) {
        auto rep = validate(fg.graph());
        CHECK(rep.valid);
        CHECK(rep.full);
        CHECK(rep.violations.empty());
    }
    auto rep = validate(x_graph().graph());
    CHECK(rep.internal == 2);
    CHECK(rep.sources == 3);
    CHECK(rep.sinks == 3);
    CHECK(rep.edges == 7);
}

TEST_CASE("validation flags a vertex of indegree three") {
    Digraph g;
    for (const char* n : {"a", "b", "c", "v", "t1", "t2"}) g.add_vertex(n);
    for (const char* s : {"a", "b", "c"}) g.add_edge(*g.vertex_index(s), *g.vertex_index("v"));
    g.add_edge(*g.vertex_index("v"), *g.vertex_index("t1"));
    g.add_edge(*g.vertex_index("v"), *g.vertex_index("t2"));
    CHECK_FALSE(validate(g).full);
}

TEST_CASE("DAG routes are exactly the source-to-sink walks") {
    for (const auto& fg : {x_graph(), xx_graph(), path_graph(4)}) {
        std::set<std::vector<int>> got;
        for (const auto& r : enumerate_routes(fg)) got.insert(r.edges);
        CHECK(got == all_walks(fg.graph()));
    }
    CHECK(enumerate_routes(xx_graph()).size() == 18);
}

TEST_CASE("compatibility is symmetric and reflexive; exceptional = monochromatic") {
    for (const auto& fg : {x_graph(), xx_graph(), blossomed_cycle(4), h_cp(2, 2), h_cp(1, 3)}) {
        auto routes = enumerate_routes(fg);
        for (const auto& a : routes) {
            CHECK(compatible(fg, a, a));
            for (const auto& b : routes) CHECK(compatible(fg, a, b) == compatible(fg, b, a));
        }
        auto uni = universal_routes(fg, routes);
        for (std::size_t i = 0; i < routes.size(); ++i) {
            std::set<Colour> cs;
            for (int e : routes[i].edges) cs.insert(fg.colour(e));
            CHECK(static_cast<bool>(uni[i]) == (cs.size() == 1));
        }
    }
}

TEST_CASE("X-graph: the listed incompatible pairs") {
    auto fg = x_graph();
    const auto& g = fg.graph();
    auto r = [&](std::initializer_list<int> e) { return Route{Route::Kind::Path, e, -1, -1}; };
    // R1 = e0 e2, R3 = e1 e3 e5: meet only at u, entering blue/red and leaving red/blue
    CHECK_FALSE(compatible(fg, r({0, 2}), r({1, 3, 5})));
    CHECK(compatible(fg, r({0, 2}), r({0, 3, 5})));
    CHECK(route_to_string(g, r({0, 2})) == "(e0,e2)");
}

TEST_CASE("minimal cycles") {
    CHECK(minimal_cycles(x_graph().graph()).empty());
    CHECK(blossomed_cycle(5).minimal_cycles().size() == 1);
    for (int c = 1; c <= 3; ++c) CHECK(h_cp(c, 3).minimal_cycles().size() == static_cast<std::size_t>(c));
    auto cyc = blossomed_cycle(4).minimal_cycles()[0];
    CHECK(cyc.edges == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("cyclic ampleness") {
    CHECK(is_cyclic_ample(blossomed_cycle(3)));
    CHECK(is_cyclic_ample(h_cp(3, 2)));
    // proper colouring whose cycle is not monochromatic: swap at the out-edges of 1 and in-edges of 2
    auto h = blossomed_cycle(3);
    auto col = h.colouring();
    col[0] = Colour::Blue;  // 1 -> 2
    col[6] = Colour::Red;   // 1 -> t1
    col[4] = Colour::Red;   // s2 -> 2
    CHECK_FALSE(is_cyclic_ample(FramedGraph(h.graph(), col)));
}

TEST_CASE("framing from an exceptional set reports the violated condition") {
    auto h = h_cp(1, 2);
    auto routes = enumerate_routes(h);
    CHECK(framing_from_exceptional_set(h.graph(), {}).violated == 1);  // the cycle is missing
    std::vector<Route> cycle_only;
    for (const auto& r : routes)
        if (r.is_cycle()) cycle_only.push_back(r);
    CHECK(framing_from_exceptional_set(h.graph(), cycle_only).violated == 2);  // blue edges uncovered
}

TEST_CASE("topological order respects edges") {
    auto g = xx_graph().graph();
    auto ord = g.topological_order();
    std::vector<int> pos(g.vertex_count());
    for (std::size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = static_cast<int>(i);
    for (const auto& e : g.edges()) CHECK(pos[e.tail] < pos[e.head]);
    CHECK_THROWS_AS(blossomed_cycle(3).graph().topological_order(), Error);
}
