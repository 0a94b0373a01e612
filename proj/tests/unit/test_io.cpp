#include "flowfan/dkk.hpp"
#include "flowfan/families.hpp"
#include "flowfan/io.hpp"
#include "flowfan/polytope.hpp"

#include <doctest.h>

#include <algorithm>

using namespace flowfan;

TEST_CASE("graph JSON round trip keeps ids and colours") {
    for (const char* name : {"x", "xx", "cycle:4", "hcp:2:3", "path:3"}) {
        auto fg = io::load_graph(name);
        auto text = io::graph_json(fg);
        auto back = io::parse_graph_json(text);
        CHECK(io::graph_json(back) == text);
        REQUIRE(back.graph().edge_count() == fg.graph().edge_count());
        for (int e = 0; e < fg.graph().edge_count(); ++e) {
            CHECK(back.graph().edge(e).id == fg.graph().edge(e).id);
            CHECK(back.colour(e) == fg.colour(e));
        }
    }
}

TEST_CASE("orders alone are enough") {
    const char* text = R"({"vertices":["s1","s2","u","t1","t2"],
        "edges":[{"id":"a","tail":"s1","head":"u"},{"id":"b","tail":"s2","head":"u"},
                 {"id":"c","tail":"u","head":"t1"},{"id":"d","tail":"u","head":"t2"}],
        "orders":{"u":{"in":["a","b"],"out":["c","d"]}}})";
    auto fg = io::parse_graph_json(text);
    CHECK(fg.internal().size() == 1);
    CHECK(enumerate_routes(fg).size() == 4);
}

TEST_CASE("malformed graphs are parse errors") {
    auto code = [](const std::string& t) {
        try {
            io::parse_graph_json(t);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Precondition;
    };
    CHECK(code("not json") == Errc::Parse);
    CHECK(code(R"({"vertices":["a"],"edges":[{"tail":"a","head":"zz"}]})") == Errc::Parse);
    CHECK(code(R"({"vertices":["a","b"],"edges":[{"tail":"a","head":"b","colour":"green"}]})") == Errc::Parse);
    CHECK_FALSE(io::builtin_graph("nonsense").has_value());
    CHECK_THROWS_AS(io::builtin_graph("cycle:x"), Error);
    CHECK_THROWS_AS(io::load_graph("/nonexistent/graph.json"), Error);
}

TEST_CASE("DOT output carries colours") {
    auto dot = io::graph_dot(io::load_graph("x"));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("color=red") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
}

TEST_CASE("flows parse from ids with rational values") {
    auto fg = io::load_graph("x");
    auto f = io::parse_flow_json(fg.graph(), R"({"e2":1,"e5":"1/2","e3":"1/2","e0":1,"e4":"1/2"})");
    CHECK(f[2] == Rational(1));
    CHECK(f[5] == Rational(1, 2));
    CHECK(f[1] == Rational(0));
    CHECK_THROWS_AS(io::parse_flow_json(fg.graph(), R"({"nope":1})"), Error);
}

TEST_CASE("SVG rays") {
    auto fg = io::load_graph("x");
    auto rs = route_system(fg);
    auto fan = phi_image_fan(fg, rs, maximal_cliques(rs));
    auto svg = io::fan_svg(fan);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(io::svg_ray_count(svg) == 5);
    Fan three{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2}}};
    CHECK_THROWS_AS(io::fan_svg(three), Error);
    QMat square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(io::polygon_svg(square).find("<polygon") != std::string::npos);
}

TEST_CASE("CSV tables") {
    auto fg = io::load_graph("x");
    auto rs = route_system(fg);
    auto csv = io::routes_csv(fg, rs);
    CHECK(csv.rfind("index,kind,exceptional,edges\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rs.routes.size()) + 1);
}
