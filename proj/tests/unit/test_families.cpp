#include "flowfan/families.hpp"
#include "flowfan/intflow.hpp"

#include <doctest.h>

#include <set>

using namespace flowfan;

namespace {
BigInt fact(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
}  // namespace

TEST_CASE("multinomial volume equals the factorial quotient") {
    for (int c = 1; c <= 3; ++c)
        for (int p = 2; p <= 4; ++p) {
            BigInt want = fact((c + 1) * (p - 1));
            for (int i = 0; i <= c; ++i) want /= fact(p - 1);
            CHECK(multinomial_volume(c, p) == want);
        }
}

TEST_CASE("h_cp edge helpers address the documented edges") {
    const int c = 2, p = 3;
    auto fg = h_cp(c, p);
    const auto& g = fg.graph();
    for (int a = 0; a <= c; ++a)
        for (int b = 1; b <= p; ++b) {
            const auto& e = g.edge(hcp_blue(c, p, a, b));
            CHECK(fg.colour(hcp_blue(c, p, a, b)) == Colour::Blue);
            CHECK(g.name(e.head) != g.name(e.tail));
        }
    for (int a = 1; a <= c; ++a)
        for (int b = 1; b <= p; ++b) {
            int e = hcp_red(c, p, a, b), f = hcp_red(c, p, a, b % p + 1);
            CHECK(fg.colour(e) == Colour::Red);
            CHECK(g.edge(e).head == g.edge(f).tail);
            CHECK(g.edge(hcp_blue(c, p, a - 1, b)).head == g.edge(e).tail);
        }
    CHECK(fg.minimal_cycles().size() == static_cast<std::size_t>(c));
    CHECK(is_cyclic_ample(fg));
}

TEST_CASE("small graphs without a cyclic ample colouring") {
    for (const auto& g : {no_ample_left(), no_ample_right()}) {
        CHECK_FALSE(g.acyclic());
        CHECK_FALSE(find_cyclic_ample_colouring(g).has_value());
    }
    CHECK(find_cyclic_ample_colouring(blossomed_cycle(3).graph()).has_value());
}

TEST_CASE("path graphs") {
    auto p0 = path_graph(0);
    CHECK(p0.graph().edge_count() == 1);
    CHECK(p0.internal().empty());
    for (int k = 1; k <= 4; ++k) {
        auto fg = path_graph(k);
        CHECK(fg.internal().size() == static_cast<std::size_t>(k));
        CHECK(validate(fg.graph()).full);
    }
}

TEST_CASE("barred word example round trip") {
    auto w = parse_barred_word(6, {3, 2, 1, 3, 0, 2}, "11112|22334|44|456||66");
    CHECK(barred_word_length(w) == 17);
    CHECK(format_barred_word(w) == "11112|22334|44|456||66");
    int zero = -1;
    auto flow = barred_word_to_flow(w, &zero);
    CHECK(zero == 3);  // red edge out of vertex 3
    CHECK(flow[hcp_red(1, 6, 1, 3)] == 0);
    IVec in, red, out;
    for (int b = 1; b <= 6; ++b) {
        in.push_back(flow[hcp_blue(1, 6, 0, b)]);
        red.push_back(flow[hcp_red(1, 6, 1, b)]);
        out.push_back(flow[hcp_blue(1, 6, 1, b)]);
    }
    CHECK(in == IVec{3, 2, 1, 3, 0, 2});
    CHECK(red == IVec{6, 2, 0, 3, 2, 2});
    CHECK(out == IVec{0, 7, 3, 1, 2, 3});
    auto back = flow_to_barred_word(6, flow);
    CHECK(back.bars == w.bars);
    CHECK_THROWS_AS(parse_barred_word(6, {3, 2, 1, 3, 0, 2}, "1111|22334|44|456||66"), Error);
}

TEST_CASE("barred words biject onto cyclic flows of h_cp(1,p)") {
    for (auto [p, a] : std::vector<std::pair<int, std::vector<int>>>{
             {2, {1, 1}}, {3, {1, 0, 2}}, {3, {2, 1, 1}}, {4, {1, 1, 0, 1}}}) {
        auto words = all_barred_words(p, a);
        auto flows = cyclic_flows_h1p(p, a);
        std::set<IVec> image;
        for (const auto& w : words) {
            auto f = barred_word_to_flow(w);
            CHECK(format_barred_word(flow_to_barred_word(p, f)) == format_barred_word(w));
            image.insert(f);
        }
        CHECK(image.size() == words.size());
        CHECK(image == std::set<IVec>(flows.begin(), flows.end()));
    }
}
