#pragma once

#include "flowfan/graph.hpp"

#include <string>
#include <vector>

namespace flowfan {

// X-shaped full DAG: s1,s2 -> u -> v -> t2,t3 with s3 -> v and u -> t1
FramedGraph x_graph();
// four internal vertices l,d,u,r; 42 maximal cliques
FramedGraph xx_graph();
// blue path v1 -> ... -> vk, blue source/sink at its ends, one red source and sink per vertex.
// k = 0 gives a single edge.
FramedGraph path_graph(int k);

// red n-cycle 1 -> 2 -> ... -> n -> 1 with blue s_i -> i -> t_i spokes
FramedGraph blossomed_cycle(int n);
// vertices (a,b), a in [0,c+1], b in [p]; c nested red p-cycles joined by blue spokes
FramedGraph h_cp(int c, int p);
// edge indices of h_cp(c,p)
int hcp_blue(int c, int p, int a, int b);  // (a,b) -> (a+1,b), a in [0,c]
int hcp_red(int c, int p, int a, int b);   // (a,b) -> (a,b+1 mod p), a in [1,c]

// the two small cyclic graphs that admit no cyclic ample colouring
Digraph no_ample_left();
Digraph no_ample_right();

// binom((c+1)(p-1); p-1, ..., p-1)
BigInt multinomial_volume(int c, int p);

struct BarredWord {
    int p = 0;
    std::vector<int> a;     // a_1..a_p
    std::vector<int> bars;  // p-1 positions k in [1,N]: bar after the k-th letter, sorted
};

int barred_word_length(const BarredWord& w);  // N = sum a + p
BarredWord parse_barred_word(int p, const std::vector<int>& a, const std::string& text);
std::string format_barred_word(const BarredWord& w);
std::vector<BarredWord> all_barred_words(int p, const std::vector<int>& a);

// flow on the edges of h_cp(1,p); zero_red receives the b of the red edge carrying 0
IVec barred_word_to_flow(const BarredWord& w, int* zero_red = nullptr);
BarredWord flow_to_barred_word(int p, const IVec& flow);

// all cyclic integer flows on h_cp(1,p) whose blue in-edges carry a (direct enumeration)
std::vector<IVec> cyclic_flows_h1p(int p, const std::vector<int>& a);

}  // namespace flowfan
