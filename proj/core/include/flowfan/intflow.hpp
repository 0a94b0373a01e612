#pragma once

#include "flowfan/dkk.hpp"
#include "flowfan/graph.hpp"

#include <cstddef>
#include <vector>

namespace flowfan {

// Netflow targets are indexed by vertex: out - in must equal target[v] at every
// source and internal vertex. Sinks are unconstrained.
using Netflow = IVec;

// internal vertices indeg-1, sources 0
Netflow volume_netflow(const Digraph& g);

std::vector<IVec> enumerate_integer_flows(const Digraph& g, const Netflow& target, std::size_t cap = 10000000);

// coefficient extraction from prod_e 1/(1 - z_tail/z_head), by exact sparse Laurent series
BigInt count_flows_gf(const Digraph& g, const Netflow& target);

struct VolumeFlow {
    IVec flow;
    std::vector<int> zero_edges;  // one per minimal cycle, same order as the cycles; empty for DAGs
    bool operator<(const VolumeFlow& o) const { return flow < o.flow; }
    bool operator==(const VolumeFlow& o) const { return flow == o.flow; }
};

// DAG: volume integer flows. Cyclic ample: cyclic volume integer flows.
std::vector<VolumeFlow> volume_flows(const FramedGraph& fg, std::size_t cap = 10000000);

// direct test of the cyclic volume flow conditions; returns the zero edges when they hold
std::optional<std::vector<int>> cyclic_volume_zero_edges(const FramedGraph& fg, const IVec& f);

// Phi(K)(e) = (number of distinct prefixes ending in e among routes of K through e) - 1
IVec phi(const FramedGraph& fg, const RouteSystem& rs, const Clique& k);
bool phi_is_bijective(const FramedGraph& fg, const RouteSystem& rs, const std::vector<Clique>& cliques);

// #maximal cliques, checked against #volume flows
BigInt flow_complex_volume(const FramedGraph& fg);

}  // namespace flowfan
