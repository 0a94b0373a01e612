#pragma once

#include "flowfan/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace flowfan {

using Clique = std::vector<int>;  // sorted route indices

// routes together with their pairwise compatibility, computed once
struct RouteSystem {
    std::vector<Route> routes;
    std::vector<std::vector<char>> compat;
    std::vector<char> exceptional;  // compatible with every route
    std::map<std::vector<int>, int> lookup;

    int index_of(const std::vector<int>& edges) const;  // -1 if absent
};

RouteSystem route_system(const FramedGraph& fg, RouteOptions opt = {});

// dimension of the flow space: #E - rank of the internal incidence rows
int flow_space_dim(const FramedGraph& fg);
// integer basis of the flow lattice (kernel of the internal incidence rows)
IMat flow_lattice_basis(const Digraph& g);

std::vector<Clique> maximal_cliques(const RouteSystem& rs, std::size_t cap = 10000000);

IVec indicator(const Digraph& g, const Route& r);

bool is_unimodular(const FramedGraph& fg, const RouteSystem& rs, const Clique& k);

// coefficient per route index; supported on one clique
std::map<int, Rational> decompose_flow(const FramedGraph& fg, const RouteSystem& rs, const QVec& f);

struct TriangulationReport {
    bool ok = true;
    int cones = 0;
    bool cardinality = true;    // every clique has dim F routes
    bool edges_covered = true;  // every clique uses every edge
    bool sampling = true;       // random flows land in exactly one cone
    bool cyclic_union = true;   // cyclic: cones = union of acyclic triangulations of H - S
    int samples = 0;
    std::vector<std::string> failures;
};

TriangulationReport verify_triangulation(const FramedGraph& fg, const RouteSystem& rs, const std::vector<Clique>& cliques,
                                         int samples = 200, std::uint64_t seed = 1);

// cliques of H assembled from the acyclic graphs H - S, S one edge per minimal cycle
std::vector<Clique> cliques_by_zero_edges(const FramedGraph& fg, const RouteSystem& rs);

struct Fan {
    int dim = 0;
    IMat rays;
    std::vector<std::vector<int>> cones;  // sorted ray indices
};

// ridge test: every cone spans dim, every (dim-1)-face of a cone lies in exactly two cones
bool fan_is_complete(const Fan& f);
bool fan_is_simplicial_full(const Fan& f);

struct ReducedFan {
    Fan fan;
    std::vector<int> ray_route;  // route index per ray
    IMat quotient;               // rows p_i: coordinate i of x is <p_i, x>
    bool complete = false;
};

ReducedFan reduced_fan(const FramedGraph& fg, const RouteSystem& rs, const std::vector<Clique>& cliques);

}  // namespace flowfan
