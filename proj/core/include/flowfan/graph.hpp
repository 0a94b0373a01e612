#pragma once

#include "flowfan/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flowfan {

enum class Colour : std::uint8_t { Red, Blue };

struct Edge {
    std::string id;
    int tail;
    int head;
};

// Directed multigraph; vertices and edges are addressed by dense indices,
// string ids are kept for I/O.
class Digraph {
public:
    int add_vertex(const std::string& name);
    int add_edge(int tail, int head, const std::string& id = {});

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name(int v) const { return names_[v]; }
    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> edge_index(const std::string& id) const;

    const std::vector<int>& in(int v) const { return in_[v]; }
    const std::vector<int>& out(int v) const { return out_[v]; }
    int indeg(int v) const { return static_cast<int>(in_[v].size()); }
    int outdeg(int v) const { return static_cast<int>(out_[v].size()); }

    bool is_source(int v) const { return in_[v].empty(); }
    bool is_sink(int v) const { return out_[v].empty() && !in_[v].empty(); }
    bool is_internal(int v) const { return !in_[v].empty() && !out_[v].empty(); }
    std::vector<int> sources() const;
    std::vector<int> sinks() const;
    std::vector<int> internal() const;

    bool weakly_connected() const;
    bool acyclic() const;
    // vertices in a topological order; throws Precondition on a cycle
    std::vector<int> topological_order() const;

    // copy without the given edges; edge_map[new] = old
    Digraph without_edges(const std::vector<int>& removed, std::vector<int>* edge_map = nullptr) const;

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> in_, out_;
    std::map<std::string, int> vindex_, eindex_;
};

struct VertexOrder {
    std::vector<int> in;   // increasing
    std::vector<int> out;  // increasing
};

struct Route {
    enum class Kind { Path, Cycle };
    Kind kind = Kind::Path;
    std::vector<int> edges;
    int source = -1;
    int sink = -1;

    bool is_cycle() const { return kind == Kind::Cycle; }
    bool operator==(const Route& o) const { return kind == o.kind && edges == o.edges; }
    bool operator<(const Route& o) const { return edges < o.edges; }
};

// Vertex sequence of a path route (for cycles: starting at the tail of the first edge, not repeated)
std::vector<int> route_vertices(const Digraph& g, const Route& r);

class FramedGraph {
public:
    FramedGraph(Digraph g, std::vector<Colour> colouring);
    FramedGraph(Digraph g, std::map<int, VertexOrder> orders);

    const Digraph& graph() const { return g_; }
    bool has_colouring() const { return colour_.has_value(); }
    Colour colour(int e) const { return (*colour_)[e]; }
    const std::vector<Colour>& colouring() const { return *colour_; }
    const std::map<int, VertexOrder>& orders() const { return orders_; }
    // position of e in the order on inc(head e) / out(tail e)
    int rank_in(int e) const { return rank_in_[e]; }
    int rank_out(int e) const { return rank_out_[e]; }

    const std::vector<int>& internal() const { return internal_; }
    const std::vector<int>& sources() const { return sources_; }
    const std::vector<int>& sinks() const { return sinks_; }
    const std::vector<Route>& minimal_cycles() const { return cycles_; }
    // index of v in internal(), or -1
    int internal_index(int v) const { return internal_pos_[v]; }

private:
    void init();
    Digraph g_;
    std::optional<std::vector<Colour>> colour_;
    std::map<int, VertexOrder> orders_;
    std::vector<int> rank_in_, rank_out_;
    std::vector<int> internal_, sources_, sinks_, internal_pos_;
    std::vector<Route> cycles_;
};

struct ValidationReport {
    bool valid = true;  // convention holds
    bool full = true;   // every internal vertex has in- and out-degree 2
    int internal = 0, sources = 0, sinks = 0, edges = 0;
    std::vector<std::string> violations;
};

ValidationReport validate(const Digraph& g);

// all minimal oriented cycles, each rotated to start at its smallest edge index, sorted
std::vector<Route> minimal_cycles(const Digraph& g);

bool is_cyclic_ample(const FramedGraph& fg);

struct RouteOptions {
    std::size_t cap = 1000000;
};

// DAG: all source-to-sink routes. Cyclic ample: good routes plus minimal cycles.
std::vector<Route> enumerate_routes(const FramedGraph& fg, RouteOptions opt = {});
// colour-free version: vertex-simple source-to-sink walks plus minimal cycles
std::vector<Route> enumerate_simple_routes(const Digraph& g, RouteOptions opt = {});

bool compatible(const FramedGraph& fg, const Route& a, const Route& b);
bool is_exceptional(const FramedGraph& fg, const Route& r);
// exceptional in the defining sense: compatible with every route listed
std::vector<char> universal_routes(const FramedGraph& fg, const std::vector<Route>& routes);

// every colouring of g, tested for cyclic ampleness; returns the first that works
std::optional<std::vector<Colour>> find_cyclic_ample_colouring(const Digraph& g);

struct FramingResult {
    std::optional<std::vector<Colour>> colouring;
    int violated = 0;  // 1, 2 or 3 for the three conditions, 4 for a failed re-check
    std::string detail;
};

FramingResult framing_from_exceptional_set(const Digraph& g, const std::vector<Route>& X);

std::string route_to_string(const Digraph& g, const Route& r);

}  // namespace flowfan
