#pragma once

#include "flowfan/dkk.hpp"
#include "flowfan/graph.hpp"
#include "flowfan/intflow.hpp"
#include "flowfan/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

// Text formats. Everything returned here is deterministic for fixed input:
// JSON is compact with sorted object keys, numbers formatted by hand.
namespace flowfan::io {

// {"vertices":[ids],"edges":[{"id","tail","head","colour"?}],"orders"?:{v:{"in":[ids],"out":[ids]}}}
// Colours win over orders when every edge has one.
FramedGraph parse_graph_json(const std::string& text);
std::string graph_json(const FramedGraph& fg);

// x, xx, cycle:n, hcp:c:p, path:k
std::optional<FramedGraph> builtin_graph(const std::string& name);
// builtin name, or a path to a graph JSON file; throws Error(Parse)
FramedGraph load_graph(const std::string& source);

std::string graph_dot(const FramedGraph& fg);

std::string quiver_json(const Quiver& q);
std::string quiver_dot(const Quiver& q);

std::string routes_json(const FramedGraph& fg, const RouteSystem& rs);
// index,kind,exceptional,edges (edge ids separated by spaces)
std::string routes_csv(const FramedGraph& fg, const RouteSystem& rs);

std::string cliques_json(const std::vector<Clique>& cliques);

// {edge id: integer or "p/q"}; edges not listed carry 0
QVec parse_flow_json(const Digraph& g, const std::string& text);
// {"route index": "p/q"}
std::string decomposition_json(const std::map<int, Rational>& d);

// [{edge id: n}], and a CSV table with one column per edge
std::string flows_json(const Digraph& g, const std::vector<IVec>& flows);
std::string flows_csv(const Digraph& g, const std::vector<IVec>& flows);

std::string fan_json(const Fan& f);
// integer points as arrays; a non-integral coordinate is written as "p/q"
std::string polytope_json(int dim, const QMat& points);

// 2-dimensional fans and polygons only; throws Precondition otherwise.
// viewBox -1.2 -1.2 2.4 2.4, one <line class="ray"> of length 1 per ray.
std::string fan_svg(const Fan& f);
// vertices counterclockwise; scaled into the unit disk around their barycentre
std::string polygon_svg(const QMat& ccw);
int svg_ray_count(const std::string& svg);

}  // namespace flowfan::io
