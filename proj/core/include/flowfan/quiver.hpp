#pragma once

#include "flowfan/graph.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace flowfan {

struct Arrow {
    std::string id;
    int s;
    int t;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::set<std::pair<int, int>> relations;  // (a, b): t(a) = s(b), the path a then b is zero

    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_to(int v) const;
};

// at most two arrows in / out per vertex, and the four "at most one" conditions
bool is_locally_gentle(const Quiver& q);
// locally gentle, and every oriented cycle contains a relation
bool is_gentle(const Quiver& q);

struct Letter {
    int arrow;
    int exp;  // +1 direct, -1 inverse
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

struct StringWord {
    std::vector<Letter> letters;
    int start = -1;  // vertex the walk starts at (the lazy vertex when there are no letters)

    bool lazy() const { return letters.empty(); }
};

// vertices visited by a string, v_0 .. v_m
std::vector<int> string_vertices(const Quiver& q, const StringWord& w);
StringWord reversed(const Quiver& q, const StringWord& w);
// chains, never backtracks, and respects the relations
bool is_string(const Quiver& q, const StringWord& w);

struct QuiverPair {
    Quiver blossoming;              // one vertex per graph vertex, one arrow per edge
    Quiver restricted;              // internal vertices only
    std::vector<int> restricted_of;  // graph vertex -> restricted vertex, or -1
    std::vector<int> arrow_of;       // graph edge -> restricted arrow, or -1
};

// red edges keep their direction, blue edges are reversed; relations are the
// length-two paths whose edges have different colours
QuiverPair quiver_from_graph(const FramedGraph& fg);

// route as a string of the blossoming quiver: red = direct, blue = inverse
StringWord route_string(const FramedGraph& fg, const Route& r);

// sum of peak vertices minus valley vertices, over the internal vertices; the ends of a
// maximal string must be blossoming vertices
IVec g_vector(const FramedGraph& fg, const StringWord& w);

// linear map on edge space: red e -> (e_tail - e_head)/2, blue e -> -(e_tail - e_head)/2,
// projected to the internal vertices
QVec phi_map(const FramedGraph& fg, const QVec& x);

struct ModuleLabel {
    enum class Kind { Projective, ShiftedProjective, StringModule };
    Kind kind;
    int vertex = -1;     // graph vertex for (shifted) projectives and lazy strings
    StringWord string;   // in the restricted quiver
};

std::string to_string(const FramedGraph& fg, const ModuleLabel& m);

// string of the indecomposable projective at a restricted vertex
StringWord projective_string(const Quiver& q, int v);
bool same_up_to_reversal(const Quiver& q, const StringWord& a, const StringWord& b);

ModuleLabel gamma(const FramedGraph& fg, const QuiverPair& qp, const Route& r);

// a kisses b (or b kisses a): a top substring of one equals a bottom substring of the
// other, both running through non-blossoming vertices only
bool kissing(const Quiver& q, const std::vector<char>& inner, const StringWord& a, const StringWord& b);

}  // namespace flowfan
