#pragma once

#include "flowfan/dkk.hpp"
#include "flowfan/graph.hpp"
#include "flowfan/quiver.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flowfan {

// A polytope given by candidate points; non-vertices are allowed and only
// filtered out when vertices() is asked for.
struct LatticePolytope {
    int dim = 0;
    QMat points;  // sorted, no duplicates

    static LatticePolytope from_points(int dim, QMat pts);
    QMat vertices() const;
};

// conv(P) == conv(Q), by mutual hull containment
bool same_polytope(const LatticePolytope& p, const LatticePolytope& q);

// --- fence posets and order polytopes ----------------------------------------

struct FencePoset {
    std::vector<int> elements;                 // ambient coordinate of each element
    std::vector<std::pair<int, int>> covers;  // (lower, upper), element positions
};

// membership vectors of all down-closed subsets
std::vector<std::vector<char>> order_ideals(const FencePoset& p);
LatticePolytope order_polytope(const FencePoset& p, int dim);

// the target of every arrow lies below its source
FencePoset string_fence(const Quiver& q, const StringWord& w);
// HN polytope of a string module, in quiver-vertex coordinates; throws RepeatedVertex
LatticePolytope hn_polytope(const Quiver& q, const StringWord& w);

// walk through internal vertices of a graph: red e gives head < tail, blue e gives tail < head.
// Coordinates are positions in fg.internal().
FencePoset walk_fence(const FramedGraph& fg, int start, const std::vector<int>& edges);
// one order polytope per directed walk inside the internal vertices (length 0 included); DAGs only
std::vector<LatticePolytope> order_polytope_summands(const FramedGraph& fg);

// --- shard polytopes ------------------------------------------------------------

struct Arc {
    int a = 1, b = 2;
    std::vector<int> A, B;  // partition of [a+1, b-1]
};

bool valid_arc(int n, const Arc& arc);
// sequences a1 < b1 < a2 < ... with a <= a1, bk <= b, a_i in A + a, b_i in B + b
std::vector<std::vector<int>> alternating_matchings(const Arc& arc);
// sum e_{a_i} - e_{b_i} in R^{n+1}
IVec characteristic_vector(int n, const std::vector<int>& m);
LatticePolytope shard_polytope(int n, const Arc& arc);

// vertices 1..n, alpha_i : i-1 -> i and beta_i : i -> i-1 for i in [2,n], with
// relations alpha_i beta_i and beta_i alpha_i
Quiver ladder_quiver(int n);
int ladder_alpha(int i);  // arrow index of alpha_i
int ladder_beta(int i);

// string gamma_{c+1} ... gamma_d, gamma_i = alpha_i for i in C, beta_i^{-1} for i in D
struct LadderString {
    int c = 1, d = 1;
    std::vector<int> C, D;
};

StringWord ladder_string(const Quiver& q, const LadderString& s);
std::vector<LadderString> all_ladder_strings(int n);
Arc theta(const LadderString& s);
// e_i -> e_i - e_{i+1}
QVec iota(const QVec& x);
// iota(HN(M_s)) has the same vertex set as SP(theta(s))
bool theta_iota_check(int n, const LadderString& s);

// --- Minkowski sums and normal fans ----------------------------------------------

// vertices of the sum, pruning to hull vertices after each step
QMat minkowski_sum_vertices(const std::vector<LatticePolytope>& summands);

// maximizer of <w, x> with ties broken by comparing x lexicographically (larger wins),
// i.e. by the functional w + (eps, eps^2, ...)
int lex_argmax(const QMat& pts, const QVec& w);
// all maximizers of <w, x>
std::vector<int> argmax_set(const QMat& pts, const QVec& w);

struct NormalFanCertificate {
    bool ok = false;
    std::vector<QVec> cone_vertex;  // vertex of the sum whose normal cone is each candidate cone
    std::vector<std::string> failures;
};

// Decides whether the candidate fan is the (outer) normal fan of the Minkowski sum.
// For each cone, the interior functional w = sum of rays must have a unique maximizer
// q_s on every summand, and each ray must be maximized there too. Together with distinct
// cone vertices and a complete candidate fan, this pins the normal fan down.
NormalFanCertificate certify_normal_fan(const std::vector<LatticePolytope>& summands, const Fan& candidate);

// certify_normal_fan, returning the candidate on success; throws DegenerateFunctional otherwise
Fan minkowski_normal_fan(const std::vector<LatticePolytope>& summands, const Fan& candidate);

// rays primitive(phi(1_r)) for non-exceptional routes, cones = cliques minus exceptional routes
Fan phi_image_fan(const FramedGraph& fg, const RouteSystem& rs, const std::vector<Clique>& cliques,
                  std::vector<int>* ray_route = nullptr);

// the same fan with rays rewritten in coordinates of the basis rows (rays must lie in their span)
Fan fan_in_basis(const Fan& f, const IMat& basis);

// exact counterclockwise hull of planar points (monotone chain, collinear points dropped)
QMat convex_hull_2d(QMat pts);
// outer edge normals of a convex polygon given counterclockwise, as primitive vectors;
// cone i is spanned by normals i and i+1
Fan polygon_normal_fan(const QMat& ccw);

// --- cyclic graphs and the cyclohedron ----------------------------------------

// orthogonal projection onto {x : sum over each minimal cycle of x = 0}; x indexed by fg.internal()
QVec project_to_W(const FramedGraph& fg, const QVec& x);
// integer basis of W (rows)
IMat w_basis(const FramedGraph& fg);

// conv of the suffix sums of e_a + e_{a+1} + ... + e_b (indices cyclic in [n]) and 0
LatticePolytope delta_ab(int n, int a, int b);
// pi_W(Delta_(a,b)) over a != b+1 mod n, written in the coordinates y = B x of a basis B of W
std::vector<LatticePolytope> cyclohedron_summands(int n);

// label (a, b) of a route of the blossomed n-cycle: enters at a, leaves at b
std::pair<int, int> cycle_route_label(int n, const Route& r);

// Centrally symmetric diagonals of the 2n-gon: label (a, b) with a in [n], b in [a+2, a+n],
// the diagonal a--b together with its antipode; b = a+n is a diameter.
// Cones are the maximal pairwise noncrossing sets.
struct DiagonalFan {
    std::vector<std::pair<int, int>> labels;
    Fan fan;  // rays hold the labels, combinatorial only
};
DiagonalFan cyclohedron_diagonal_fan(int n);
bool diagonals_cross(int n, std::pair<int, int> d1, std::pair<int, int> d2);

// rays: proper nonempty subsets of [m] as 0/1 vectors; cones: maximal chains
Fan braid_fan(int m);

// number of cones of each size 0..dim among all faces of the maximal cones
std::vector<std::int64_t> fan_face_counts(const Fan& f);

// combinatorial isomorphism of two simplicial fans (ray bijection carrying cones to cones)
bool fan_isomorphic(const Fan& f1, const Fan& f2);

// --- H-descriptions ------------------------------------------------------------

struct HPolytope {
    QMat vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> facet_inequalities;            // inequalities defining facets
    std::vector<std::vector<int>> facet_vertices;   // vertices on each of those
    int dim = 0;
};

// {x : eq . x = eq_rhs, A x <= b}; vertices by exact solves over inequality subsets
HPolytope h_description(const QMat& A, const QVec& b, const QVec& eq, const Rational& eq_rhs);

}  // namespace flowfan
