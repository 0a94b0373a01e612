#pragma once

#include "flowfan/dkk.hpp"
#include "flowfan/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flowfan {

// ordered pair (A, B) partitioning [c+1], both parts nonempty, each sorted
struct Bipartition {
    std::vector<int> A, B;
    bool operator==(const Bipartition&) const = default;
    auto operator<=>(const Bipartition&) const = default;
};

// arc (i, j)^sign on the vertices 0..c+1
struct SignedArc {
    int i = 0, j = 0;
    int sign = +1;
    bool operator==(const SignedArc&) const = default;
    auto operator<=>(const SignedArc&) const = default;
};

using ArcDiagram = std::vector<SignedArc>;  // chained from 0 to c+1, left to right
using ArcMultiset = std::vector<SignedArc>;  // sorted

// all 2^{c+1} - 2 bipartitions, ordered by the bitmask of A
std::vector<Bipartition> all_bipartitions(int c);
bool valid_bipartition(int c, const Bipartition& p);
// "12|34"; parts of more than nine elements are written with commas "1,2,10|3"
std::string format_bipartition(const Bipartition& p);
Bipartition parse_bipartition(int c, const std::string& s);

// maximal runs of A-gaps become top arcs, runs of B-gaps bottom arcs; gap i sits between i-1 and i
ArcDiagram to_diagram(int c, const Bipartition& p);
Bipartition from_diagram(int c, const ArcDiagram& d);
bool valid_diagram(int c, const ArcDiagram& d);

bool arcs_cross(const SignedArc& x, const SignedArc& y);
bool diagrams_cross(const ArcDiagram& d1, const ArcDiagram& d2);
bool interfere(int c, const ArcDiagram& d1, const ArcDiagram& d2);

// A-sets form a chain
bool nested(const Bipartition& p, const Bipartition& q);
// +1 if d1 lies weakly above d2 at every gap (and somewhere strictly), -1 for below,
// 0 if equal, nothing if incomparable
std::optional<int> compare_heights(int c, const ArcDiagram& d1, const ArcDiagram& d2);
bool stacked(int c, const std::vector<ArcDiagram>& ds);

enum class FaceMode { Stacked, Noninterfering };

// pairwise face condition between two facets: stacked, or neither crossing nor interfering
bool admissible(int c, FaceMode mode, const Bipartition& p, const Bipartition& q);

// entry k counts sets of k pairwise-admissible bipartitions (codimension-k faces); entry 0 is 1
std::vector<std::int64_t> faces_by_codim(int c, FaceMode mode, int max_c = 7);
// f_0 .. f_c (vertices first)
std::vector<std::int64_t> f_vector(int c, FaceMode mode);
// (k+1)! S(c+1, k+1) faces of codimension k, returned as f_0 .. f_c
std::vector<std::int64_t> permutohedron_f_vector(int c);
// sum_i f_i (t-1)^i = sum_i h_i t^i
std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f);
// A_{n,k}: permutations of [n] with k descents, by direct counting
std::vector<std::int64_t> eulerian_numbers(int n);

// sizes of the polygons that are 2-faces
std::vector<int> two_face_sizes(int c, FaceMode mode);

// --- multisets of arcs -------------------------------------------------------

ArcMultiset arc_multiset(const std::vector<ArcDiagram>& ds);
int multiset_rank(const ArcMultiset& m);
// no two arcs cross and every x in [c] has as many arcs in as out
bool consistent(int c, const ArcMultiset& m);
// consistent rank-k multisets avoiding the arcs (0, c+1)^+-, which belong to no bipartition
std::vector<ArcMultiset> consistent_multisets(int c, int k);

// repeatedly follow the topmost arc out of each vertex
std::vector<ArcDiagram> stacked_reconstruction(int c, const ArcMultiset& m);
// pair the n-th incoming arc with the n-th outgoing arc, counted from the outside in
std::vector<ArcDiagram> noninterfering_reconstruction(int c, const ArcMultiset& m);

struct MultisetReport {
    bool ok = true;
    std::int64_t consistent = 0;       // consistent rank-k multisets
    std::int64_t stacked = 0;          // multisets of k stacked diagrams
    std::int64_t noninterfering = 0;   // multisets of k noninterfering, noncrossing diagrams
    std::vector<std::string> failures;
};

MultisetReport multiset_bijections_check(int c, int k);

// --- certificates -------------------------------------------------------------

// facets meeting a given facet in a codimension-two face
std::vector<Bipartition> neighbours(int c, FaceMode mode, const Bipartition& p);

struct PentagonCertificate {
    Bipartition facet;
    std::vector<Bipartition> neighbours;  // in the mutoperhedron
    bool is_pentagon = false;             // the neighbours form a single 5-cycle
    std::vector<int> permutohedron_two_faces;  // distinct 2-face sizes of the permutohedron
    bool ok = false;
};

PentagonCertificate pentagon_certificate();

// the facet ({1}, [2, c+1]) has the face structure of the (c-1)-dimensional polytope,
// via (A, B) -> ({1} + (A+1), B+1)
bool facet_iso_check(int c);

// good route of h_cp(c, 2) through the blue edges (a, 1) -> (a+1, 1) for a+1 in A and (a, 2) -> (a+1, 2) for a+1 in B
std::optional<Bipartition> bipartition_of_route(int c, const Route& r);

}  // namespace flowfan
