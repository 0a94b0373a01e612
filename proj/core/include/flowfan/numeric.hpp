#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowfan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;

enum class Errc {
    RouteExplosion,
    CliqueExplosion,
    FlowExplosion,
    UnbalancedFlow,
    NegativeFlow,
    NotAmple,
    NotFull,
    NotMaximal,
    ExceptionalRoute,
    RepeatedVertex,
    MalformedWord,
    NotCyclicFlow,
    Precondition,
    SizeCap,
    Parse,
    DegenerateFunctional,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// "p/q", or "p" when q == 1
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

QVec to_qvec(const IVec& v);
// scale a rational vector to the primitive integer vector with the same direction
IVec primitive(const QVec& v);
std::int64_t to_i64(const BigInt& z);

// --- exact linear algebra over Q -------------------------------------------

// row-reduces in place; returns pivot columns
std::vector<int> rref(QMat& m);
int rank(QMat m);
// basis of {x : m x = 0}; ncols needed when m has no rows
QMat nullspace(const QMat& m, int ncols);
// x with sum_i x_i rows[i] = target, if rows are independent and target is in their span
std::optional<QVec> coordinates_in_span(const QMat& rows, const QVec& target);
// any solution of A x = b
std::optional<QVec> solve(const QMat& A, const QVec& b);

// --- lattices ----------------------------------------------------------------

// true iff the integer rows are linearly independent and every invariant
// factor of the matrix is 1 (rows span a saturated sublattice)
bool has_unit_invariant_factors(const std::vector<std::vector<BigInt>>& rows);
BigInt abs_det(std::vector<std::vector<BigInt>> m);

// --- exact LP ----------------------------------------------------------------

// a point of {x >= 0 : A x = b}, or nothing (two-phase simplex, Bland's rule)
std::optional<QVec> feasible_point(const QMat& A, const QVec& b);
bool in_convex_hull(const QMat& points, const QVec& p);
// indices of points that are vertices of conv(points); duplicates resolved to the first copy
std::vector<int> hull_vertex_indices(const QMat& points);

BigInt binomial(int n, int k);
BigInt factorial(int n);

}  // namespace flowfan
