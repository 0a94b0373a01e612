#include "flowfan/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace flowfan {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::RouteExplosion: return "RouteExplosion";
    case Errc::CliqueExplosion: return "CliqueExplosion";
    case Errc::FlowExplosion: return "FlowExplosion";
    case Errc::UnbalancedFlow: return "UnbalancedFlow";
    case Errc::NegativeFlow: return "NegativeFlow";
    case Errc::NotAmple: return "NotAmple";
    case Errc::NotFull: return "NotFull";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::ExceptionalRoute: return "ExceptionalRoute";
    case Errc::RepeatedVertex: return "RepeatedVertex";
    case Errc::MalformedWord: return "MalformedWord";
    case Errc::NotCyclicFlow: return "NotCyclicFlow";
    case Errc::Precondition: return "Precondition";
    case Errc::SizeCap: return "SizeCap";
    case Errc::Parse: return "Parse";
    case Errc::DegenerateFunctional: return "DegenerateFunctional";
    case Errc::Internal: return "Internal";
    }
    return "?";
}

Error::Error(Errc c, const std::string& what)
    : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

std::string to_string(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw Error(Errc::Parse, "zero denominator in '" + s + "'");
        return Rational(n, d);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error(Errc::Parse, "bad rational '" + s + "'");
    }
}

QVec to_qvec(const IVec& v) {
    QVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

std::int64_t to_i64(const BigInt& z) {
    if (z > BigInt(INT64_MAX) || z < BigInt(INT64_MIN))
        throw Error(Errc::Internal, "integer overflow converting " + z.str());
    return static_cast<std::int64_t>(z);
}

IVec primitive(const QVec& v) {
    BigInt l = 1;
    for (const auto& q : v) {
        BigInt d = boost::multiprecision::denominator(q);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& q : v) {
        BigInt x = boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q));
        ints.push_back(x);
        g = boost::multiprecision::gcd(g, abs(x));
    }
    IVec out;
    for (auto& x : ints) out.push_back(to_i64(g == 0 ? x : x / g));
    return out;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

QMat nullspace(const QMat& m, int ncols) {
    QMat a = m;
    auto piv = rref(a);
    std::vector<char> is_piv(ncols, 0);
    for (int c : piv) is_piv[c] = 1;
    QMat basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        QVec v(ncols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMat& A, const QVec& b) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    QMat aug(rows, QVec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    QVec x(cols, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    return x;
}

std::optional<QVec> coordinates_in_span(const QMat& rows, const QVec& target) {
    const int d = static_cast<int>(rows.size());
    const int n = static_cast<int>(target.size());
    QMat A(n, QVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) A[j][i] = rows[i][j];
    if (rank(A) != d) return std::nullopt;
    return solve(A, target);
}

bool has_unit_invariant_factors(const std::vector<std::vector<BigInt>>& rows_in) {
    auto m = rows_in;
    const int r = static_cast<int>(m.size());
    if (r == 0) return true;
    const int c = static_cast<int>(m[0].size());
    if (r > c) return false;
    for (int t = 0; t < r; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            int pi = -1, pj = -1;
            BigInt best;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j)
                    if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < best)) {
                        best = abs(m[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) return false;  // rank deficient
            std::swap(m[pi], m[t]);
            for (int i = 0; i < r; ++i) std::swap(m[i][pj], m[i][t]);
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (int j = t; j < c; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (int i = t; i < r; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (abs(m[t][t]) != 1) return false;
    }
    return true;
}

BigInt abs_det(std::vector<std::vector<BigInt>> m) {
    // Bareiss
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int s = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { s = i; break; }
            if (s < 0) return 0;
            std::swap(m[s], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    BigInt d = m[n - 1][n - 1];
    return abs(d);
}

std::optional<QVec> feasible_point(const QMat& A, const QVec& b) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    if (m == 0) return QVec(n, Rational(0));
    const int width = n + m;
    QMat T(m, QVec(width + 1, Rational(0)));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (int j = 0; j < n; ++j) T[i][j] = neg ? Rational(-A[i][j]) : A[i][j];
        T[i][n + i] = 1;
        T[i][width] = neg ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }
    QVec obj(width + 1, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= width; ++j)
            if (j < n || j == width) obj[j] -= T[i][j];
    for (;;) {
        int enter = -1;
        for (int j = 0; j < width; ++j)
            if (obj[j] < 0) { enter = j; break; }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][width] / T[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded cannot happen in phase I
        Rational inv = 1 / T[leave][enter];
        for (auto& x : T[leave]) x *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (int j = 0; j <= width; ++j) T[i][j] -= f * T[leave][j];
        }
        if (obj[enter] != 0) {
            Rational f = obj[enter];
            for (int j = 0; j <= width; ++j) obj[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    if (obj[width] != 0) return std::nullopt;
    QVec x(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = T[i][width];
    return x;
}

bool in_convex_hull(const QMat& points, const QVec& p) {
    if (points.empty()) return false;
    const int dim = static_cast<int>(p.size());
    const int k = static_cast<int>(points.size());
    QMat A(dim + 1, QVec(k));
    QVec b(dim + 1);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < dim; ++i) A[i][j] = points[j][i];
        A[dim][j] = 1;
    }
    for (int i = 0; i < dim; ++i) b[i] = p[i];
    b[dim] = 1;
    return feasible_point(A, b).has_value();
}

std::vector<int> hull_vertex_indices(const QMat& points) {
    std::vector<int> uniq;
    {
        std::map<QVec, int> seen;
        for (int i = 0; i < static_cast<int>(points.size()); ++i)
            if (seen.emplace(points[i], i).second) uniq.push_back(i);
    }
    std::vector<int> out;
    for (int i : uniq) {
        QMat others;
        for (int j : uniq)
            if (j != i) others.push_back(points[j]);
        if (others.empty() || !in_convex_hull(others, points[i])) out.push_back(i);
    }
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace flowfan
