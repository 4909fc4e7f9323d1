#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eqehr/rational.hpp"

namespace eqehr {

/// Dense row-major matrix.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Mat();
        Mat m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
    friend bool operator<(const Mat& a, const Mat& b) { return a.a_ < b.a_; }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using QMat = Mat<Rat>;
using IMat = Mat<Int>;

inline QMat to_qmat(const IMat& m) {
    QMat q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

inline QVec to_qvec(const IVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        Rat inv = Rat(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

/// One solution of A x = b, if any.
inline std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
    QMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    QVec x(a.cols(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

/// Basis of the rational kernel {x : A x = 0}.
inline std::vector<QVec> nullspace(QMat a) {
    auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVec v(a.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rat determinant(QMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Rat det = 1;
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
            det = -det;
        }
        det *= m(c, c);
        Rat inv = Rat(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// Integer lattice computations (Hermite normal form based)
// ---------------------------------------------------------------------------

namespace detail {
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return abs(a);
    }
    Int x1, y1;
    Int g = xgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}
}  // namespace detail

struct HnfResult {
    IMat h;  ///< row Hermite normal form
    IMat u;  ///< unimodular transform with u * input = h
};

/// Row-style Hermite normal form: nonzero rows first, each pivot positive,
/// entries above a pivot reduced into [0, pivot), entries below zero.
inline HnfResult hnf_with_transform(IMat m) {
    std::size_t rows = m.rows(), cols = m.cols();
    IMat u = IMat::identity(rows);
    auto row_combine = [&](std::size_t i, std::size_t k, std::size_t c) {
        // zero out m(k,c) against m(i,c) with a unimodular 2x2 transform
        Int x, y;
        Int g = detail::xgcd(m(i, c), m(k, c), x, y);
        Int ai = m(i, c) / g, ak = m(k, c) / g;
        for (std::size_t j = 0; j < cols; ++j) {
            Int mi = x * m(i, j) + y * m(k, j);
            Int mk = -ak * m(i, j) + ai * m(k, j);
            m(i, j) = mi;
            m(k, j) = mk;
        }
        for (std::size_t j = 0; j < rows; ++j) {
            Int ui = x * u(i, j) + y * u(k, j);
            Int uk = -ak * u(i, j) + ai * u(k, j);
            u(i, j) = ui;
            u(k, j) = uk;
        }
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (std::size_t k = r + 1; k < rows; ++k)
            if (m(k, c) != 0) {
                if (m(r, c) == 0) {
                    for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(k, j));
                    for (std::size_t j = 0; j < rows; ++j) std::swap(u(r, j), u(k, j));
                } else {
                    row_combine(r, k, c);
                }
            }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0) {
            for (std::size_t j = 0; j < cols; ++j) m(r, j) = -m(r, j);
            for (std::size_t j = 0; j < rows; ++j) u(r, j) = -u(r, j);
        }
        for (std::size_t i = 0; i < r; ++i) {
            // reduce entries above the pivot into [0, pivot)
            Int q = m(i, c) / m(r, c);
            if (m(i, c) - q * m(r, c) < 0) --q;
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
            for (std::size_t j = 0; j < rows; ++j) u(i, j) -= q * u(r, j);
        }
        ++r;
    }
    return {std::move(m), std::move(u)};
}

inline IMat hnf(IMat m) { return hnf_with_transform(std::move(m)).h; }

/// Nonzero rows of the HNF; the canonical basis of the row lattice.
inline IMat hnf_basis(const IMat& m) {
    IMat h = hnf(m);
    std::size_t nz = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) zero = false;
        if (!zero) nz = i + 1;
    }
    IMat b(nz, h.cols());
    for (std::size_t i = 0; i < nz; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) b(i, j) = h(i, j);
    return b;
}

/// Z-basis (canonical HNF rows) of {x in Z^n : A x = 0}. The result is
/// automatically saturated: any integer vector in its rational span lies in
/// the lattice it generates.
inline IMat integer_kernel(const IMat& a) {
    IMat mt = a.transpose();  // rows = x-space candidates
    auto [h, u] = hnf_with_transform(std::move(mt));
    std::vector<std::vector<Int>> ker;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) zero = false;
        if (zero) ker.push_back(u.row(i));
    }
    if (ker.empty()) return IMat(0, a.cols());
    return hnf_basis(IMat::from_rows(ker));
}

/// One integer solution of A x = b, if any.
inline std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
    auto [h, u] = hnf_with_transform(a.transpose());
    IVec residual = b;
    IVec y(h.rows(), Int(0));
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = 0;
        while (c < h.cols() && h(i, c) == 0) ++c;
        if (c == h.cols()) continue;
        // truncated quotient; a non-dividing pivot leaves a residue that the
        // final zero check rejects
        Int q = residual[c] / h(i, c);
        for (std::size_t j = 0; j < h.cols(); ++j) residual[j] -= q * h(i, j);
        y[i] = q;
    }
    for (const auto& v : residual)
        if (v != 0) return std::nullopt;
    IVec x(a.cols(), Int(0));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) x[j] += y[i] * u(i, j);
    return x;
}

/// Saturation of the row lattice of g: (span_Q(rows) intersect Z^n), as
/// canonical HNF rows. Computed as the kernel of the kernel: the rows of
/// integer_kernel(g) span the orthogonal complement of span_Q(rows of g).
inline IMat saturate_rows(const IMat& g) {
    return integer_kernel(integer_kernel(g));
}

// ---------------------------------------------------------------------------
// Exact LP feasibility: convex combination membership
// ---------------------------------------------------------------------------

/// Decides whether `target` lies in the convex hull of `points`, by exact
/// phase-1 simplex with Bland's rule. Returns the convex coefficients when
/// feasible.
inline std::optional<QVec> convex_combination(const std::vector<QVec>& points,
                                              const QVec& target) {
    if (points.empty()) return std::nullopt;
    std::size_t dim = target.size();
    std::size_t k = points.size();
    std::size_t m = dim + 1;       // equality constraints
    std::size_t n = k + m;         // lambda variables + artificials
    // tableau: m rows of [A | I | rhs], objective = sum of artificials
    std::vector<QVec> t(m, QVec(n + 1, Rat(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) t[i][j] = points[j][i];
        t[i][n] = target[i];
    }
    for (std::size_t j = 0; j < k; ++j) t[dim][j] = 1;
    t[dim][n] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (t[i][n] < 0)
            for (auto& v : t[i]) v = -v;
        t[i][k + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;
    // reduced cost row for minimizing sum of artificials
    QVec z(n + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) z[j] += t[i][j];
    for (std::size_t i = 0; i < m; ++i) z[k + i] -= 1;

    while (true) {
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j)
            if (z[j] > 0) { enter = j; break; }  // Bland: lowest index
        if (enter == n) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave]))
            {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return std::nullopt;  // unbounded; cannot occur here
        Rat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat fz = z[enter];
        for (std::size_t j = 0; j <= n; ++j) z[j] -= fz * t[leave][j];
        basis[leave] = enter;
    }
    if (z[n] != 0) return std::nullopt;  // artificials remain: infeasible
    QVec lambda(k, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < k) lambda[basis[i]] = t[i][n];
    return lambda;
}

inline bool in_convex_hull(const std::vector<QVec>& points, const QVec& target) {
    return convex_combination(points, target).has_value();
}

}  // namespace eqehr
