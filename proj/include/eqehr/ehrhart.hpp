#pragma once

#include <vector>

#include "eqehr/parallel.hpp"
#include "eqehr/polytope.hpp"
#include "eqehr/ratfun.hpp"

namespace eqehr {

/// Degree-d quasipolynomial with coefficient table indexed by residue class:
/// L(m) = sum_j table[m mod period][j] * m^j.
struct QuasiPolynomial {
    long degree = 0;
    long period = 1;
    std::vector<QVec> table;  ///< period rows, degree+1 coefficients each

    Rat evaluate(long m) const {
        const QVec& c = table[static_cast<std::size_t>(m % period)];
        Rat acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + *it;
        return acc;
    }
};

/// Count the expansion of counts * (1 - t^N)^(d+1). The counts must reach
/// m = N(d+1)+N-1; the last N convolution coefficients act as a terminator
/// check and a nonzero one means d or N was wrong.
inline Poly hstar_from_counts(const std::vector<Int>& counts, long d, long n_den) {
    if (d < 0 || n_den < 1) throw std::invalid_argument("hstar_from_counts: bad dimensions");
    const long need = n_den * (d + 1) + n_den;  // number of counts
    if (static_cast<long>(counts.size()) < need)
        throw std::invalid_argument("hstar_from_counts: not enough counts");
    if (counts[0] != 1) throw std::invalid_argument("hstar_from_counts: counts[0] must be 1");
    Poly den = one_minus_tn_pow(static_cast<unsigned>(n_den), static_cast<unsigned>(d + 1));
    const long degree_bound = n_den * (d + 1) - 1;
    QVec h(static_cast<std::size_t>(need), Rat(0));
    for (long m = 0; m < need; ++m) {
        Rat v = 0;
        for (long k = 0; k <= std::min<long>(m, den.degree()); ++k)
            v += den.coeff(static_cast<std::size_t>(k)) * Rat(counts[static_cast<std::size_t>(m - k)]);
        if (m > degree_bound && v != 0)
            throw NonTerminatingError("numerator does not terminate at degree " +
                                      std::to_string(degree_bound) +
                                      "; wrong dimension or denominator");
        h[static_cast<std::size_t>(m)] = v;
    }
    h.resize(static_cast<std::size_t>(degree_bound + 1));
    return Poly(std::move(h));
}

/// Per-residue interpolation of the counts as a degree-d, period-N
/// quasipolynomial; every supplied count is re-verified against the fit.
inline QuasiPolynomial quasipolynomial_fit(const std::vector<Int>& counts, long d, long n_per) {
    if (d < 0 || n_per < 1) throw std::invalid_argument("quasipolynomial_fit: bad dimensions");
    const long need = n_per * (d + 1);
    if (static_cast<long>(counts.size()) < need)
        throw std::invalid_argument("quasipolynomial_fit: not enough counts");
    QuasiPolynomial q;
    q.degree = d;
    q.period = n_per;
    q.table.resize(static_cast<std::size_t>(n_per));
    for (long r = 0; r < n_per; ++r) {
        // Lagrange interpolation through (r + k*N, count) for k = 0..d
        QVec coeff(static_cast<std::size_t>(d + 1), Rat(0));
        for (long k = 0; k <= d; ++k) {
            long mk = r + k * n_per;
            // basis polynomial prod_{j != k} (x - m_j) / (m_k - m_j)
            QVec basis{1};
            Rat scale = 1;
            for (long j = 0; j <= d; ++j) {
                if (j == k) continue;
                long mj = r + j * n_per;
                QVec next(basis.size() + 1, Rat(0));
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    next[i + 1] += basis[i];
                    next[i] -= Rat(mj) * basis[i];
                }
                basis = std::move(next);
                scale *= Rat(mk - mj);
            }
            Rat w = Rat(counts[static_cast<std::size_t>(mk)]) / scale;
            for (std::size_t i = 0; i < basis.size(); ++i) coeff[i] += w * basis[i];
        }
        q.table[static_cast<std::size_t>(r)] = std::move(coeff);
    }
    for (std::size_t m = 0; m < counts.size(); ++m)
        if (q.evaluate(static_cast<long>(m)) != Rat(counts[m]))
            throw NonTerminatingError("quasipolynomial does not reproduce the counts; "
                                      "degree or period bound is wrong");
    // Residue classes whose dilates carry lattice points share the volume as
    // their leading coefficient; the others (affine hull misses the lattice)
    // are identically zero.
    Rat volume = 0;
    for (long r = 0; r < n_per; ++r) {
        const QVec& row = q.table[static_cast<std::size_t>(r)];
        bool zero = true;
        for (const auto& c : row)
            if (c != 0) zero = false;
        if (zero) continue;
        Rat lead = row[static_cast<std::size_t>(d)];
        if (volume == 0)
            volume = lead;
        else if (lead != volume)
            throw CrossCheckError("leading quasipolynomial coefficient varies with residue");
    }
    return q;
}

/// Smallest divisor N' of the period such that the coefficient table is
/// N'-periodic.
inline long minimal_period(const QuasiPolynomial& q) {
    for (long p = 1; p <= q.period; ++p) {
        if (q.period % p != 0) continue;
        bool ok = true;
        for (long r = 0; ok && r < q.period; ++r)
            if (q.table[static_cast<std::size_t>(r)] !=
                q.table[static_cast<std::size_t>((r + p) % q.period)])
                ok = false;
        if (ok) return p;
    }
    return q.period;
}

/// Everything the classical pipeline produces for one polytope.
struct EhrhartData {
    std::vector<Int> counts;       ///< m = 0 .. N(d+1)+N-1
    Poly hstar;                    ///< numerator over (1 - t^N)^(d+1)
    long dim = 0;                  ///< affine dimension d
    Int denominator = 1;           ///< N
    RationalGenFunction series;    ///< reduced form of hstar / (1-t^N)^(d+1)
    QuasiPolynomial quasi;
    long min_period = 1;
    bool is_pip = false;           ///< rational with period one
};

/// Full classical pipeline: counts, h*, reduced series, quasipolynomial,
/// minimal period and the period-one flag. Counting over dilates runs in
/// parallel.
inline EhrhartData ehrhart(const RationalPolytope& p) {
    if (p.is_empty()) throw std::invalid_argument("ehrhart of the empty polytope");
    EhrhartData e;
    e.dim = p.affine_dim();
    e.denominator = p.denominator();
    long n_den = e.denominator.convert_to<long>();
    long need = n_den * (e.dim + 1) + n_den;
    e.counts.resize(static_cast<std::size_t>(need));
    parallel_for(static_cast<std::size_t>(need),
                 [&](std::size_t m) { e.counts[m] = p.lattice_point_count(static_cast<long>(m)); });
    e.hstar = hstar_from_counts(e.counts, e.dim, n_den);
    e.series = rf_reduce(e.hstar, one_minus_tn_pow(static_cast<unsigned>(n_den),
                                                   static_cast<unsigned>(e.dim + 1)));
    e.quasi = quasipolynomial_fit(e.counts, e.dim, n_den);
    e.min_period = minimal_period(e.quasi);
    e.is_pip = e.min_period == 1;
    return e;
}

}  // namespace eqehr
