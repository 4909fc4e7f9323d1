#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eqehr/equivariant.hpp"

namespace eqehr {

// ---------------------------------------------------------------------------
// Symmetric edge polytopes of cycles and their dihedral action
// ---------------------------------------------------------------------------

/// The d-cycle with its dihedral symmetry in the two-path labeling: vertices
/// come in s-orbits {v_i, w_i}, s is the reflection fixing the fewest
/// vertices (one for odd d, none for even d), and r is the rotation sending
/// w_0 to w_1.
struct CycleAction {
    unsigned d = 3;
    std::vector<int> perm_r, perm_s;               ///< vertex index -> image
    std::vector<std::pair<int, int>> edges;
    IMat mat_r, mat_s;                             ///< permutation matrices on Z^d

    /// Path length parameter: paths run v_0..v_ell and w_0..w_ell.
    unsigned ell() const { return d % 2 == 1 ? (d - 1) / 2 : (d - 2) / 2; }

    int v_index(unsigned i) const { return static_cast<int>(i); }
    int w_index(unsigned i) const {
        if (d % 2 == 1) return i == 0 ? 0 : static_cast<int>(ell() + i);  // v_0 = w_0
        return static_cast<int>(ell() + 1 + i);
    }
};

namespace detail {
inline IMat permutation_matrix(const std::vector<int>& perm) {
    IMat m(perm.size(), perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) m(static_cast<std::size_t>(perm[v]), v) = 1;
    return m;
}

inline std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[static_cast<std::size_t>(g[i])];
    return h;
}

inline bool is_identity_perm(const std::vector<int>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}
}  // namespace detail

inline CycleAction cycle_action(unsigned d) {
    if (d < 3) throw std::invalid_argument("cycle graph needs d >= 3");
    CycleAction c;
    c.d = d;
    c.perm_r.assign(d, 0);
    c.perm_s.assign(d, 0);
    if (d % 2 == 1) {
        unsigned ell = (d - 1) / 2;
        auto v = [&](unsigned i) { return static_cast<int>(i); };          // v_0 = w_0
        auto w = [&](unsigned i) { return i == 0 ? 0 : static_cast<int>(ell + i); };
        for (unsigned i = 0; i + 1 <= ell; ++i) c.edges.emplace_back(v(i), v(i + 1));
        for (unsigned i = 1; i + 1 <= ell; ++i) c.edges.emplace_back(w(i), w(i + 1));
        c.edges.emplace_back(v(0), w(1));
        c.edges.emplace_back(v(ell), w(ell));
        // s swaps the paths and fixes v_0
        c.perm_s[static_cast<std::size_t>(v(0))] = v(0);
        for (unsigned i = 1; i <= ell; ++i) {
            c.perm_s[static_cast<std::size_t>(v(i))] = w(i);
            c.perm_s[static_cast<std::size_t>(w(i))] = v(i);
        }
        // r walks the cycle one step in the direction w_0 -> w_1
        c.perm_r[static_cast<std::size_t>(v(0))] = w(1);
        for (unsigned i = 1; i < ell; ++i) c.perm_r[static_cast<std::size_t>(w(i))] = w(i + 1);
        c.perm_r[static_cast<std::size_t>(w(ell))] = v(ell);
        for (unsigned i = ell; i >= 1; --i) c.perm_r[static_cast<std::size_t>(v(i))] = v(i - 1);
    } else {
        unsigned ell = (d - 2) / 2;
        auto v = [&](unsigned i) { return static_cast<int>(i); };
        auto w = [&](unsigned i) { return static_cast<int>(ell + 1 + i); };
        for (unsigned i = 0; i + 1 <= ell; ++i) {
            c.edges.emplace_back(v(i), v(i + 1));
            c.edges.emplace_back(w(i), w(i + 1));
        }
        c.edges.emplace_back(v(0), w(0));
        c.edges.emplace_back(v(ell), w(ell));
        for (unsigned i = 0; i <= ell; ++i) {
            c.perm_s[static_cast<std::size_t>(v(i))] = w(i);
            c.perm_s[static_cast<std::size_t>(w(i))] = v(i);
        }
        c.perm_r[static_cast<std::size_t>(v(0))] = w(0);
        for (unsigned i = 0; i < ell; ++i) c.perm_r[static_cast<std::size_t>(w(i))] = w(i + 1);
        c.perm_r[static_cast<std::size_t>(w(ell))] = v(ell);
        for (unsigned i = ell; i >= 1; --i) c.perm_r[static_cast<std::size_t>(v(i))] = v(i - 1);
    }
    // defining relations are checked, not assumed
    auto r = c.perm_r, s = c.perm_s;
    if (!detail::is_identity_perm(detail::compose(s, s)))
        throw std::logic_error("cycle action: s^2 != 1");
    auto sr = detail::compose(s, r);
    if (!detail::is_identity_perm(detail::compose(sr, sr)))
        throw std::logic_error("cycle action: (sr)^2 != 1");
    auto rk = r;
    for (unsigned k = 1; k < d; ++k) {
        if (detail::is_identity_perm(rk)) throw std::logic_error("cycle action: r order too small");
        rk = detail::compose(r, rk);
    }
    if (!detail::is_identity_perm(rk)) throw std::logic_error("cycle action: r^d != 1");
    c.mat_r = detail::permutation_matrix(c.perm_r);
    c.mat_s = detail::permutation_matrix(c.perm_s);
    return c;
}

/// P_Gamma = Conv{ +-(e_v - e_w) : {v,w} an edge }.
inline RationalPolytope symmetric_edge_polytope(std::size_t nverts,
                                                const std::vector<std::pair<int, int>>& edges) {
    if (edges.empty()) throw std::invalid_argument("symmetric edge polytope needs an edge");
    std::vector<QVec> pts;
    for (const auto& [a, b] : edges) {
        if (a == b || a < 0 || b < 0 || static_cast<std::size_t>(a) >= nverts ||
            static_cast<std::size_t>(b) >= nverts)
            throw std::invalid_argument("bad edge");
        QVec p(nverts, Rat(0)), q(nverts, Rat(0));
        p[static_cast<std::size_t>(a)] = 1;
        p[static_cast<std::size_t>(b)] = -1;
        q[static_cast<std::size_t>(a)] = -1;
        q[static_cast<std::size_t>(b)] = 1;
        pts.push_back(std::move(p));
        pts.push_back(std::move(q));
    }
    return RationalPolytope::from_points(nverts, std::move(pts));
}

inline RationalPolytope sep_cycle(unsigned d) {
    CycleAction c = cycle_action(d);
    return symmetric_edge_polytope(d, c.edges);
}

enum class SepGroup { dihedral, s_only };

inline EquivariantSetup sep_cycle_setup(unsigned d, SepGroup kind) {
    CycleAction c = cycle_action(d);
    RationalPolytope p = symmetric_edge_polytope(d, c.edges);
    SymmetryGroup sym = kind == SepGroup::dihedral
                            ? dihedral_symmetry(c.mat_r, c.mat_s, d)
                            : cyclic_symmetry(c.mat_s, 2);
    return validate_setup(p, std::move(sym));
}

// ---------------------------------------------------------------------------
// Rational cross-polytopes and coordinate reflections
// ---------------------------------------------------------------------------

/// P(k,d) = Conv{ +-e_1, ..., +-e_{d-1}, +-(k/2) e_d } with k odd.
inline RationalPolytope cross_polytope_rational(long k, unsigned d) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("k must be odd and positive");
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    std::vector<QVec> pts;
    for (unsigned i = 0; i + 1 < d; ++i) {
        QVec p(d, Rat(0)), q(d, Rat(0));
        p[i] = 1;
        q[i] = -1;
        pts.push_back(std::move(p));
        pts.push_back(std::move(q));
    }
    QVec p(d, Rat(0)), q(d, Rat(0));
    p[d - 1] = Rat(k) / 2;
    q[d - 1] = -Rat(k) / 2;
    pts.push_back(std::move(p));
    pts.push_back(std::move(q));
    return RationalPolytope::from_points(d, std::move(pts));
}

/// Conv{ +-e_1, ..., +-e_n }.
inline RationalPolytope standard_cross_polytope(unsigned n) {
    if (n < 1) throw std::invalid_argument("cross-polytope needs n >= 1");
    std::vector<QVec> pts;
    for (unsigned i = 0; i < n; ++i) {
        QVec p(n, Rat(0)), q(n, Rat(0));
        p[i] = 1;
        q[i] = -1;
        pts.push_back(std::move(p));
        pts.push_back(std::move(q));
    }
    return RationalPolytope::from_points(n, std::move(pts));
}

/// diag(1, ..., -1, ..., 1) with -1 at the (0-based) axis.
inline IMat coordinate_reflection(unsigned dim, unsigned axis) {
    if (axis >= dim) throw std::invalid_argument("axis out of range");
    IMat m = IMat::identity(dim);
    m(axis, axis) = -1;
    return m;
}

enum class CrossGroup { sigma_d, all_reflections };

inline EquivariantSetup cross_setup(long k, unsigned d, CrossGroup kind) {
    RationalPolytope p = cross_polytope_rational(k, d);
    if (kind == CrossGroup::sigma_d)
        return validate_setup(p, cyclic_symmetry(coordinate_reflection(d, d - 1), 2));
    SymmetryGroup g = cyclic_symmetry(coordinate_reflection(d, 0), 2);
    for (unsigned i = 1; i < d; ++i)
        g = product_symmetry(g, cyclic_symmetry(coordinate_reflection(d, i), 2));
    return validate_setup(p, std::move(g));
}

inline EquivariantSetup cross_setup_axis(long k, unsigned d, unsigned axis) {
    RationalPolytope p = cross_polytope_rational(k, d);
    return validate_setup(p, cyclic_symmetry(coordinate_reflection(d, axis), 2));
}

// ---------------------------------------------------------------------------
// Closed-form oracles
// ---------------------------------------------------------------------------

/// h* coefficients of the symmetric edge polytope of the d-cycle. The closed
/// sum is used below the middle, the special value 2^{d-1} at the middle for
/// odd d, and palindromy h_j = h_{d-1-j} above; the alternative recurrence
/// route is cross-checked internally and any disagreement aborts.
inline Poly ohsugi_h(unsigned d) {
    if (d < 3) throw std::invalid_argument("ohsugi_h needs d >= 3");
    auto closed = [](unsigned dd, unsigned j) {
        Int sum = 0;
        Int p2 = 1;  // (-2)^i
        for (unsigned i = 0; i <= j; ++i) {
            sum += p2 * binomial(dd, i) * binomial(static_cast<long>(dd) - 1 - i,
                                                   static_cast<long>(j) - i);
            p2 *= -2;
        }
        return j % 2 == 0 ? sum : -sum;
    };
    QVec h(d, Rat(0));
    h[0] = 1;
    const unsigned mid = (d - 1) / 2;  // last index computed directly
    for (unsigned j = 1; j <= mid; ++j) {
        if (d % 2 == 1 && j == mid)
            h[j] = Rat(Int(1) << (d - 1));
        else
            h[j] = Rat(closed(d, j));
    }
    for (unsigned j = mid + 1; j < d; ++j) h[j] = h[d - 1 - j];
    Poly result(h);

    // independent route: the recurrence h_j^(d) = h_{j-1}^(d-1) + h_j^(d-1)
    if (d > 3) {
        Poly prev = ohsugi_h(d - 1);
        for (unsigned j = 1; j <= d / 2; ++j) {
            if (d % 2 == 1 && j == mid) {
                if (result.coeff(j) != Rat(Int(1) << (d - 1)))
                    throw CrossCheckError("middle coefficient mismatch in ohsugi_h");
                continue;
            }
            if (result.coeff(j) != prev.coeff(j - 1) + prev.coeff(j))
                throw CrossCheckError("recurrence mismatch in ohsugi_h at d=" +
                                      std::to_string(d) + ", j=" + std::to_string(j));
        }
    }
    for (unsigned j = 0; j < d; ++j)
        if (result.coeff(j) != result.coeff(d - 1 - j))
            throw CrossCheckError("palindromy violated in ohsugi_h");
    return result;
}

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// g_j^{(d)} = C((d-1)/2, j/2) for even j (odd d).
inline Int odd_cycle_g(unsigned d, unsigned j) {
    return binomial((d - 1) / 2, j / 2);
}

/// Multiplicities of psi1, psi2 and the composite chi = sum chi_j in degree j
/// of the H*-series of the prime-cycle polytope under the full dihedral
/// group.
struct PrimeCycleRow {
    Int psi1, psi2, chi;
};

inline std::vector<PrimeCycleRow> prime_cycle_hstar(unsigned p) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    Poly h = ohsugi_h(p);
    std::vector<PrimeCycleRow> rows;
    auto exact_div = [](const Int& num, const Int& den) {
        if (num % den != 0)
            throw NonIntegralError("closed-form multiplicity is not an integer");
        return num / den;
    };
    for (unsigned j = 0; j < p; ++j) {
        Int hj = to_integer(h.coeff(j));
        PrimeCycleRow row;
        if (j % 2 == 0) {
            Int gj = odd_cycle_g(p, j);
            row.psi1 = exact_div(hj - 1 + p * (gj + 1), 2 * p);
            row.psi2 = exact_div(hj - 1 - p * (gj - 1), 2 * p);
        } else {
            row.psi1 = exact_div(p + hj - 1, 2 * p);
            row.psi2 = row.psi1;
        }
        row.chi = exact_div(2 * hj - 2, 2 * p);
        if (row.psi1 < 0 || row.psi2 < 0 || row.chi < 0)
            throw CrossCheckError("closed-form multiplicity is negative");
        rows.push_back(row);
    }
    return rows;
}

/// g-polynomial of the order-two action on the d-cycle polytope:
/// (1+t)^b (1+t^2)^l with l = floor((d-1)/2) and b = d-1-2l, so that the
/// degree is d-1 for both parities.
inline Poly reflection_g_poly(unsigned d) {
    unsigned ell = (d - 1) / 2;
    unsigned b = d - 1 - 2 * ell;
    return Poly{1, 1}.pow(b) * Poly{1, 0, 1}.pow(ell);
}

/// Multiplicities of the trivial and sign characters in degree j of the
/// H*-series of the d-cycle polytope under {1, s}.
struct ReflectionRow {
    Int chi1, chi2;
};

inline std::vector<ReflectionRow> reflection_cycle_hstar(unsigned d) {
    if (d < 3) throw std::invalid_argument("d must be at least 3");
    Poly h = ohsugi_h(d);
    Poly g = reflection_g_poly(d);
    std::vector<ReflectionRow> rows;
    for (unsigned j = 0; j < d; ++j) {
        Int hj = to_integer(h.coeff(j));
        Int gj = to_integer(g.coeff(j));
        if ((hj + gj) % 2 != 0)
            throw NonIntegralError("h and g coefficients have different parity");
        ReflectionRow row{(hj + gj) / 2, (hj - gj) / 2};
        if (row.chi1 < 0 || row.chi2 < 0)
            throw CrossCheckError("closed-form multiplicity is negative");
        rows.push_back(row);
    }
    return rows;
}

/// (1 + (k-1)t + kt^2)(1+t)^{d-2}, the classical h* of P(k,d).
inline Poly h_tilde(long k, unsigned d) {
    return Poly{1, Rat(k - 1), Rat(k)} * Poly{1, 1}.pow(d - 2);
}

/// Coefficients (a_j, b_j) of H*[t] = sum (a_j chi1 + b_j chi2) t^j for the
/// reflection of the last axis, and for the full reflection group.
struct CrossRow {
    Int a, b;
};

inline std::vector<CrossRow> cross_reflection_coeffs(long k, unsigned d) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("k must be odd and positive");
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    std::vector<CrossRow> rows;
    for (long j = 0; j <= static_cast<long>(d); ++j) {
        CrossRow row;
        row.a = binomial(static_cast<long>(d) - 2, j) +
                (k + 1) / 2 * binomial(static_cast<long>(d) - 1, j - 1);
        row.b = (k - 1) / 2 * binomial(static_cast<long>(d) - 1, j - 1) -
                binomial(static_cast<long>(d) - 2, j - 1);
        rows.push_back(row);
    }
    return rows;
}

/// Margin table of the inequality h_j >= d (g_j - 1) + 1 for even j up to
/// (d-1)/2; a violation would contradict the closed forms and aborts.
struct InequalityMargin {
    unsigned j;
    Int h, bound, margin;
};

inline std::vector<InequalityMargin> cycle_inequality_check(unsigned d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and at least 3");
    Poly h = ohsugi_h(d);
    std::vector<InequalityMargin> out;
    for (unsigned j = 0; j <= (d - 1) / 2; j += 2) {
        Int hj = to_integer(h.coeff(j));
        Int bound = Int(d) * (odd_cycle_g(d, j) - 1) + 1;
        Int margin = hj - bound;
        if (margin < 0)
            throw CrossCheckError("inequality violated at d=" + std::to_string(d) +
                                  ", j=" + std::to_string(j));
        out.push_back({j, hj, bound, margin});
    }
    return out;
}

/// ehr of the half-open cross-polytope slice: (1+t^2)^l / ((1-t)(1-t^2)^l).
inline RationalGenFunction half_cross_slice_series(unsigned ell) {
    if (ell < 1) throw std::invalid_argument("ell must be at least 1");
    Poly num = Poly{1, 0, 1}.pow(ell);
    Poly den = Poly{1, -1} * Poly{1, 0, -1}.pow(ell);
    return rf_reduce(std::move(num), std::move(den));
}

/// ehr(P(k,d), t) = (1 + (k-1)t + kt^2)(1+t)^{d-2} / (1-t)^{d+1}.
inline RationalGenFunction cross_family_series(long k, unsigned d) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("k must be odd and positive");
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    return rf_reduce(h_tilde(k, d), one_minus_tn_pow(1, d + 1));
}

}  // namespace eqehr
