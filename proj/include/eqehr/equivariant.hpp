#pragma once

#include <optional>
#include <vector>

#include "eqehr/ehrhart.hpp"
#include "eqehr/symmetry.hpp"

namespace eqehr {

/// Validated main setup: a polytope invariant (up to lattice translation)
/// under a matrix group, the per-element translations v_g, the affine lifts
/// to dimension 1+n, and the invariant subspace W spanned by {(1, x) : x in P}.
struct EquivariantSetup {
    RationalPolytope polytope;
    SymmetryGroup sym;
    std::vector<IVec> translations;  ///< v_g with g(P) + v_g = P
    std::vector<IMat> lifts;         ///< [[1, 0], [v_g, rho(g)]]
    QMat w_basis;                    ///< rows span W, dim = affine_dim(P) + 1
    QVec invariant_point;            ///< fixed point of every affine map g(.) + v_g
    Int lambda;                      ///< smallest l with l * invariant_point integral

    std::size_t class_count() const { return sym.group.classes.size(); }
    const std::vector<std::string>& class_labels() const { return sym.table.class_labels; }
};

namespace detail {

inline QVec apply_affine(const EquivariantSetup& s, int element, const QVec& x) {
    const IMat& a = s.sym.group.elements[static_cast<std::size_t>(element)];
    const IVec& v = s.translations[static_cast<std::size_t>(element)];
    QVec y(x.size(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += Rat(a(i, j)) * x[j];
        y[i] += Rat(v[i]);
    }
    return y;
}

}  // namespace detail

/// Detect the translations v_g, verify the cocycle relation and the lift
/// homomorphism, and assemble the setup. Throws NotInvariantError when some
/// g(P) is not a lattice translate of P.
inline EquivariantSetup validate_setup(const RationalPolytope& p, SymmetryGroup sym) {
    if (p.is_empty()) throw std::invalid_argument("empty polytope");
    const std::size_t n = p.ambient_dim();
    if (sym.group.ambient_dim != n)
        throw std::invalid_argument("group acts on a different ambient dimension");
    const auto& verts = p.vertices();
    const std::size_t nv = verts.size();
    const std::size_t ng = sym.group.order();

    EquivariantSetup s;
    s.polytope = p;
    s.sym = std::move(sym);
    const SymmetryGroup& sg = s.sym;

    auto label = [&](std::size_t e) {
        return e < sg.group.labels.size() ? sg.group.labels[e] : "#" + std::to_string(e);
    };

    // v_g is pinned down by the vertex barycenter: g(P) + v = P forces
    // v = (sum of vertices - sum of g-images) / #vertices
    QVec vertex_sum(n, Rat(0));
    for (const auto& v : verts)
        for (std::size_t j = 0; j < n; ++j) vertex_sum[j] += v[j];
    std::vector<QVec> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t e = 0; e < ng; ++e) {
        const IMat& a = sg.group.elements[e];
        std::vector<QVec> images;
        images.reserve(nv);
        QVec img_sum(n, Rat(0));
        for (const auto& v : verts) {
            QVec gv(n, Rat(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) gv[i] += Rat(a(i, j)) * v[j];
            for (std::size_t j = 0; j < n; ++j) img_sum[j] += gv[j];
            images.push_back(std::move(gv));
        }
        IVec vg(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rat c = (vertex_sum[j] - img_sum[j]) / Rat(nv);
            if (!is_integer(c))
                throw NotInvariantError("element " + label(e) +
                                        " does not translate the polytope by a lattice vector");
            vg[j] = numer_of(c);
        }
        for (auto& gv : images)
            for (std::size_t j = 0; j < n; ++j) gv[j] += Rat(vg[j]);
        std::sort(images.begin(), images.end());
        if (images != sorted)
            throw NotInvariantError("element " + label(e) +
                                    " does not map the polytope to itself");
        s.translations.push_back(std::move(vg));
    }

    // cocycle v_{gh} = g(v_h) + v_g
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t h = 0; h < ng; ++h) {
            IVec expect = sg.group.elements[g].apply(s.translations[h]);
            for (std::size_t j = 0; j < n; ++j) expect[j] += s.translations[g][j];
            std::size_t gh = static_cast<std::size_t>(sg.group.product[g][h]);
            if (expect != s.translations[gh])
                throw NotInvariantError("translations violate the cocycle relation");
        }

    // affine lifts and the homomorphism check
    for (std::size_t e = 0; e < ng; ++e) {
        IMat lift(n + 1, n + 1);
        lift(0, 0) = 1;
        for (std::size_t i = 0; i < n; ++i) {
            lift(i + 1, 0) = s.translations[e][i];
            for (std::size_t j = 0; j < n; ++j) lift(i + 1, j + 1) = sg.group.elements[e](i, j);
        }
        s.lifts.push_back(std::move(lift));
    }
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t h = 0; h < ng; ++h)
            if (s.lifts[g] * s.lifts[h] !=
                s.lifts[static_cast<std::size_t>(sg.group.product[g][h])])
                throw std::logic_error("affine lifts are not a homomorphism");

    // W = span{(1, x) : x in P}
    {
        QMat cand(nv, n + 1);
        for (std::size_t i = 0; i < nv; ++i) {
            cand(i, 0) = 1;
            for (std::size_t j = 0; j < n; ++j) cand(i, j + 1) = verts[i][j];
        }
        QMat reduced = cand;
        auto pivots = rref(reduced);
        QMat basis(pivots.size(), n + 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < n + 1; ++j) basis(i, j) = reduced(i, j);
        if (static_cast<long>(pivots.size()) != p.affine_dim() + 1)
            throw std::logic_error("span of {1} x P has unexpected dimension");
        s.w_basis = std::move(basis);
    }

    // invariant point: average the affine orbit of a lattice point of P when
    // one exists, else of the vertex barycenter
    {
        QVec seed;
        if (auto lp = p.first_lattice_point()) {
            seed = to_qvec(*lp);
        } else {
            seed = QVec(n, Rat(0));
            for (std::size_t j = 0; j < n; ++j) seed[j] = vertex_sum[j] / Rat(nv);
        }
        QVec e_inv(n, Rat(0));
        for (std::size_t g = 0; g < ng; ++g) {
            QVec img = detail::apply_affine(s, static_cast<int>(g), seed);
            for (std::size_t j = 0; j < n; ++j) e_inv[j] += img[j];
        }
        for (auto& c : e_inv) c /= Rat(ng);
        for (std::size_t g = 0; g < ng; ++g)
            if (detail::apply_affine(s, static_cast<int>(g), e_inv) != e_inv)
                throw std::logic_error("orbit average is not invariant");
        s.lambda = 1;
        for (const auto& c : e_inv) s.lambda = lcm_int(s.lambda, denom_of(c));
        s.invariant_point = std::move(e_inv);
    }

    return s;
}

/// Fixed polytope of one element: the image of P under averaging along the
/// cyclic group generated by the affine map x -> g(x) + v_g, which equals
/// {x in P : g(x) + v_g = x}. Vertices are orbit averages of vertices.
inline RationalPolytope fixed_polytope(const EquivariantSetup& s, int element) {
    if (element == 0) return s.polytope;  // identity fixes everything
    const std::size_t n = s.polytope.ambient_dim();
    int ord = s.sym.group.element_order(element);
    std::vector<QVec> pts;
    pts.reserve(s.polytope.vertices().size());
    for (const auto& v : s.polytope.vertices()) {
        QVec acc(n, Rat(0));
        QVec cur = v;
        for (int k = 0; k < ord; ++k) {
            for (std::size_t j = 0; j < n; ++j) acc[j] += cur[j];
            cur = detail::apply_affine(s, element, cur);
        }
        for (auto& c : acc) c /= Rat(ord);
        pts.push_back(std::move(acc));
    }
    return RationalPolytope::from_points(n, std::move(pts));
}

/// Number of lattice points of mP fixed by the level-m affine action of g,
/// i.e. x in mP with g(x) + m v_g = x. Equals the m-th dilate count of the
/// fixed polytope since (I - g)x = m v_g is homogeneous in (m, x).
inline Int fixed_point_count(const EquivariantSetup& s, int element, long m) {
    return fixed_polytope(s, element).lattice_point_count(m);
}

/// D_g(t) = det(I - t * lift(g)|_W), the denominator factor of the
/// equivariant series at g. Degree is always affine_dim(P) + 1.
inline Poly denominator_factor(const EquivariantSetup& s, int element) {
    const QMat& b = s.w_basis;
    const std::size_t k = b.rows(), n1 = b.cols();
    const IMat& lift = s.lifts[static_cast<std::size_t>(element)];
    // restriction matrix: solve basis^T * R = (lift * basis^T)
    QMat bt(n1, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n1; ++j) bt(j, i) = b(i, j);
    QMat images(n1, k);
    for (std::size_t c = 0; c < k; ++c) {
        QVec w(n1, Rat(0));
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) w[i] += Rat(lift(i, j)) * bt(j, c);
        for (std::size_t i = 0; i < n1; ++i) images(i, c) = w[i];
    }
    QMat r(k, k);
    for (std::size_t c = 0; c < k; ++c) {
        auto col = solve_linear(bt, images.col(c));
        if (!col) throw std::logic_error("W is not invariant under the lift");
        for (std::size_t i = 0; i < k; ++i) r(i, c) = (*col)[i];
    }
    // det(I - tR) by interpolation at k+1 nodes
    Poly result;
    for (std::size_t node = 0; node <= k; ++node) {
        QMat m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                m(i, j) = -Rat(node) * r(i, j);
                if (i == j) m(i, j) += 1;
            }
        Rat val = determinant(std::move(m));
        Poly basis_poly = Poly::one();
        Rat scale = 1;
        for (std::size_t other = 0; other <= k; ++other) {
            if (other == node) continue;
            basis_poly *= Poly{-Rat(other), 1};
            scale *= Rat(node) - Rat(other);
        }
        result += (val / scale) * basis_poly;
    }
    if (result.degree() != static_cast<int>(k))
        throw std::logic_error("denominator factor has unexpected degree");
    return result;
}

/// Geometry shared by the per-class pipelines.
struct ClassData {
    int representative = 0;
    RationalPolytope fixed;
    Poly den_factor;
    RationalGenFunction fixed_series;   ///< reduced ehr(P^g, t)
    RationalGenFunction hstar_series;   ///< reduced ehr(P^g, t) * D_g(t)
};

/// Per-class fixed polytopes, denominator factors and reduced series,
/// computed independently (and in parallel) per class.
inline std::vector<ClassData> class_pipeline(const EquivariantSetup& s) {
    auto reps = s.sym.group.class_representatives();
    std::vector<ClassData> out(reps.size());
    parallel_for(reps.size(), [&](std::size_t c) {
        ClassData d;
        d.representative = reps[c];
        d.fixed = fixed_polytope(s, d.representative);
        d.den_factor = denominator_factor(s, d.representative);
        d.fixed_series =
            d.fixed.is_empty() ? RationalGenFunction::one() : ehrhart(d.fixed).series;
        d.hstar_series = d.fixed_series * d.den_factor;
        out[c] = std::move(d);
    });
    return out;
}

/// Equivariant H*-series report: per-class exact rational functions, the
/// polynomiality verdict, per-degree coefficient class functions with their
/// irreducible decompositions, and the effectiveness verdict (not applicable
/// when the series is not a polynomial, since effectiveness would force
/// polynomiality).
struct HStarReport {
    std::vector<std::string> class_labels;
    std::vector<std::string> row_labels;
    std::vector<RationalGenFunction> hstar_per_class;
    bool is_polynomial = false;
    std::vector<ClassFunction> coefficients;
    std::vector<VirtualCharacter> multiplicities;
    std::optional<bool> is_effective;      ///< nullopt = not applicable
    std::optional<long> order_truncated;   ///< set when not a polynomial
};

inline HStarReport hstar_series(const EquivariantSetup& s,
                                std::optional<long> truncation_order = std::nullopt) {
    auto classes = class_pipeline(s);
    HStarReport rep;
    rep.class_labels = s.sym.table.class_labels;
    rep.row_labels = s.sym.table.row_labels;
    for (const auto& c : classes) rep.hstar_per_class.push_back(c.hstar_series);

    // identity sanity: D_1 = (1-t)^{dim+1} and H(1) recovers the classical data
    const Poly expected_d1 =
        one_minus_tn_pow(1, static_cast<unsigned>(s.polytope.affine_dim() + 1));
    if (classes[0].den_factor != expected_d1)
        throw CrossCheckError("identity denominator factor is not (1-t)^{dim+1}");

    rep.is_polynomial = true;
    for (const auto& f : rep.hstar_per_class)
        if (!f.is_polynomial()) rep.is_polynomial = false;

    long order;
    if (rep.is_polynomial) {
        long deg = 0;
        for (const auto& f : rep.hstar_per_class)
            deg = std::max<long>(deg, f.num().degree());
        order = deg;
    } else {
        long def = 2 * (s.polytope.affine_dim() + 1) *
                   s.polytope.denominator().convert_to<long>();
        order = truncation_order.value_or(def);
        rep.order_truncated = order;
    }

    std::vector<QVec> expansions;
    expansions.reserve(rep.hstar_per_class.size());
    for (const auto& f : rep.hstar_per_class)
        expansions.push_back(f.expand(static_cast<std::size_t>(order)));
    bool effective = true;
    for (long j = 0; j <= order; ++j) {
        ClassFunction cf;
        cf.values.resize(classes.size());
        for (std::size_t c = 0; c < classes.size(); ++c)
            cf.values[c] = expansions[c][static_cast<std::size_t>(j)];
        VirtualCharacter vc = decompose(cf, s.sym.table);
        if (!is_effective(vc)) effective = false;
        rep.coefficients.push_back(std::move(cf));
        rep.multiplicities.push_back(std::move(vc));
    }
    if (rep.is_polynomial) rep.is_effective = effective;
    return rep;
}

/// chi_{mP} as rational class functions for m = 0..order, computed from
/// fixed-point counts and cross-checked against the expansion of the reduced
/// per-class series. A mismatch is an internal error and aborts.
inline std::vector<ClassFunction> equivariant_series(const EquivariantSetup& s, long order) {
    auto classes = class_pipeline(s);
    const std::size_t nc = classes.size();
    std::vector<std::vector<Int>> counts(nc, std::vector<Int>(static_cast<std::size_t>(order) + 1));
    parallel_for(nc * static_cast<std::size_t>(order + 1), [&](std::size_t idx) {
        std::size_t c = idx / static_cast<std::size_t>(order + 1);
        long m = static_cast<long>(idx % static_cast<std::size_t>(order + 1));
        counts[c][static_cast<std::size_t>(m)] =
            classes[c].fixed.lattice_point_count(m);
    });
    for (std::size_t c = 0; c < nc; ++c) {
        QVec series = classes[c].fixed_series.expand(static_cast<std::size_t>(order));
        for (long m = 0; m <= order; ++m)
            if (series[static_cast<std::size_t>(m)] != Rat(counts[c][static_cast<std::size_t>(m)]))
                throw CrossCheckError(
                    "fixed-point count and series expansion disagree at class " +
                    s.sym.table.class_labels[c] + ", dilate " + std::to_string(m));
    }
    std::vector<ClassFunction> out(static_cast<std::size_t>(order) + 1);
    for (long m = 0; m <= order; ++m) {
        ClassFunction cf;
        cf.values.resize(nc);
        for (std::size_t c = 0; c < nc; ++c) cf.values[c] = Rat(counts[c][static_cast<std::size_t>(m)]);
        out[static_cast<std::size_t>(m)] = std::move(cf);
    }
    return out;
}

}  // namespace eqehr
