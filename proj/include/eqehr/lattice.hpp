#pragma once

#include <vector>

#include "eqehr/linalg.hpp"

namespace eqehr {

/// A full or partial-rank sublattice of Z^n, basis rows kept in canonical
/// Hermite echelon form.
struct Sublattice {
    std::size_t ambient_dim = 0;
    IMat basis;  ///< rank x ambient_dim, canonical HNF rows

    std::size_t rank() const { return basis.rows(); }

    /// Exact membership: x is an integer combination of the basis rows.
    bool contains(const IVec& x) const {
        return solve_integer(basis.transpose(), x).has_value();
    }

    /// Coordinates of x in the basis, when x lies in the rational span.
    std::optional<QVec> coordinates(const QVec& x) const {
        return solve_linear(to_qmat(basis.transpose()), x);
    }
};

inline Sublattice full_lattice(std::size_t n) {
    return {n, IMat::identity(n)};
}

inline Sublattice sublattice_from_rows(std::size_t ambient, const IMat& rows) {
    return {ambient, hnf_basis(rows)};
}

/// Saturated integer kernel of (A - I): the lattice of integer vectors fixed
/// by A.
inline Sublattice fixed_sublattice(const IMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("fixed_sublattice needs a square matrix");
    IMat d = a - IMat::identity(a.rows());
    return {a.rows(), integer_kernel(d)};
}

/// Decomposition data for a group-fixed lattice direction e:
/// a basis of the orthogonal complement of e inside Z^n under the
/// group-averaged inner product, and the index of the sublattice generated
/// by that complement together with e.
struct AffineDecomposition {
    IVec e;
    Sublattice orthogonal;  ///< basis of e-perp intersect Z^n (averaged inner product)
    Int index;              ///< [M : N], N = <e-perp cap M, e>
    IMat gram;              ///< |G| * averaged Gram matrix (integer)
    Int group_order;

    /// Height of x: the rational i with x in (i/index) e + e-perp.
    Rat height(const IVec& x) const {
        Rat xe = 0, ee = 0;
        QVec gx = to_qmat(gram).apply(to_qvec(x));
        QVec ge = to_qmat(gram).apply(to_qvec(e));
        for (std::size_t i = 0; i < e.size(); ++i) {
            xe += Rat(e[i]) * gx[i];
            ee += Rat(e[i]) * ge[i];
        }
        return Rat(index) * xe / ee;
    }

    /// Membership in the affine lattice M_i at height i.
    bool in_affine_lattice(const IVec& x, const Int& i) const {
        return height(x) == Rat(i);
    }
};

/// Build the decomposition for a fixed point e of the action given by the
/// full element list. Throws if e is not fixed by every element.
inline AffineDecomposition affine_decomposition(const std::vector<IMat>& elements,
                                                const IVec& e) {
    if (elements.empty()) throw std::invalid_argument("empty group");
    std::size_t n = e.size();
    bool e_zero = true;
    for (const auto& v : e)
        if (v != 0) e_zero = false;
    if (e_zero) throw std::invalid_argument("e must be nonzero");

    IMat gram(n, n);  // sum over g of g^T g; dividing by |G| gives the averaged form
    for (const auto& g : elements) {
        IVec ge = g.apply(e);
        if (ge != e) throw NotInvariantError("e is not fixed by the whole group");
        IMat gtg = g.transpose() * g;
        gram = gram + gtg;
    }

    // e-perp under <.,.>_G is the kernel of the single row e^T * gram
    IMat row(1, n);
    IVec ge = gram.apply(e);
    for (std::size_t j = 0; j < n; ++j) row(0, j) = ge[j];
    IMat perp = integer_kernel(row);
    if (perp.rows() != n - 1)
        throw std::logic_error("orthogonal complement has unexpected rank");

    IMat stacked(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(i, j) = perp(i, j);
    for (std::size_t j = 0; j < n; ++j) stacked(n - 1, j) = e[j];
    Rat det = determinant(to_qmat(stacked));
    Int index = abs(to_integer(det));

    AffineDecomposition out;
    out.e = e;
    out.orthogonal = Sublattice{n, perp};
    out.index = index;
    out.gram = gram;
    out.group_order = Int(elements.size());
    return out;
}

}  // namespace eqehr
