#pragma once

#include <string>
#include <vector>

#include "eqehr/cyclotomic.hpp"
#include "eqehr/group.hpp"

namespace eqehr {

/// Exact character table: rows are irreducible characters with cyclotomic
/// values, columns are conjugacy classes. The first row is always the
/// trivial character and the first class the identity.
struct CharacterTable {
    Int group_order = 1;
    long exponent = 1;
    std::vector<Int> class_sizes;
    std::vector<std::string> class_labels;
    std::vector<std::string> row_labels;
    std::vector<std::vector<CycloNum>> rows;

    std::size_t class_count() const { return class_sizes.size(); }
    std::size_t row_count() const { return rows.size(); }
};

/// Function on conjugacy classes with rational values (all class functions
/// in this artifact arise from lattice point counts).
struct ClassFunction {
    QVec values;

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.values == b.values;
    }
};

/// Z-linear combination of the irreducible characters of a fixed table.
struct VirtualCharacter {
    IVec mult;

    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
        return a.mult == b.mult;
    }
};

inline bool is_effective(const VirtualCharacter& v) {
    for (const auto& m : v.mult)
        if (m < 0) return false;
    return true;
}

/// Sum of mult[i] * chi_i with exact cyclotomic values (virtual characters
/// of dihedral groups are usually irrational on rotation classes).
inline std::vector<CycloNum> reconstruct_values(const VirtualCharacter& v,
                                                const CharacterTable& t) {
    if (v.mult.size() != t.row_count()) throw std::invalid_argument("multiplicity count mismatch");
    std::vector<CycloNum> values(t.class_count());
    for (std::size_t c = 0; c < t.class_count(); ++c) {
        CycloNum acc = 0;
        for (std::size_t i = 0; i < t.row_count(); ++i)
            acc += CycloNum(Rat(v.mult[i])) * t.rows[i][c];
        values[c] = acc;
    }
    return values;
}

/// Sum of mult[i] * chi_i as a rational class function; NonRationalError
/// when the combination leaves the rationals.
inline ClassFunction reconstruct(const VirtualCharacter& v, const CharacterTable& t) {
    ClassFunction f;
    for (const auto& x : reconstruct_values(v, t)) f.values.push_back(x.to_rational());
    return f;
}

/// Multiplicities m_i = (1/|G|) sum_c |c| f(c) conj(chi_i(c)), computed in
/// exact cyclotomic arithmetic. Rationality and integrality are enforced and
/// the reconstruction is re-verified, so a successful return really is the
/// decomposition of f.
inline VirtualCharacter decompose_values(const std::vector<CycloNum>& values,
                                         const CharacterTable& t) {
    if (values.size() != t.class_count())
        throw std::invalid_argument("class function does not match the table's classes");
    VirtualCharacter v;
    v.mult.resize(t.row_count());
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        CycloNum acc = 0;
        for (std::size_t c = 0; c < t.class_count(); ++c)
            acc += CycloNum(Rat(t.class_sizes[c])) * values[c] * t.rows[i][c].conjugate();
        Rat m = acc.to_rational() / Rat(t.group_order);
        if (!is_integer(m))
            throw NonIntegralError("multiplicity of " + t.row_labels[i] +
                                   " is not an integer: " + rat_to_string(m));
        v.mult[i] = numer_of(m);
    }
    if (!(reconstruct_values(v, t) == values))
        throw NonIntegralError("class function is not a virtual character of this table");
    return v;
}

inline VirtualCharacter decompose(const ClassFunction& f, const CharacterTable& t) {
    std::vector<CycloNum> values;
    values.reserve(f.values.size());
    for (const auto& x : f.values) values.emplace_back(x);
    return decompose_values(values, t);
}

/// Inner product of two rows, used by the orthogonality checks.
inline CycloNum table_inner(const CharacterTable& t, std::size_t i, std::size_t j) {
    CycloNum acc = 0;
    for (std::size_t c = 0; c < t.class_count(); ++c)
        acc += CycloNum(Rat(t.class_sizes[c])) * t.rows[i][c] * t.rows[j][c].conjugate();
    return acc * CycloNum(Rat(1) / Rat(t.group_order));
}

/// Exact validation: sizes sum to |G|, first row trivial, row orthonormality,
/// and sum of squared dimensions equal to |G|.
inline void verify_character_table(const CharacterTable& t) {
    Int size_sum = 0;
    for (const auto& s : t.class_sizes) size_sum += s;
    if (size_sum != t.group_order)
        throw CrossCheckError("class sizes do not sum to the group order");
    Int dim2 = 0;
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        Rat d = t.rows[i][0].to_rational();
        dim2 += numer_of(d) * numer_of(d);
    }
    if (dim2 != t.group_order)
        throw CrossCheckError("squared dimensions do not sum to the group order");
    for (std::size_t c = 0; c < t.class_count(); ++c)
        if (t.rows[0][c].to_rational() != 1)
            throw CrossCheckError("first row is not the trivial character");
    for (std::size_t i = 0; i < t.row_count(); ++i)
        for (std::size_t j = i; j < t.row_count(); ++j) {
            CycloNum ip = table_inner(t, i, j);
            Rat expect = i == j ? 1 : 0;
            if (!ip.is_rational() || ip.to_rational() != expect)
                throw CrossCheckError("rows " + t.row_labels[i] + ", " + t.row_labels[j] +
                                      " are not orthonormal");
        }
}

// ---------------------------------------------------------------------------
// Built-in tables: cyclic, dihedral, direct products
// ---------------------------------------------------------------------------

/// Cyclic group of order n: classes g^k in order, rows chi_{j+1}(g^k) = zeta^{jk}.
inline CharacterTable char_table_cyclic(unsigned n) {
    if (n < 1) throw std::invalid_argument("cyclic table needs n >= 1");
    CharacterTable t;
    t.group_order = n;
    t.exponent = n;
    t.class_sizes.assign(n, Int(1));
    for (unsigned k = 0; k < n; ++k)
        t.class_labels.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
    for (unsigned j = 0; j < n; ++j) {
        t.row_labels.push_back("chi" + std::to_string(j + 1));
        std::vector<CycloNum> row;
        for (unsigned k = 0; k < n; ++k)
            row.push_back(CycloNum::zeta_pow(n, static_cast<long>(j) * k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Dihedral group of order 2d, presentation <r, s | s^2 = r^d = (sr)^2 = 1>.
/// Classes in order: 1, r, ..., r^floor(d/2), then one reflection class for
/// odd d or the two reflection classes [s], [sr] for even d.
inline CharacterTable char_table_dihedral(unsigned d) {
    if (d < 1) throw std::invalid_argument("dihedral table needs d >= 1");
    CharacterTable t;
    t.group_order = 2 * d;
    t.exponent = static_cast<long>(lcm_int(d, 2).convert_to<unsigned long>());
    const bool even = d % 2 == 0;
    const unsigned half = d / 2;

    t.class_labels.push_back("1");
    t.class_sizes.push_back(1);
    for (unsigned k = 1; k <= (even ? half - 1 : half); ++k) {
        t.class_labels.push_back(k == 1 ? "r" : "r^" + std::to_string(k));
        t.class_sizes.push_back(2);
    }
    if (even) {
        t.class_labels.push_back("r^" + std::to_string(half));
        t.class_sizes.push_back(1);
    }
    t.class_labels.push_back("s");
    t.class_sizes.push_back(even ? half : d);
    if (even) {
        t.class_labels.push_back("s*r");
        t.class_sizes.push_back(half);
    }

    // linear characters: value on_r^k at [r^k], on_r^k * on_s at reflections
    auto push_linear = [&](const std::string& name, int on_r, int on_s) {
        t.row_labels.push_back(name);
        std::vector<CycloNum> row;
        for (unsigned k = 0; k <= half; ++k)
            row.push_back(CycloNum(Rat(k % 2 == 0 ? 1 : on_r)));
        row.push_back(CycloNum(Rat(on_s)));                   // class [s]
        if (even) row.push_back(CycloNum(Rat(on_r * on_s)));  // class [s r]
        t.rows.push_back(std::move(row));
    };
    push_linear("psi1", 1, 1);
    push_linear("psi2", 1, -1);
    if (even) {
        push_linear("psi3", -1, 1);
        push_linear("psi4", -1, -1);
    }
    // two-dimensional characters chi_j(r^k) = zeta^{jk} + zeta^{-jk}
    const unsigned jmax = even ? half - 1 : half;
    for (unsigned j = 1; j <= jmax; ++j) {
        t.row_labels.push_back("chi" + std::to_string(j));
        std::vector<CycloNum> row;
        for (unsigned k = 0; k <= half; ++k)
            row.push_back(CycloNum::zeta_pow(d, static_cast<long>(j) * k) +
                          CycloNum::zeta_pow(d, -static_cast<long>(j) * k));
        row.push_back(CycloNum(Rat(0)));
        if (even) row.push_back(CycloNum(Rat(0)));
        t.rows.push_back(std::move(row));
    }
    if (t.rows.size() != t.class_count())
        throw std::logic_error("dihedral table is not square");
    return t;
}

/// Direct product table: rows and classes are lexicographic pairs, the
/// second factor varying fastest. Values multiply.
inline CharacterTable char_table_product(const CharacterTable& a, const CharacterTable& b) {
    CharacterTable t;
    t.group_order = a.group_order * b.group_order;
    t.exponent = static_cast<long>(lcm_int(a.exponent, b.exponent).convert_to<unsigned long>());
    for (std::size_t ca = 0; ca < a.class_count(); ++ca)
        for (std::size_t cb = 0; cb < b.class_count(); ++cb) {
            t.class_sizes.push_back(a.class_sizes[ca] * b.class_sizes[cb]);
            t.class_labels.push_back(a.class_labels[ca] + "," + b.class_labels[cb]);
        }
    for (std::size_t ra = 0; ra < a.row_count(); ++ra)
        for (std::size_t rb = 0; rb < b.row_count(); ++rb) {
            t.row_labels.push_back(a.row_labels[ra] + "*" + b.row_labels[rb]);
            std::vector<CycloNum> row;
            for (std::size_t ca = 0; ca < a.class_count(); ++ca)
                for (std::size_t cb = 0; cb < b.class_count(); ++cb)
                    row.push_back(a.rows[ra][ca] * b.rows[rb][cb]);
            t.rows.push_back(std::move(row));
        }
    return t;
}

}  // namespace eqehr
