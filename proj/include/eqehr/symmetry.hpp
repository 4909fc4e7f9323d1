#pragma once

#include <string>
#include <vector>

#include "eqehr/character.hpp"
#include "eqehr/group.hpp"

namespace eqehr {

/// A finite matrix group together with a character table whose columns are
/// aligned with the group's conjugacy class partition (class i of the group
/// is column i of the table).
struct SymmetryGroup {
    FiniteMatrixGroup group;
    CharacterTable table;
};

namespace detail {
inline void check_alignment(const SymmetryGroup& s) {
    if (s.group.classes.size() != s.table.class_count())
        throw std::logic_error("class count does not match the character table");
    for (std::size_t c = 0; c < s.group.classes.size(); ++c)
        if (Int(s.group.classes[c].size()) != s.table.class_sizes[c])
            throw std::logic_error("class sizes do not match the character table");
    if (Int(s.group.order()) != s.table.group_order)
        throw std::logic_error("group order does not match the character table");
}
}  // namespace detail

inline SymmetryGroup trivial_symmetry(std::size_t dim) {
    FiniteMatrixGroup g;
    g.ambient_dim = dim;
    g.elements.push_back(IMat::identity(dim));
    g.labels.push_back("1");
    detail::finish_group_structure(g);
    SymmetryGroup s{std::move(g), char_table_cyclic(1)};
    detail::check_alignment(s);
    return s;
}

/// Cyclic group generated by one matrix of exact order n.
inline SymmetryGroup cyclic_symmetry(const IMat& gen, unsigned n) {
    if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
    FiniteMatrixGroup g;
    g.ambient_dim = gen.rows();
    IMat cur = IMat::identity(gen.rows());
    for (unsigned k = 0; k < n; ++k) {
        g.elements.push_back(cur);
        g.labels.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
        cur = cur * gen;
    }
    if (cur != IMat::identity(gen.rows()))
        throw std::invalid_argument("generator does not have order " + std::to_string(n));
    detail::finish_group_structure(g);  // duplicate detection catches smaller order
    SymmetryGroup s{std::move(g), char_table_cyclic(n)};
    detail::check_alignment(s);
    return s;
}

/// Dihedral group of order 2d from labeled generators: elements are
/// r^b (indices 0..d-1) then s r^b (indices d..2d-1). The defining relations
/// s^2 = r^d = (sr)^2 = 1 are verified, not assumed.
inline SymmetryGroup dihedral_symmetry(const IMat& r, const IMat& s, unsigned d) {
    if (d < 1) throw std::invalid_argument("dihedral group needs d >= 1");
    std::size_t n = r.rows();
    IMat id = IMat::identity(n);
    if (s * s != id) throw std::invalid_argument("s^2 != 1");
    if ((s * r) * (s * r) != id) throw std::invalid_argument("(sr)^2 != 1");
    FiniteMatrixGroup g;
    g.ambient_dim = n;
    IMat cur = id;
    for (unsigned b = 0; b < d; ++b) {
        g.elements.push_back(cur);
        g.labels.push_back(b == 0 ? "1" : (b == 1 ? "r" : "r^" + std::to_string(b)));
        cur = cur * r;
    }
    if (cur != id) throw std::invalid_argument("r does not have order " + std::to_string(d));
    cur = s;
    for (unsigned b = 0; b < d; ++b) {
        g.elements.push_back(cur);
        g.labels.push_back(b == 0 ? "s" : (b == 1 ? "s*r" : "s*r^" + std::to_string(b)));
        cur = cur * r;
    }
    detail::finish_group_structure(g);
    SymmetryGroup sym{std::move(g), char_table_dihedral(d)};
    detail::check_alignment(sym);
    return sym;
}

/// Internal direct product of two commuting matrix subgroups with trivial
/// intersection. Elements, classes and table rows are lexicographic pairs
/// with the second factor varying fastest.
inline SymmetryGroup product_symmetry(const SymmetryGroup& a, const SymmetryGroup& b) {
    if (a.group.ambient_dim != b.group.ambient_dim)
        throw std::invalid_argument("product factors act on different spaces");
    FiniteMatrixGroup g;
    g.ambient_dim = a.group.ambient_dim;
    for (std::size_t i = 0; i < a.group.order(); ++i)
        for (std::size_t j = 0; j < b.group.order(); ++j) {
            if (a.group.elements[i] * b.group.elements[j] !=
                b.group.elements[j] * a.group.elements[i])
                throw std::invalid_argument("product factors do not commute");
            g.elements.push_back(a.group.elements[i] * b.group.elements[j]);
            g.labels.push_back(a.group.labels[i] + "," + b.group.labels[j]);
        }
    detail::build_group_tables(g);  // rejects duplicates = nontrivial intersection
    // classes are products of factor classes, ordered like the product table
    g.class_of.assign(g.elements.size(), -1);
    for (std::size_t ca = 0; ca < a.group.classes.size(); ++ca)
        for (std::size_t cb = 0; cb < b.group.classes.size(); ++cb) {
            std::vector<int> cls;
            for (int ia : a.group.classes[ca])
                for (int ib : b.group.classes[cb]) {
                    int idx = static_cast<int>(static_cast<std::size_t>(ia) * b.group.order() +
                                               static_cast<std::size_t>(ib));
                    cls.push_back(idx);
                    g.class_of[static_cast<std::size_t>(idx)] =
                        static_cast<int>(g.classes.size());
                }
            std::sort(cls.begin(), cls.end());
            g.classes.push_back(std::move(cls));
        }
    SymmetryGroup s{std::move(g), char_table_product(a.table, b.table)};
    detail::check_alignment(s);
    return s;
}

/// Group from arbitrary generators plus a user-supplied table. The classes
/// of the closure are matched to the table's columns through the supplied
/// class representatives; the table itself is validated by orthogonality.
inline SymmetryGroup custom_symmetry(const std::vector<IMat>& generators, CharacterTable table,
                                     const std::vector<IMat>& class_reps) {
    FiniteMatrixGroup closure = group_closure(generators);
    if (class_reps.size() != closure.classes.size())
        throw std::invalid_argument("need one class representative per conjugacy class");
    verify_character_table(table);
    // reorder the closure's classes to the representative order
    std::vector<int> order;
    for (const auto& rep : class_reps) {
        int found = -1;
        for (std::size_t i = 0; i < closure.elements.size(); ++i)
            if (closure.elements[i] == rep) {
                found = closure.class_of[i];
                break;
            }
        if (found == -1) throw std::invalid_argument("class representative not in the group");
        order.push_back(found);
    }
    std::vector<int> seen(closure.classes.size(), 0);
    for (int c : order) seen[static_cast<std::size_t>(c)] += 1;
    for (int s : seen)
        if (s != 1) throw std::invalid_argument("class representatives do not cover every class");
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of(closure.elements.size());
    for (int c : order) {
        for (int e : closure.classes[static_cast<std::size_t>(c)])
            class_of[static_cast<std::size_t>(e)] = static_cast<int>(classes.size());
        classes.push_back(closure.classes[static_cast<std::size_t>(c)]);
    }
    closure.classes = std::move(classes);
    closure.class_of = std::move(class_of);
    SymmetryGroup s{std::move(closure), std::move(table)};
    detail::check_alignment(s);
    return s;
}

}  // namespace eqehr
