#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "eqehr/linalg.hpp"
#include "eqehr/poly.hpp"

namespace eqehr {

/// A finite group of invertible integer matrices with its full multiplication
/// structure and conjugacy class partition. elements[0] is the identity.
struct FiniteMatrixGroup {
    std::size_t ambient_dim = 0;
    std::vector<IMat> elements;
    std::vector<std::vector<int>> product;   ///< product[i][j] = index of e_i * e_j
    std::vector<int> inverse;
    std::vector<std::vector<int>> classes;   ///< partition of element indices
    std::vector<int> class_of;               ///< element index -> class index
    std::vector<std::string> labels;         ///< optional element names

    std::size_t order() const { return elements.size(); }

    int element_order(int i) const {
        int k = 1, cur = i;
        while (cur != 0) {
            cur = product[static_cast<std::size_t>(cur)][static_cast<std::size_t>(i)];
            ++k;
        }
        return k;
    }

    long exponent() const {
        Int e = 1;
        for (std::size_t i = 0; i < elements.size(); ++i) e = lcm_int(e, element_order(static_cast<int>(i)));
        return e.convert_to<long>();
    }

    /// Representative (first element) of each conjugacy class.
    std::vector<int> class_representatives() const {
        std::vector<int> reps;
        reps.reserve(classes.size());
        for (const auto& c : classes) reps.push_back(c[0]);
        return reps;
    }
};

namespace detail {

inline std::vector<Int> mat_key(const IMat& m) {
    std::vector<Int> k;
    k.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
    return k;
}

/// Fill product and inverse tables for a complete element list with
/// elements[0] = identity.
inline void build_group_tables(FiniteMatrixGroup& g) {
    const std::size_t n = g.elements.size();
    std::map<std::vector<Int>, int> index;
    for (std::size_t i = 0; i < n; ++i) index[mat_key(g.elements[i])] = static_cast<int>(i);
    if (index.size() != n) throw std::invalid_argument("duplicate group elements");
    g.product.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto it = index.find(mat_key(g.elements[i] * g.elements[j]));
            if (it == index.end()) throw std::invalid_argument("element list is not closed");
            g.product[i][j] = it->second;
        }
    g.inverse.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.product[i][j] == 0) g.inverse[i] = static_cast<int>(j);
}

/// Conjugacy classes, ordered by their smallest element index.
inline void build_conjugacy_classes(FiniteMatrixGroup& g) {
    const std::size_t n = g.elements.size();
    g.class_of.assign(n, -1);
    g.classes.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (g.class_of[i] != -1) continue;
        std::vector<int> cls;
        int cid = static_cast<int>(g.classes.size());
        for (std::size_t h = 0; h < n; ++h) {
            int c = g.product[h][g.product[i][static_cast<std::size_t>(g.inverse[h])]];
            if (g.class_of[static_cast<std::size_t>(c)] == -1) {
                g.class_of[static_cast<std::size_t>(c)] = cid;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        g.classes.push_back(std::move(cls));
    }
}

inline void finish_group_structure(FiniteMatrixGroup& g) {
    build_group_tables(g);
    build_conjugacy_classes(g);
}

}  // namespace detail

/// Breadth-first closure of a generating set of invertible integer matrices.
/// Throws when the closure exceeds the bound (infinite or oversized group).
inline FiniteMatrixGroup group_closure(const std::vector<IMat>& generators,
                                       std::size_t bound = 20000) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    std::size_t n = generators[0].rows();
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator shape mismatch");
        Rat det = determinant(to_qmat(g));
        if (det != 1 && det != -1)
            throw std::invalid_argument("generator is not invertible over the integers");
    }
    FiniteMatrixGroup g;
    g.ambient_dim = n;
    std::map<std::vector<Int>, int> index;
    IMat id = IMat::identity(n);
    g.elements.push_back(id);
    index[detail::mat_key(id)] = 0;
    std::vector<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.back();
        queue.pop_back();
        for (const auto& gen : generators) {
            IMat next = g.elements[cur] * gen;
            auto key = detail::mat_key(next);
            if (index.count(key)) continue;
            if (g.elements.size() >= bound)
                throw std::invalid_argument("group closure exceeds bound of " +
                                            std::to_string(bound) + " elements");
            index[key] = static_cast<int>(g.elements.size());
            queue.push_back(g.elements.size());
            g.elements.push_back(std::move(next));
        }
    }
    detail::finish_group_structure(g);
    return g;
}

/// det(I - t*A), exact, via interpolation at n+1 rational nodes.
inline Poly det_factor(const IMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det_factor needs a square matrix");
    const std::size_t n = a.rows();
    std::vector<Int> nodes(n + 1);
    QVec values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        nodes[k] = Int(k);
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = -Rat(k) * Rat(a(i, j));
                if (i == j) m(i, j) += 1;
            }
        values[k] = determinant(std::move(m));
    }
    // Lagrange interpolation of the degree-<=n polynomial through the nodes
    Poly result;
    for (std::size_t k = 0; k <= n; ++k) {
        Poly basis = Poly::one();
        Rat scale = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == k) continue;
            basis *= Poly{-Rat(nodes[j]), 1};
            scale *= Rat(nodes[k] - nodes[j]);
        }
        result += (values[k] / scale) * basis;
    }
    return result;
}

}  // namespace eqehr
