#include <catch2/catch_amalgamated.hpp>

#include "eqehr/families.hpp"
#include "support/oracles.hpp"

using namespace eqehr;

TEST_CASE("cycle actions satisfy the dihedral relations") {
    for (unsigned d = 3; d <= 10; ++d) {
        auto c = cycle_action(d);  // relations are verified in the constructor
        CHECK(c.edges.size() == d);
        // s fixes one vertex for odd d, none for even d
        int fixed = 0;
        for (std::size_t v = 0; v < d; ++v)
            if (c.perm_s[v] == static_cast<int>(v)) ++fixed;
        CHECK(fixed == (d % 2 == 1 ? 1 : 0));
        // r maps w_0 to w_1
        CHECK(c.perm_r[static_cast<std::size_t>(c.w_index(0))] == c.w_index(1));
        // r fixes no vertex, and every edge maps to an edge under r and s
        std::set<std::pair<int, int>> edges;
        for (auto [a, b] : c.edges) edges.insert(std::minmax(a, b));
        for (const auto& perm : {c.perm_r, c.perm_s})
            for (auto [a, b] : c.edges)
                CHECK(edges.count(std::minmax(perm[static_cast<std::size_t>(a)],
                                              perm[static_cast<std::size_t>(b)])) == 1);
    }
    CHECK_THROWS_AS(cycle_action(2), std::invalid_argument);
}

TEST_CASE("symmetric edge polytope constructor") {
    auto hexagon = sep_cycle(3);
    CHECK(hexagon.vertices().size() == 6);
    CHECK(hexagon.affine_dim() == 2);

    auto seg = symmetric_edge_polytope(2, {{0, 1}});
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.contains(QVec{1, -1}));

    auto c4 = sep_cycle(4);
    CHECK(c4.vertices().size() == 8);
    CHECK(c4.affine_dim() == 3);

    CHECK_THROWS_AS(symmetric_edge_polytope(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_edge_polytope(3, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("rational cross-polytope constructor") {
    auto p = cross_polytope_rational(1, 2);
    std::vector<QVec> expect{{1, 0}, {-1, 0}, {0, Rat(1) / 2}, {0, -Rat(1) / 2}};
    CHECK(p == RationalPolytope::from_points(2, expect));

    auto q = cross_polytope_rational(3, 3);
    CHECK(q.vertices().size() == 6);
    CHECK(q.contains(QVec{0, 0, Rat(3) / 2}));

    CHECK_THROWS_AS(cross_polytope_rational(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(cross_polytope_rational(3, 1), std::invalid_argument);
}

TEST_CASE("cross-polytope membership form matches the facet list") {
    // sum_{i<d} |x_i| + (2/k)|x_d| <= 1, scaled by k: facet normals
    // (+-k, ..., +-k, +-2) with offset k
    for (auto [k, d] : std::vector<std::pair<long, unsigned>>{{1, 2}, {3, 3}}) {
        auto p = cross_polytope_rational(k, d);
        const auto& hs = p.halfspaces();
        CHECK(hs.size() == (1u << d));
        for (const auto& h : hs) {
            CHECK(h.offset == k);
            for (unsigned i = 0; i + 1 < d; ++i) CHECK(abs(h.normal[i]) == k);
            CHECK(abs(h.normal[d - 1]) == 2);
        }
    }
}

TEST_CASE("cycle h* closed form with internal cross-checks") {
    CHECK(ohsugi_h(3) == Poly{1, 4, 1});
    CHECK(ohsugi_h(4) == Poly{1, 5, 5, 1});
    CHECK(ohsugi_h(5) == Poly{1, 6, 16, 6, 1});
    CHECK(ohsugi_h(6) == Poly{1, 7, 22, 22, 7, 1});
    // middle coefficient 2^{d-1} for odd d
    CHECK(ohsugi_h(7).coeff(3) == Rat(64));
    CHECK_THROWS_AS(ohsugi_h(2), std::invalid_argument);
}

TEST_CASE("h* equals the enumerated values for small cycles") {
    for (unsigned d = 3; d <= 6; ++d)
        CHECK(ehrhart(sep_cycle(d)).hstar == ohsugi_h(d));
}

TEST_CASE("prime-cycle closed form") {
    auto rows = prime_cycle_hstar(3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].psi1 == 1);
    CHECK(rows[0].psi2 == 0);
    CHECK(rows[0].chi == 0);
    CHECK(rows[1].psi1 == 1);
    CHECK(rows[1].psi2 == 1);
    CHECK(rows[1].chi == 1);
    CHECK(rows[2].psi1 == 1);
    CHECK(rows[2].psi2 == 0);
    CHECK(rows[2].chi == 0);

    // identity evaluation: psi1 + psi2 + (p-1) chi must give back h*
    for (unsigned p : {3u, 5u, 7u}) {
        auto r = prime_cycle_hstar(p);
        Poly h = ohsugi_h(p);
        for (unsigned j = 0; j < p; ++j)
            CHECK(Rat(r[j].psi1 + r[j].psi2 + Int(p - 1) * r[j].chi) == h.coeff(j));
        CHECK(r[0].psi1 == 1);  // constant coefficient is the trivial character
        CHECK(r[0].psi2 == 0);
        CHECK(r[0].chi == 0);
    }
    CHECK_THROWS_AS(prime_cycle_hstar(9), std::invalid_argument);
    CHECK_THROWS_AS(prime_cycle_hstar(4), std::invalid_argument);
}

TEST_CASE("order-two closed form for cycles") {
    auto r3 = reflection_cycle_hstar(3);
    CHECK(r3[0].chi1 == 1);
    CHECK(r3[0].chi2 == 0);
    CHECK(r3[1].chi1 == 2);
    CHECK(r3[1].chi2 == 2);
    CHECK(r3[2].chi1 == 1);
    CHECK(r3[2].chi2 == 0);

    auto r4 = reflection_cycle_hstar(4);
    IVec a, b;
    for (const auto& row : r4) {
        a.push_back(row.chi1);
        b.push_back(row.chi2);
    }
    CHECK(a == IVec{1, 3, 3, 1});
    CHECK(b == IVec{0, 2, 2, 0});

    // the reflection evaluation (1+t)^b (1+t^2)^l has degree d-1
    for (unsigned d = 3; d <= 8; ++d) {
        CHECK(reflection_g_poly(d).degree() == static_cast<int>(d) - 1);
        CHECK(reflection_g_poly(d).coeff(0) == 1);
    }
    CHECK(reflection_g_poly(3) == Poly{1, 0, 1});
}

TEST_CASE("cross-polytope reflection coefficients") {
    auto r = cross_reflection_coeffs(1, 2);
    IVec a, b;
    for (const auto& row : r) {
        a.push_back(row.a);
        b.push_back(row.b);
    }
    CHECK(a == IVec{1, 1, 1});
    CHECK(b == IVec{0, -1, 0});

    for (auto [k, d] : std::vector<std::pair<long, unsigned>>{{1, 3}, {3, 2}, {5, 4}}) {
        auto rows = cross_reflection_coeffs(k, d);
        CHECK(rows[0].a == 1);
        CHECK(rows[0].b == 0);
    }
    CHECK_THROWS_AS(cross_reflection_coeffs(2, 3), std::invalid_argument);
}

TEST_CASE("coefficient inequality margins") {
    auto rec = cycle_inequality_check(5);
    // j = 0: equality; j = 2: 16 >= 5(2-1)+1 = 6
    CHECK(rec[0].margin == 0);
    CHECK(rec[1].j == 2);
    CHECK(rec[1].h == 16);
    CHECK(rec[1].bound == 6);
    CHECK(rec[1].margin == 10);
    for (const auto& row : cycle_inequality_check(7)) CHECK(row.margin >= 0);
    CHECK_THROWS_AS(cycle_inequality_check(4), std::invalid_argument);
}

TEST_CASE("closed-form series") {
    auto s1 = half_cross_slice_series(1);
    CHECK(rf_expand(s1, 5) == QVec{1, 1, 3, 3, 5, 5});
    CHECK(cross_family_series(1, 3) ==
          rf_reduce(Poly{1, 0, 1} * Poly{1, 1}, one_minus_tn_pow(1, 4)));
    for (long k : {1L, 3L, 5L})
        CHECK(cross_family_series(k, 2) == rf_reduce(Poly{1, Rat(k - 1), Rat(k)}, one_minus_tn_pow(1, 3)));
}

TEST_CASE("reflection fixed polytopes of cycles match the closed-form series") {
    // ehr(P^s) for C_{2l+1} and C_{2l+2} both equal the l-fold slice series
    for (unsigned ell = 1; ell <= 3; ++ell) {
        auto odd = sep_cycle_setup(2 * ell + 1, SepGroup::s_only);
        auto even = sep_cycle_setup(2 * ell + 2, SepGroup::s_only);
        auto odd_series = ehrhart(fixed_polytope(odd, 1)).series;
        auto even_series = ehrhart(fixed_polytope(even, 1)).series;
        CHECK(odd_series == half_cross_slice_series(ell));
        CHECK(even_series == half_cross_slice_series(ell));
    }
}

TEST_CASE("free-sum route reproduces the cross-polytope series") {
    for (long k : {1L, 3L}) {
        for (unsigned d : {2u, 3u, 4u}) {
            auto seg = RationalPolytope::from_points(1, {{Rat(k) / 2}, {-Rat(k) / 2}});
            RationalPolytope sum =
                d == 2 ? free_sum(seg, standard_cross_polytope(1))
                       : free_sum(seg, standard_cross_polytope(d - 1));
            CHECK(ehrhart(sum).series == cross_family_series(k, d));
        }
    }
}

TEST_CASE("lattice polytope with the same point counts as the rational slice") {
    // Conv{e1,e2,e3,-e1-e2-e3} (+) cube sections
    auto s = RationalPolytope::from_points(
        3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    for (unsigned d : {3u, 4u}) {
        RationalPolytope q = d == 3 ? s : free_sum(s, standard_cross_polytope(d - 3));
        CHECK(ehrhart(q).series == ehrhart(cross_polytope_rational(1, d)).series);
    }
}
