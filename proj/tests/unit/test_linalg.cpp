#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eqehr/linalg.hpp"

using namespace eqehr;

namespace {
IMat imat(const std::vector<std::vector<long>>& rows) {
    IMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}
}  // namespace

TEST_CASE("rational solve and nullspace") {
    QMat a(2, 3);
    a(0, 0) = 1; a(0, 1) = 1; a(0, 2) = 1;
    a(1, 0) = 0; a(1, 1) = 1; a(1, 2) = 2;
    auto x = solve_linear(a, QVec{6, 8});
    REQUIRE(x);
    CHECK(a.apply(*x) == QVec{6, 8});
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK(a.apply(ns[0]) == QVec{0, 0});

    QMat inconsistent(2, 1);
    inconsistent(0, 0) = 1;
    inconsistent(1, 0) = 1;
    CHECK_FALSE(solve_linear(inconsistent, QVec{1, 2}));
}

TEST_CASE("determinant") {
    QMat m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2;
    m(1, 0) = 3; m(1, 1) = 4;
    CHECK(determinant(m) == -2);
    CHECK(determinant(QMat::identity(5)) == 1);
}

TEST_CASE("hermite normal form is canonical") {
    IMat m = imat({{4, 0}, {1, 1}});
    IMat h = hnf(m);
    CHECK(h == imat({{1, 1}, {0, 4}}));
    auto [h2, u] = hnf_with_transform(imat({{4, 0}, {1, 1}}));
    CHECK(h2 == h);
    CHECK(u * m == h2);
    CHECK(abs(to_integer(determinant(to_qmat(u)))) == 1);
}

TEST_CASE("integer kernel is saturated") {
    // kernel of (2 2): contains (1,-1), not just (2,-2)
    IMat a = imat({{2, 2}});
    IMat k = integer_kernel(a);
    REQUIRE(k.rows() == 1);
    CHECK(abs(k(0, 0)) == 1);
    CHECK(k(0, 0) + k(0, 1) == 0);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        IMat m(2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = entry(rng);
        IMat ker = integer_kernel(m);
        for (std::size_t r = 0; r < ker.rows(); ++r) {
            IVec prod = m.apply(ker.row(r));
            for (const auto& v : prod) CHECK(v == 0);
        }
        // saturation: any integer vector in the rational span of the kernel
        // has integer coordinates in the kernel basis
        if (ker.rows() > 0) {
            IVec x(4, Int(0));
            for (std::size_t r = 0; r < ker.rows(); ++r)
                for (std::size_t j = 0; j < 4; ++j) x[j] += Int(static_cast<int>(r) + 1) * ker(r, j);
            CHECK(solve_integer(ker.transpose(), x).has_value());
        }
    }
}

TEST_CASE("integer linear systems") {
    IMat a = imat({{2, 0}, {0, 3}});
    auto x = solve_integer(a, IVec{4, 9});
    REQUIRE(x);
    CHECK(a.apply(*x) == IVec{4, 9});
    CHECK_FALSE(solve_integer(a, IVec{1, 0}));

    // underdetermined: x1 + x2 = 5
    IMat b = imat({{1, 1}});
    auto y = solve_integer(b, IVec{5});
    REQUIRE(y);
    CHECK((*y)[0] + (*y)[1] == 5);
}

TEST_CASE("saturation of generated lattices") {
    IMat g = imat({{2, 0, 0}, {0, 2, 2}});
    IMat s = saturate_rows(g);
    REQUIRE(s.rows() == 2);
    // (1,0,0) and (0,1,1) must lie in the saturation
    CHECK(solve_integer(s.transpose(), IVec{1, 0, 0}).has_value());
    CHECK(solve_integer(s.transpose(), IVec{0, 1, 1}).has_value());
    CHECK_FALSE(solve_integer(s.transpose(), IVec{0, 0, 1}).has_value());
}

TEST_CASE("convex combination feasibility") {
    std::vector<QVec> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(in_convex_hull(square, QVec{Rat(1) / 2, Rat(1) / 2}));
    CHECK(in_convex_hull(square, QVec{0, 0}));
    CHECK(in_convex_hull(square, QVec{1, Rat(1) / 3}));
    CHECK_FALSE(in_convex_hull(square, QVec{Rat(3) / 2, 0}));
    CHECK_FALSE(in_convex_hull(square, QVec{Rat(-1) / 100, Rat(1) / 2}));

    auto lambda = convex_combination(square, QVec{Rat(1) / 4, Rat(3) / 4});
    REQUIRE(lambda);
    Rat sum = 0;
    QVec combo(2, Rat(0));
    for (std::size_t i = 0; i < square.size(); ++i) {
        sum += (*lambda)[i];
        REQUIRE((*lambda)[i] >= 0);
        for (std::size_t j = 0; j < 2; ++j) combo[j] += (*lambda)[i] * square[i][j];
    }
    CHECK(sum == 1);
    CHECK(combo == QVec{Rat(1) / 4, Rat(3) / 4});
}

TEST_CASE("membership on a segment embedded in the plane") {
    std::vector<QVec> seg{{0, 0}, {2, 2}};
    CHECK(in_convex_hull(seg, QVec{1, 1}));
    CHECK_FALSE(in_convex_hull(seg, QVec{1, 0}));
    CHECK_FALSE(in_convex_hull(seg, QVec{3, 3}));
}
