#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eqehr/ratfun.hpp"
#include "eqehr/rational.hpp"

using namespace eqehr;

TEST_CASE("reduction cancels common factors and normalizes the denominator") {
    // (1 - t^2)/(1 - t) = 1 + t
    auto f = rf_reduce(Poly{1, 0, -1}, Poly{1, -1});
    CHECK(f.num() == Poly{1, 1});
    CHECK(f.den() == Poly::one());
    CHECK(f.is_polynomial());

    // ((1+t^2)(1-t)(1-t^2)) / ((1-t)(1-t^2)) = 1 + t^2
    Poly one_t{1, -1}, one_t2{1, 0, -1}, one_plus_t2{1, 0, 1};
    auto g = rf_reduce(one_plus_t2 * one_t * one_t2, one_t * one_t2);
    CHECK(g.num() == one_plus_t2);
    CHECK(g.den() == Poly::one());

    // (1 - t^p)/(1 - t) = 1 + t + ... + t^{p-1}
    const unsigned p = 5;
    auto h = rf_reduce(one_minus_tn_pow(p, 1), one_t);
    CHECK(h.num() == geometric_sum(p));
}

TEST_CASE("reduction is invariant under common factors") {
    std::mt19937 rng(20240811);
    auto random_poly = [&](int maxdeg) {
        std::uniform_int_distribution<int> coeff(-3, 3);
        std::uniform_int_distribution<int> deg(0, maxdeg);
        QVec c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        return Poly(std::move(c));
    };
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(4);
        Poly q = random_poly(3);
        if (q.coeff(0) == 0) q += Poly::one();  // keep q(0) nonzero
        unsigned k = 1 + static_cast<unsigned>(trial % 3);
        Poly d = one_minus_tn_pow(1, k);
        auto lhs = rf_reduce(p * q, q * d).expand(50);
        auto rhs = rf_reduce(p, d).expand(50);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("series expansion by linear recurrence") {
    auto geo = rf_reduce(Poly::one(), Poly{1, -1}).expand(4);
    CHECK(geo == QVec{1, 1, 1, 1, 1});

    // 1/(1-t)^4 counts simplex dilates: coefficient m is C(m+3, 3)
    auto simplex = rf_reduce(Poly::one(), one_minus_tn_pow(1, 4)).expand(3);
    for (long m = 0; m <= 3; ++m)
        CHECK(simplex[static_cast<std::size_t>(m)] == Rat(binomial(m + 3, 3)));

    // (1+t^2)/((1-t)(1-t^2)) counts integers in [-m/2, m/2]
    auto half = rf_reduce(Poly{1, 0, 1}, Poly{1, -1} * Poly{1, 0, -1}).expand(5);
    for (long m = 0; m <= 5; ++m) {
        long direct = 0;
        for (long x = -m; x <= m; ++x)
            if (2 * std::abs(x) <= m) ++direct;
        CHECK(half[static_cast<std::size_t>(m)] == Rat(direct));
    }
}

TEST_CASE("standard denominators expand to nonnegative integers") {
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned d = 1; d <= 4; ++d) {
            auto c = rf_reduce(Poly::one(), one_minus_tn_pow(n, d)).expand(30);
            for (const auto& v : c) {
                CHECK(is_integer(v));
                CHECK(v >= 0);
            }
        }
}

TEST_CASE("bad denominators are rejected") {
    CHECK_THROWS_AS(rf_reduce(Poly{1}, Poly()), std::domain_error);
    CHECK_THROWS_AS(rf_reduce(Poly{1}, Poly{0, 1}), std::domain_error);
}

TEST_CASE("structural equality is semantic equality of reduced forms") {
    auto a = rf_reduce(Poly{1, 1}, Poly{1, -1});
    auto b = rf_reduce(Poly{2, 2}, Poly{2, -2});
    auto c = rf_reduce(Poly{1, 2, 1}, Poly{1, 0, -1});
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a != rf_reduce(Poly{1}, Poly{1, -1}));
}
