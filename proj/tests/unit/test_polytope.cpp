#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "eqehr/families.hpp"
#include "eqehr/polytope.hpp"
#include "support/oracles.hpp"

using namespace eqehr;

namespace {
RationalPolytope simplex4() {
    std::vector<QVec> v;
    for (int i = 0; i < 4; ++i) {
        QVec e(4, Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        v.push_back(e);
    }
    return RationalPolytope::from_points(4, v);
}

bool has_halfspace(const std::vector<Halfspace>& hs, std::vector<long> normal, long offset) {
    for (const auto& h : hs) {
        if (h.offset != offset) continue;
        bool same = h.normal.size() == normal.size();
        for (std::size_t i = 0; same && i < normal.size(); ++i)
            if (h.normal[i] != normal[i]) same = false;
        if (same) return true;
    }
    return false;
}
}  // namespace

TEST_CASE("vertex filtering drops interior and redundant points") {
    std::vector<QVec> pts{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {2, 0}};
    auto p = RationalPolytope::from_points(2, pts);
    CHECK(p.vertices().size() == 4);
    CHECK(p.affine_dim() == 2);
}

TEST_CASE("facets of the rational cross-polytope slice") {
    auto p = cross_polytope_rational(1, 2);
    auto& hs = p.halfspaces();
    REQUIRE(hs.size() == 4);
    CHECK(has_halfspace(hs, {1, 2}, 1));
    CHECK(has_halfspace(hs, {1, -2}, 1));
    CHECK(has_halfspace(hs, {-1, 2}, 1));
    CHECK(has_halfspace(hs, {-1, -2}, 1));
}

TEST_CASE("facets of the square and the standard simplex") {
    auto sq = RationalPolytope::from_points(
        2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    auto& hs = sq.halfspaces();
    REQUIRE(hs.size() == 4);
    CHECK(has_halfspace(hs, {1, 0}, 1));
    CHECK(has_halfspace(hs, {0, -1}, 1));

    auto sx = RationalPolytope::from_points(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto& hs2 = sx.halfspaces();
    REQUIRE(hs2.size() == 4);
    CHECK(has_halfspace(hs2, {-1, 0, 0}, 0));
    CHECK(has_halfspace(hs2, {1, 1, 1}, 1));
}

TEST_CASE("facet enumeration requires full dimension") {
    auto seg = RationalPolytope::from_points(2, {{0, 0}, {1, 1}});
    CHECK_THROWS_AS(seg.halfspaces(), std::invalid_argument);
}

TEST_CASE("hull soundness") {
    auto p = sep_cycle(3);
    IMat row(1, 3);
    for (int j = 0; j < 3; ++j) row(0, j) = 1;
    auto r = restrict_to_sublattice(p, Sublattice{3, integer_kernel(row)});
    const auto& hs = r.halfspaces();
    // every vertex tight on at least affine_dim facets
    for (const auto& v : r.vertices()) {
        int tight = 0;
        for (const auto& h : hs) {
            Rat dot = 0;
            for (std::size_t j = 0; j < v.size(); ++j) dot += Rat(h.normal[j]) * v[j];
            REQUIRE(dot <= h.offset);
            if (dot == h.offset) ++tight;
        }
        CHECK(tight >= r.affine_dim());
    }
    // random rational points: halfspace membership == convex-combination LP
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-8, 8);
    for (int trial = 0; trial < 60; ++trial) {
        QVec x{Rat(num(rng)) / 4, Rat(num(rng)) / 4};
        bool by_halfspaces = true;
        for (const auto& h : hs) {
            Rat dot = 0;
            for (std::size_t j = 0; j < x.size(); ++j) dot += Rat(h.normal[j]) * x[j];
            if (dot > h.offset) by_halfspaces = false;
        }
        CHECK(by_halfspaces == in_convex_hull(r.vertices(), x));
    }
}

TEST_CASE("lattice point counts against the box-scan oracle") {
    auto sx = simplex4();
    CHECK(sx.lattice_point_count(0) == 1);
    CHECK(sx.lattice_point_count(2) == 10);  // C(5,3)
    for (long m = 0; m <= 5; ++m)
        CHECK(sx.lattice_point_count(m) == binomial(m + 3, 3));

    auto c3 = sep_cycle(3);
    CHECK(c3.lattice_point_count(1) == 7);
    for (long m = 0; m <= 4; ++m)
        CHECK(c3.lattice_point_count(m) == oracles::box_scan_count(c3, m));

    auto p12 = cross_polytope_rational(1, 2);
    CHECK(p12.lattice_point_count(1) == 3);
    for (long m = 0; m <= 8; ++m)
        CHECK(p12.lattice_point_count(m) == oracles::box_scan_count(p12, m));
}

TEST_CASE("count symmetry for centrally symmetric polytopes") {
    for (auto p : {sep_cycle(4), cross_polytope_rational(3, 2)}) {
        for (long m = 1; m <= 3; ++m) {
            auto pts = p.lattice_points(m);
            std::set<IVec> set(pts.begin(), pts.end());
            CHECK(pts.size() == set.size());
            for (const auto& x : pts) {
                IVec neg(x.size());
                for (std::size_t j = 0; j < x.size(); ++j) neg[j] = -x[j];
                CHECK(set.count(neg) == 1);
            }
        }
    }
}

TEST_CASE("dilation consistency") {
    auto p = cross_polytope_rational(3, 2);
    for (long m = 1; m <= 6; ++m)
        CHECK(p.lattice_point_count(m) == p.dilate(m).lattice_point_count(1));
    auto c4 = sep_cycle(4);
    for (long m = 1; m <= 4; ++m)
        CHECK(c4.lattice_point_count(m) == c4.dilate(m).lattice_point_count(1));
}

TEST_CASE("denominators") {
    CHECK(cross_polytope_rational(1, 2).denominator() == 2);
    CHECK(cross_polytope_rational(3, 3).denominator() == 2);
    CHECK(sep_cycle(5).denominator() == 1);
    auto p = RationalPolytope::from_points(2, {{Rat(1) / 3, 0}, {0, Rat(1) / 2}});
    CHECK(p.denominator() == 6);
    // free-function spellings
    CHECK(denominator(p) == 6);
    CHECK(lattice_point_count(p, 0) == 1);
    CHECK(hull_halfspaces(cross_polytope_rational(1, 2)).size() == 4);
}

TEST_CASE("lower-dimensional counting via re-coordinatization") {
    // segment from (1,1) to (-1,-1): dilate m holds 2m+1 diagonal points
    auto seg = RationalPolytope::from_points(2, {{1, 1}, {-1, -1}});
    for (long m = 0; m <= 5; ++m)
        CHECK(seg.lattice_point_count(m) == 2 * m + 1);

    // segment at half-integral height: the affine hull of odd dilates misses
    // the lattice entirely
    auto half = RationalPolytope::from_points(
        2, {{0, Rat(1) / 2}, {1, Rat(1) / 2}});
    CHECK(half.lattice_point_count(1) == 0);
    CHECK(half.lattice_point_count(2) == 3);
    for (long m = 0; m <= 6; ++m)
        CHECK(half.lattice_point_count(m) == oracles::box_scan_count(half, m));
}

TEST_CASE("point and empty polytopes") {
    auto pt = RationalPolytope::from_points(2, {{Rat(1) / 2, 0}});
    CHECK(pt.affine_dim() == 0);
    CHECK(pt.lattice_point_count(0) == 1);
    CHECK(pt.lattice_point_count(1) == 0);
    CHECK(pt.lattice_point_count(2) == 1);

    auto none = RationalPolytope::empty_polytope(3);
    CHECK(none.is_empty());
    CHECK(none.affine_dim() == -1);
    CHECK(none.lattice_point_count(0) == 1);
    CHECK(none.lattice_point_count(5) == 0);
}

TEST_CASE("restrict to sublattice") {
    auto seg = RationalPolytope::from_points(2, {{1, 1}, {-1, -1}});
    IMat diag(1, 2);
    diag(0, 0) = 1;
    diag(0, 1) = 1;
    auto r = restrict_to_sublattice(seg, sublattice_from_rows(2, diag));
    CHECK(r.ambient_dim() == 1);
    CHECK(r == RationalPolytope::from_points(1, {{1}, {-1}}));

    auto sq = RationalPolytope::from_points(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(restrict_to_sublattice(sq, full_lattice(2)) == sq);

    CHECK_THROWS_AS(restrict_to_sublattice(sq, sublattice_from_rows(2, diag)),
                    std::invalid_argument);
}

TEST_CASE("free sums") {
    auto seg = RationalPolytope::from_points(1, {{1}, {-1}});
    auto cross2 = free_sum(seg, seg);
    CHECK(cross2 == standard_cross_polytope(2));

    // {0} + B = B
    auto zero = RationalPolytope::from_points(1, {{0}});
    auto sum = free_sum(zero, seg);
    CHECK(sum.vertices().size() == 2);
    CHECK(sum.affine_dim() == 1);

    // vertex count adds up when both summands have the origin inside
    auto c23 = free_sum(standard_cross_polytope(2), standard_cross_polytope(3));
    CHECK(c23.vertices().size() == 10);
    CHECK(c23 == standard_cross_polytope(5));

    auto shifted = RationalPolytope::from_points(1, {{1}, {2}});
    CHECK_THROWS_AS(free_sum(shifted, seg), std::invalid_argument);
}

TEST_CASE("free sum reproduces the rational cross-polytope family") {
    for (long k : {1L, 3L}) {
        auto seg = RationalPolytope::from_points(1, {{Rat(k) / 2}, {-Rat(k) / 2}});
        auto sum = free_sum(seg, standard_cross_polytope(2));
        auto direct = cross_polytope_rational(k, 3);
        CHECK(sum.vertices().size() == 6);
        // same counts (coordinates are permuted relative to the direct form)
        for (long m = 0; m <= 6; ++m)
            CHECK(sum.lattice_point_count(m) == direct.lattice_point_count(m));
    }
}

TEST_CASE("membership testing") {
    auto p = cross_polytope_rational(1, 2);
    CHECK(p.contains(QVec{0, 0}));
    CHECK(p.contains(QVec{1, 0}));
    CHECK(p.contains(QVec{Rat(1) / 2, Rat(1) / 4}));
    CHECK_FALSE(p.contains(QVec{Rat(1) / 2, Rat(1) / 2}));
    auto seg = RationalPolytope::from_points(2, {{1, 1}, {-1, -1}});
    CHECK(seg.contains(QVec{Rat(1) / 2, Rat(1) / 2}));
    CHECK_FALSE(seg.contains(QVec{Rat(1) / 2, 0}));
}
