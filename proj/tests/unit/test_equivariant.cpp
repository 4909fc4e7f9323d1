#include <catch2/catch_amalgamated.hpp>

#include "eqehr/equivariant.hpp"
#include "eqehr/families.hpp"
#include "support/oracles.hpp"

using namespace eqehr;

namespace {
RationalPolytope simplex_e1234() {
    std::vector<QVec> v;
    for (int i = 0; i < 4; ++i) {
        QVec e(4, Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        v.push_back(e);
    }
    return RationalPolytope::from_points(4, v);
}

SymmetryGroup double_transposition() {
    IMat sigma(4, 4);
    sigma(0, 1) = 1;
    sigma(1, 0) = 1;
    sigma(2, 3) = 1;
    sigma(3, 2) = 1;
    return cyclic_symmetry(sigma, 2);
}

EquivariantSetup affine_simplex_setup() {
    // Conv{0, e1, e2, e3} with the order-two map x -> Ax, A(P) = -e1 + P
    auto p = RationalPolytope::from_points(
        3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    IMat a(3, 3);
    a(0, 0) = -1;
    a(0, 1) = -1;
    a(0, 2) = -1;
    a(1, 2) = 1;
    a(2, 1) = 1;
    return validate_setup(p, cyclic_symmetry(a, 2));
}
}  // namespace

TEST_CASE("translation detection in the affine setup") {
    auto s = affine_simplex_setup();
    CHECK(s.translations[0] == IVec{0, 0, 0});
    CHECK(s.translations[1] == IVec{1, 0, 0});  // g(P) + e1 = P
    CHECK(s.invariant_point == QVec{Rat(1) / 2, 0, 0});
    CHECK(s.lambda == 2);
}

TEST_CASE("linear-invariant polytopes get zero translations") {
    auto s = validate_setup(simplex_e1234(), double_transposition());
    CHECK(s.translations[1] == IVec{0, 0, 0, 0});
    // the orbit-averaged point is a genuine fixed point in P with lambda 2
    CHECK(s.lambda == 2);
    CHECK(s.polytope.contains(s.invariant_point));
    CHECK(detail::apply_affine(s, 1, s.invariant_point) == s.invariant_point);
}

TEST_CASE("non-invariant input is rejected") {
    auto p = RationalPolytope::from_points(2, {{0, 0}, {1, 0}, {0, 2}});
    CHECK_THROWS_AS(validate_setup(p, cyclic_symmetry(coordinate_reflection(2, 1), 2)),
                    NotInvariantError);
    // invariant only up to a non-lattice translation
    auto q = RationalPolytope::from_points(1, {{0}, {Rat(1) / 2}});
    IMat neg(1, 1);
    neg(0, 0) = -1;
    CHECK_THROWS_AS(validate_setup(q, cyclic_symmetry(neg, 2)), NotInvariantError);
}

TEST_CASE("fixed polytopes by orbit averaging") {
    // reflection on the 5-cycle polytope
    auto s5 = sep_cycle_setup(5, SepGroup::s_only);
    auto f = fixed_polytope(s5, 1);
    CHECK(f.vertices().size() == 4);
    CHECK(f.affine_dim() == 2);
    auto c = cycle_action(5);
    // expected vertex form: +-1/2 (e_{v_i} + e_{w_i} - e_{v_{i+1}} - e_{w_{i+1}})
    for (unsigned i = 0; i + 1 <= 2; ++i) {
        QVec expect(5, Rat(0));
        expect[static_cast<std::size_t>(c.v_index(i))] += Rat(1) / 2;
        expect[static_cast<std::size_t>(c.w_index(i))] += Rat(1) / 2;
        expect[static_cast<std::size_t>(c.v_index(i + 1))] -= Rat(1) / 2;
        expect[static_cast<std::size_t>(c.w_index(i + 1))] -= Rat(1) / 2;
        CHECK(f.contains(expect));
        bool is_vertex = false;
        for (const auto& v : f.vertices())
            if (v == expect) is_vertex = true;
        CHECK(is_vertex);
    }

    // rotations on a prime cycle fix only the origin
    auto s5d = sep_cycle_setup(5, SepGroup::dihedral);
    for (int cls = 1; cls <= 2; ++cls) {
        auto ff = fixed_polytope(s5d, s5d.sym.group.classes[static_cast<std::size_t>(cls)][0]);
        CHECK(ff.vertices().size() == 1);
        CHECK(ff.vertices()[0] == QVec(5, Rat(0)));
    }
}

TEST_CASE("fixed polytope of the antipodal reflection on an even cycle") {
    auto s6 = sep_cycle_setup(6, SepGroup::dihedral);
    // sr fixes two antipodal graph vertices
    int sr = -1;
    for (std::size_t e = 0; e < s6.sym.group.order(); ++e)
        if (s6.sym.group.labels[e] == "s*r") sr = static_cast<int>(e);
    REQUIRE(sr != -1);
    auto f = fixed_polytope(s6, sr);
    auto c = cycle_action(6);
    QVec expect(6, Rat(0));
    expect[static_cast<std::size_t>(c.v_index(1))] = Rat(1) / 2;
    expect[static_cast<std::size_t>(c.w_index(0))] = Rat(1) / 2;
    expect[static_cast<std::size_t>(c.v_index(0))] = -1;
    bool found = false;
    for (const auto& v : f.vertices())
        if (v == expect) found = true;
    CHECK(found);
}

TEST_CASE("fixed-point counts for the lattice simplex with a double transposition") {
    auto s = validate_setup(simplex_e1234(), double_transposition());
    CHECK(fixed_point_count(s, 1, 4) == 3);
    CHECK(fixed_point_count(s, 1, 3) == 0);
    CHECK(fixed_point_count(s, 1, 0) == 1);
    for (long m = 0; m <= 10; ++m) {
        CHECK(fixed_point_count(s, 0, m) == s.polytope.lattice_point_count(m));
        CHECK(fixed_point_count(s, 1, m) == (m % 2 == 0 ? Int(m / 2 + 1) : Int(0)));
    }
    // independent box-scan oracle
    for (long m = 0; m <= 6; ++m)
        CHECK(fixed_point_count(s, 1, m) == oracles::box_scan_fixed_count(s, 1, m));
}

TEST_CASE("fixed-point counts in the affine setup") {
    auto s = affine_simplex_setup();
    for (long m = 0; m <= 6; ++m) {
        CHECK(fixed_point_count(s, 1, m) == oracles::box_scan_fixed_count(s, 1, m));
        CHECK(fixed_point_count(s, 0, m) == s.polytope.lattice_point_count(m));
    }
}

TEST_CASE("denominator factors") {
    // full-dimensional cross slice: (1-t) det(I - tA)
    auto s = cross_setup(3, 3, CrossGroup::sigma_d);
    CHECK(denominator_factor(s, 0) == one_minus_tn_pow(1, 4));
    CHECK(denominator_factor(s, 1) ==
          Poly{1, -1} * det_factor(coordinate_reflection(3, 2)));

    // codimension-one cycle polytope: det(I - t rho(g)) on the ambient space
    auto s5 = sep_cycle_setup(5, SepGroup::dihedral);
    auto c5 = cycle_action(5);
    int s_elem = -1;
    for (std::size_t e = 0; e < s5.sym.group.order(); ++e)
        if (s5.sym.group.labels[e] == "s") s_elem = static_cast<int>(e);
    CHECK(denominator_factor(s5, s_elem) == det_factor(c5.mat_s));
    CHECK(denominator_factor(s5, s_elem) == Poly{1, -1} * Poly{1, 0, -1}.pow(2));

    // height-one simplex: det(I - t sigma) without the extra (1-t)
    auto sx = validate_setup(simplex_e1234(), double_transposition());
    CHECK(denominator_factor(sx, 1) == Poly{1, 0, -1}.pow(2));
    CHECK(denominator_factor(sx, 0) == one_minus_tn_pow(1, 4));

    // degree is always affine_dim + 1
    for (std::size_t e = 0; e < s5.sym.group.order(); ++e)
        CHECK(denominator_factor(s5, static_cast<int>(e)).degree() ==
              s5.polytope.affine_dim() + 1);
}

TEST_CASE("equivariant series rows") {
    auto s = validate_setup(simplex_e1234(), double_transposition());
    auto rows = equivariant_series(s, 4);
    REQUIRE(rows.size() == 5);
    for (long m = 0; m <= 4; ++m) {
        CHECK(rows[static_cast<std::size_t>(m)].values[0] == Rat(binomial(m + 3, 3)));
        CHECK(rows[static_cast<std::size_t>(m)].values[1] ==
              (m % 2 == 0 ? Rat(m / 2 + 1) : Rat(0)));
    }
    // order 0 is the all-ones class function
    auto zero = equivariant_series(s, 0);
    CHECK(zero[0].values == QVec{1, 1});
}

TEST_CASE("orbit-count integrality (Burnside)") {
    for (auto setup : {sep_cycle_setup(4, SepGroup::dihedral),
                       sep_cycle_setup(5, SepGroup::dihedral),
                       cross_setup(1, 2, CrossGroup::all_reflections)}) {
        auto rows = equivariant_series(setup, 6);
        Int order(setup.sym.group.order());
        for (const auto& row : rows) {
            Rat total = 0;
            for (std::size_t c = 0; c < row.values.size(); ++c)
                total += Rat(Int(setup.sym.group.classes[c].size())) * row.values[c];
            Rat orbits = total / Rat(order);
            CHECK(is_integer(orbits));
            CHECK(orbits >= 0);
        }
    }
}

TEST_CASE("series report for the lattice simplex") {
    auto s = validate_setup(simplex_e1234(), double_transposition());
    auto rep = hstar_series(s);
    CHECK(rep.is_polynomial);
    REQUIRE(rep.is_effective.has_value());
    CHECK(*rep.is_effective);
    REQUIRE(rep.multiplicities.size() == 1);
    CHECK(rep.multiplicities[0].mult == IVec{1, 0});  // the trivial character
    CHECK(rep.hstar_per_class[0] == RationalGenFunction::one());
    CHECK(rep.hstar_per_class[1] == RationalGenFunction::one());
}

TEST_CASE("identity evaluation recovers the classical series") {
    for (auto setup : {sep_cycle_setup(5, SepGroup::s_only),
                       cross_setup(3, 3, CrossGroup::sigma_d)}) {
        auto rep = hstar_series(setup);
        auto classical = ehrhart(setup.polytope);
        auto d1 = one_minus_tn_pow(1, static_cast<unsigned>(setup.polytope.affine_dim() + 1));
        CHECK(rep.hstar_per_class[0] == classical.series * d1);
    }
}

TEST_CASE("effectiveness is never claimed without polynomiality") {
    // half-integral segment under negation: H* has an infinite tail
    auto seg = RationalPolytope::from_points(1, {{Rat(1) / 2}, {-Rat(1) / 2}});
    IMat neg(1, 1);
    neg(0, 0) = -1;
    auto s = validate_setup(seg, cyclic_symmetry(neg, 2));
    auto rep = hstar_series(s, 8);
    CHECK_FALSE(rep.is_polynomial);
    CHECK_FALSE(rep.is_effective.has_value());
    CHECK(rep.order_truncated == 8);
    CHECK(rep.coefficients.size() == 9);
    // default truncation: 2 (dim+1) denominator
    auto rep_default = hstar_series(s);
    CHECK(rep_default.order_truncated == 8);
}
