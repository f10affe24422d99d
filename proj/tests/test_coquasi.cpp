#include <doctest.h>

#include "zest/coquasi.hpp"

using namespace zest;

namespace {

AssociativeZestingDatum a12_n2_datum() {
    YetterDrinfeldDatum yd = builtin_a12(2);
    Subgroup g0 = default_gamma0_a12(yd);
    auto phi = PhiMap::from_generator_images(g0, {Character(yd.gamma, {1, 0})});
    REQUIRE(phi.has_value());
    return cyclic_zesting(yd, universal_grading(yd), g0, *phi, yd.degrees[0],
                          TorsionScalar::root(1, 4));
}

AssociativeZestingDatum trivial_datum(const YetterDrinfeldDatum& yd, const Subgroup& g0) {
    QuotientGroup grading = universal_grading(yd);
    return AssociativeZestingDatum{
        yd,
        grading,
        g0,
        PhiMap::trivial(g0),
        GroupValuedCochain::constant_identity(2, grading.group(), GroupCoeff{yd.gamma}),
        ScalarCochain::constant_identity(3, grading.group(), UnityCoeff{}),
    };
}

} // namespace

TEST_CASE("zested tables match the closed-form entries") {
    AssociativeZestingDatum d = a12_n2_datum();
    ZestedGroupAlgebra z = build_zested(d);
    GroupElement a1{{1, 0}}, a2{{0, 1}};
    const FiniteGroup& g = d.yd.gamma;
    CHECK(z.m(a2, a2) == g.mul(g.pow(a2, 2), a1));
    for (const auto& e : g.elements()) {
        CHECK(z.m(e, g.identity()) == e);
        CHECK(z.m(g.identity(), e) == e);
    }
    CHECK(z.assoc(a2, a2, a2) == TorsionScalar::root(1, 4));
}

TEST_CASE("trivial data produce the plain group algebra") {
    YetterDrinfeldDatum yd = builtin_a12(3);
    AssociativeZestingDatum d = trivial_datum(yd, trivial_subgroup(yd.gamma));
    ZestedGroupAlgebra z = build_zested(d);
    const FiniteGroup& g = yd.gamma;
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            CHECK(z.m(a, b) == g.mul(a, b));
    for (const auto& v : z.omega)
        CHECK(v.is_one());
    CHECK(verify_coquasi_bialgebra(z).all_pass());
}

TEST_CASE("coquasi-bialgebra axioms hold for constructed data") {
    AssociativeZestingDatum d = a12_n2_datum();
    VerificationReport rep = verify_coquasi_bialgebra(build_zested(d));
    CHECK(rep.all_pass());
    CHECK(rep.find("quasi-associativity") != nullptr);
    CHECK(rep.find("unit") != nullptr);
    CHECK(rep.find("pentagon") != nullptr);
    CHECK(rep.find("normalization") != nullptr);
}

TEST_CASE("single-entry corruption is always detected") {
    AssociativeZestingDatum d = a12_n2_datum();
    ZestedGroupAlgebra z = build_zested(d);
    std::size_t nn = static_cast<std::size_t>(z.n());

    SUBCASE("associator entry") {
        // interior triple (a2, a2, a2)
        std::size_t i = static_cast<std::size_t>(z.gamma.index_of(GroupElement{{0, 1}}));
        std::size_t flat = (i * nn + i) * nn + i;
        z.omega[flat] = z.omega[flat] * TorsionScalar::root(1, 3);
        VerificationReport rep = verify_coquasi_bialgebra(z);
        CHECK(!rep.all_pass());
        CHECK(!rep.find("pentagon")->pass);
        CHECK(!rep.find("pentagon")->counterexample.empty());
    }
    SUBCASE("multiplication entry") {
        std::size_t i = static_cast<std::size_t>(z.gamma.index_of(GroupElement{{0, 1}}));
        std::size_t flat = i * nn + i;
        z.mlambda[flat] = (z.mlambda[flat] + 1) % static_cast<int>(nn);
        CHECK(!verify_coquasi_bialgebra(z).all_pass());
    }
}

TEST_CASE("invalid data are rejected unless forced") {
    AssociativeZestingDatum d = a12_n2_datum();
    // corrupt omega so the compatibility condition fails (a cube root keeps
    // q^2 away from every valid value of <gamma(nu), nu>)
    std::vector<TorsionScalar> tab = d.omega.table();
    tab.back() = tab.back() * TorsionScalar::root(1, 3);
    d.omega = ScalarCochain(3, d.grading_group(), UnityCoeff{}, tab);
    CHECK_THROWS_AS(build_zested(d), InvalidDatum);
    try {
        build_zested(d);
    } catch (const InvalidDatum& ex) {
        CHECK(!ex.report.all_pass());
    }
    ZestedGroupAlgebra z = build_zested(d, true);
    CHECK(z.omega.size() == 8u * 8u * 8u); // |C2 x C4|^3
}

TEST_CASE("braided tables and the coquasitriangular axioms") {
    BraidedZestingDatum bd = builtin_z4(TorsionScalar::minus_one(), TorsionScalar::root(1, 4));
    ZestedGroupAlgebra z = build_braided_zested(bd);
    GroupElement sigma{{1}};
    CHECK(z.r(sigma, sigma) == TorsionScalar::minus_one()); // t(1,1) r0(s,s) = i*i
    for (const auto& h : z.gamma.elements())
        CHECK(z.r(z.gamma.identity(), h) == TorsionScalar::one());
    VerificationReport rep = verify_coquasitriangular(z);
    CHECK(rep.all_pass());

    SUBCASE("r-form corruption breaks the commutation axiom") {
        std::size_t nn = static_cast<std::size_t>(z.n());
        (*z.rlambda)[1 * nn + 2] = (*z.rlambda)[1 * nn + 2] * TorsionScalar::minus_one();
        VerificationReport bad = verify_coquasitriangular(z);
        CHECK(!bad.all_pass());
    }
}

TEST_CASE("coquasitriangular verification for a trivial commutative zesting") {
    YetterDrinfeldDatum yd = builtin_a12(2);
    AssociativeZestingDatum d = trivial_datum(yd, trivial_subgroup(yd.gamma));
    ZestedGroupAlgebra z = build_zested(d);
    // any bicharacter gives a coquasitriangular structure on the plain algebra
    Bicharacter r0(yd.gamma, {{TorsionScalar::minus_one(), TorsionScalar::one()},
                              {TorsionScalar::one(), TorsionScalar::root(1, 4)}});
    std::size_t nn = static_cast<std::size_t>(z.n());
    std::vector<TorsionScalar> r(nn * nn);
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            r[i * nn + j] = r0.eval(z.gamma.elements()[i], z.gamma.elements()[j]);
    z.rlambda = std::move(r);
    CHECK(verify_coquasitriangular(z).all_pass());
}

TEST_CASE("character inducing values") {
    BraidedZestingDatum bd = builtin_z4(TorsionScalar::minus_one(), TorsionScalar::root(1, 4));
    auto res = character_inducing(bd, GroupElement{{2}});
    REQUIRE(res.ok);
    for (const auto& v : res.values)
        CHECK(v == TorsionScalar::one()); // r0(s, s^2) r0(s^2, s) = (-1)(-1)
    auto id = character_inducing(bd, bd.assoc.yd.gamma.identity());
    REQUIRE(id.ok);
    for (const auto& v : id.values)
        CHECK(v == TorsionScalar::one());
}

TEST_CASE("coquasitriangular verification requires an r-form") {
    AssociativeZestingDatum d = a12_n2_datum();
    ZestedGroupAlgebra z = build_zested(d);
    CHECK(!verify_coquasitriangular(z).all_pass());
}
