#include <doctest.h>

#include <numeric>

#include "zest/zesting.hpp"

using namespace zest;

TEST_CASE("phi maps: closure, conflicts, lookup") {
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    Subgroup g0 = subgroup_generated(c4, {GroupElement{{2}}});
    // an order-4 character cannot be the image of an order-2 generator
    auto bad = PhiMap::from_generator_images(g0, {Character(c4, {1})});
    CHECK(!bad.has_value());
    auto good = PhiMap::from_generator_images(g0, {Character(c4, {2})});
    REQUIRE(good.has_value());
    CHECK(good->at(GroupElement{{2}}).eval(GroupElement{{1}}) == TorsionScalar::minus_one());
    CHECK(good->at(c4.identity()) == Character::trivial(c4));
    CHECK_THROWS_AS(good->at(GroupElement{{1}}), NotInGamma0);
    CHECK(PhiMap::trivial(g0).at(GroupElement{{2}}) == Character::trivial(c4));
}

TEST_CASE("cyclic construction rejects mismatched roots") {
    YetterDrinfeldDatum yd = builtin_a12(2);
    Subgroup g0 = default_gamma0_a12(yd);
    QuotientGroup grading = universal_grading(yd);
    auto phis = phi_candidates(yd, g0);
    REQUIRE(!phis.empty());
    GroupElement nu = yd.degrees[0];
    // m = <gamma(nu), nu> = -1, so q must be a primitive 4th root
    CHECK_THROWS_AS(cyclic_zesting(yd, grading, g0, phis[0], nu, TorsionScalar::one()),
                    RootMismatch);
    CHECK_THROWS_AS(cyclic_zesting(yd, grading, g0, phis[0], GroupElement{{0, 1}},
                                   TorsionScalar::root(1, 4)),
                    NotInGamma0);
    AssociativeZestingDatum d =
        cyclic_zesting(yd, grading, g0, phis[0], nu, TorsionScalar::root(1, 4));
    CHECK(verify_assoc_datum(d).all_pass());
}

TEST_CASE("every constructed datum on the test grid verifies cleanly") {
    for (int n = 2; n <= 6; ++n) {
        YetterDrinfeldDatum yd = builtin_a12(n);
        auto data = enumerate_cyclic_zestings(yd, default_gamma0_a12(yd),
                                              std::vector<GroupElement>{yd.degrees[0]});
        std::size_t expect = static_cast<std::size_t>(n % 2 == 0 ? 2 * n : n);
        CHECK(data.size() == expect);
        for (const auto& d : data)
            CHECK(verify_assoc_datum(d).all_pass());
    }
    for (int ell : {3, 9}) {
        YetterDrinfeldDatum yd = builtin_fk3(ell, 1);
        auto data = enumerate_cyclic_zestings(yd, default_gamma0_fk3(yd));
        int d_par = std::gcd(3, ell / 3);
        CHECK(data.size() == static_cast<std::size_t>(d_par * d_par * 3));
        for (const auto& d : data)
            CHECK(verify_assoc_datum(d).all_pass());
    }
}

TEST_CASE("the compatibility right-hand side is the theta pairing") {
    YetterDrinfeldDatum yd = builtin_a12(3);
    auto data = enumerate_cyclic_zestings(yd, default_gamma0_a12(yd),
                                          std::vector<GroupElement>{yd.degrees[0]});
    for (const auto& d : data) {
        const FiniteGroup& g = d.grading_group();
        TorsionScalar m = gamma_eval(d, yd.degrees[0], yd.degrees[0]);
        auto theta = std_theta4(m, g.order(), UnityCoeff{});
        for (const auto& a : g.elements())
            for (const auto& b : g.elements())
                for (const auto& c : g.elements())
                    for (const auto& e : g.elements())
                        CHECK(d.phi.at(d.lambda.at(a, b)).eval(d.lambda.at(c, e)) ==
                              theta.at({a, b, c, e}));
    }
}

TEST_CASE("gamma pairing is multiplicative in both slots") {
    YetterDrinfeldDatum yd = builtin_a12(4);
    auto data = enumerate_cyclic_zestings(yd, default_gamma0_a12(yd),
                                          std::vector<GroupElement>{yd.degrees[0]});
    const auto& d = data.front();
    for (const auto& a : d.gamma0.elems)
        for (const auto& b : d.gamma0.elems)
            for (const auto& h : yd.gamma.elements()) {
                CHECK(gamma_eval(d, yd.gamma.mul(a, b), h) ==
                      gamma_eval(d, a, h) * gamma_eval(d, b, h));
                for (const auto& k : yd.gamma.elements())
                    CHECK(gamma_eval(d, a, yd.gamma.mul(h, k)) ==
                          gamma_eval(d, a, h) * gamma_eval(d, a, k));
            }
}

TEST_CASE("standard coset representatives are generator powers") {
    YetterDrinfeldDatum yd = builtin_fk3(9, 1);
    Subgroup g0 = default_gamma0_fk3(yd);
    auto reps = standard_nu_representatives(yd.gamma, g0, 3);
    // Gamma_0 = <t^6> of order 3 and Gamma_0^3 is trivial: three classes
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == yd.gamma.identity());
    CHECK(reps[1] == yd.gamma.pow(g0.gens[0], 1));
    CHECK(reps[2] == yd.gamma.pow(g0.gens[0], 2));
}

TEST_CASE("bicharacters are bimultiplicative and validated") {
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    Bicharacter r(c4, {{TorsionScalar::root(1, 4)}});
    for (const auto& a : c4.elements())
        for (const auto& b : c4.elements())
            for (const auto& c : c4.elements()) {
                CHECK(r.eval(c4.mul(a, b), c) == r.eval(a, c) * r.eval(b, c));
                CHECK(r.eval(a, c4.mul(b, c)) == r.eval(a, b) * r.eval(a, c));
            }
    CHECK_THROWS_AS(Bicharacter(c4, {{TorsionScalar::root(1, 3)}}), InvalidParameters);
    CHECK_THROWS_AS(Bicharacter(FiniteGroup::metacyclic33(1), {{TorsionScalar::one()}}),
                    InvalidParameters);
}

TEST_CASE("the C4 example behaves as claimed across the parameter grid") {
    // BZ2 holds iff eta^2 = zeta; the compatibility condition and BZ3 further
    // require zeta^2 = 1
    for (const auto& zeta : roots_of_unity(4))
        for (const auto& eta : roots_of_unity(8)) {
            BraidedZestingDatum bd = builtin_z4(zeta, eta);
            VerificationReport rep = verify_braided_datum(bd);
            bool bz2_expected = eta * eta == zeta;
            bool assoc_expected = (zeta * zeta == TorsionScalar::one());
            CHECK(rep.find("(BZ2)")->pass == bz2_expected);
            CHECK(rep.find("(assoczesting)")->pass == assoc_expected);
            if (bz2_expected)
                CHECK(rep.find("(BZ3)")->pass == assoc_expected);
            for (const auto& row : rep.rows)
                if (!row.pass && (row.name == "(BZ2)" || row.name == "(BZ3)" ||
                                  row.name == "(assoczesting)")) {
                    CHECK(row.counterexample.find("lhs=") != std::string::npos);
                    CHECK(row.counterexample.find("rhs=") != std::string::npos);
                }
        }
}

TEST_CASE("braided verification reports symmetric-lambda and r0 compatibility") {
    BraidedZestingDatum bd = builtin_z4(TorsionScalar::minus_one(), TorsionScalar::root(1, 4));
    VerificationReport rep = verify_braided_datum(bd);
    CHECK(rep.all_pass());
    CHECK(rep.find("lambda symmetric") != nullptr);
    CHECK(rep.find("r0 compatible with Phi") != nullptr);
    CHECK(rep.find("(BZ3) representative independence")->pass);
}
