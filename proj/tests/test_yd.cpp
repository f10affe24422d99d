#include <doctest.h>

#include "zest/yd.hpp"

using namespace zest;

TEST_CASE("a12 datum: support, grading, braiding matrix") {
    for (int n = 2; n <= 6; ++n) {
        YetterDrinfeldDatum v = builtin_a12(n);
        Subgroup supp = support(v);
        CHECK(supp.order() == 2 * n);
        QuotientGroup u = universal_grading(v);
        CHECK(u.group().kind() == GroupKind::Cyclic);
        CHECK(u.group().order() == n);

        auto q = braiding_matrix(v);
        TorsionScalar zn = TorsionScalar::root(1, n);
        CHECK(q[0][0] == TorsionScalar::minus_one());
        CHECK(q[0][1] == TorsionScalar::one());
        CHECK(q[1][0] == zn.inverse());
        CHECK(q[1][1] == zn);
    }
}

TEST_CASE("fk3 datum: support is normal, grading is cyclic of order 2k+1") {
    for (int ell : {3, 9}) {
        YetterDrinfeldDatum v = builtin_fk3(ell, 1);
        Subgroup supp = support(v);
        CHECK(supp.is_normal());
        QuotientGroup u = universal_grading(v);
        CHECK(u.group().kind() == GroupKind::Cyclic);
        CHECK(u.group().order() == 3);
        CHECK(supp.order() * u.group().order() == 6 * ell);
    }
}

TEST_CASE("fk3 conjugation permutes the degree set") {
    YetterDrinfeldDatum v = builtin_fk3(9, 1);
    for (const auto& g : v.gamma.elements()) {
        std::vector<bool> hit(3, false);
        for (int i = 0; i < 3; ++i)
            hit[static_cast<std::size_t>(index_action(v, g, i))] = true;
        CHECK((hit[0] && hit[1] && hit[2]));
    }
}

TEST_CASE("action scalars: diagonal values and the undetermined-sign guard") {
    YetterDrinfeldDatum a = builtin_a12(3);
    CHECK(action_scalar(a, a.degrees[1], 1) == TorsionScalar::root(1, 3));
    CHECK(action_scalar(a, a.degrees[0], 0) == TorsionScalar::minus_one());

    YetterDrinfeldDatum f = builtin_fk3(9, 1);
    Subgroup g0 = default_gamma0_fk3(f);
    for (const auto& c : g0.elems)
        for (int i = 0; i < 3; ++i)
            CHECK(action_scalar(f, c, i) == TorsionScalar::one());
    CHECK_THROWS_AS(action_scalar(f, GroupElement{{1, 0}}, 0), NonDiagonalAction);
    CHECK_THROWS_AS(braiding_matrix(f), NotDiagonal);
}

TEST_CASE("default central subgroups") {
    YetterDrinfeldDatum a = builtin_a12(4);
    Subgroup ga = default_gamma0_a12(a);
    CHECK(ga.order() == 2);
    CHECK(ga.is_central());

    YetterDrinfeldDatum f9 = builtin_fk3(9, 1);
    Subgroup g9 = default_gamma0_fk3(f9);
    CHECK(g9.order() == 3); // <t^6> inside G_{3,9}
    CHECK(g9.gens.size() == 1);
    CHECK(g9.is_central());

    YetterDrinfeldDatum f3 = builtin_fk3(3, 1);
    CHECK(default_gamma0_fk3(f3).is_trivial());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(builtin_a12(1), InvalidParameters);
    CHECK_THROWS_AS(builtin_fk3(3, 3), InvalidParameters);
}
