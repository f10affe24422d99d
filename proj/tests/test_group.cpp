#include <doctest.h>

#include "zest/group.hpp"

using namespace zest;

namespace {

void check_group_laws(const FiniteGroup& g) {
    const auto& es = g.elements();
    for (const auto& a : es) {
        CHECK(g.mul(a, g.identity()) == a);
        CHECK(g.mul(g.identity(), a) == a);
        CHECK(g.mul(a, g.inv(a)) == g.identity());
        for (const auto& b : es)
            for (const auto& c : es)
                CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

} // namespace

TEST_CASE("group laws hold exhaustively for each built-in family") {
    check_group_laws(FiniteGroup::cyclic(6));
    check_group_laws(FiniteGroup::product({2, 4}));
    check_group_laws(FiniteGroup::metacyclic33(3)); // order 18
}

TEST_CASE("metacyclic presentation relations") {
    for (int ell : {1, 3, 9}) {
        FiniteGroup g = FiniteGroup::metacyclic33(ell);
        GroupElement s{{1, 0}}, t{{0, 1}};
        CHECK(g.order() == 6 * ell);
        CHECK(g.pow(s, 3) == g.identity());
        CHECK(g.pow(t, 2 * ell) == g.identity());
        CHECK(g.mul(t, s) == g.mul(g.pow(s, 2), t)); // ts = s^2 t
    }
}

TEST_CASE("element indexing and membership") {
    FiniteGroup g = FiniteGroup::product({2, 3});
    for (int i = 0; i < g.order(); ++i)
        CHECK(g.index_of(g.elements()[static_cast<std::size_t>(i)]) == i);
    CHECK(g.elements().front() == g.identity());
    CHECK_THROWS_AS(g.check_member(GroupElement{{2, 0}}), ForeignElement);
    CHECK_THROWS_AS(g.check_member(GroupElement{{0}}), ForeignElement);
}

TEST_CASE("characters: count, multiplicativity, torsion, separation") {
    for (const FiniteGroup& g :
         {FiniteGroup::cyclic(8), FiniteGroup::product({2, 4}), FiniteGroup::metacyclic33(3)}) {
        auto chars = all_characters(g);
        long long ab_size = 1;
        for (int m : g.ab_orders())
            ab_size *= m;
        CHECK(static_cast<long long>(chars.size()) == ab_size);
        for (const auto& chi : chars)
            for (const auto& a : g.elements()) {
                CHECK(chi.eval(a).pow(g.element_order(a)) == TorsionScalar::one());
                for (const auto& b : g.elements())
                    CHECK(chi.eval(g.mul(a, b)) == chi.eval(a) * chi.eval(b));
            }
        // characters separate points exactly on the abelianization
        for (const auto& a : g.elements())
            for (const auto& b : g.elements()) {
                bool same_image = g.ab_project(a) == g.ab_project(b);
                bool all_equal = true;
                for (const auto& chi : chars)
                    if (!(chi.eval(a) == chi.eval(b)))
                        all_equal = false;
                CHECK(same_image == all_equal);
            }
    }
}

TEST_CASE("center is normal; quotients by it work whenever they are abelian") {
    for (const FiniteGroup& g : {FiniteGroup::metacyclic33(3), FiniteGroup::metacyclic33(9)}) {
        Subgroup z = center(g);
        CHECK(z.order() == g.ell()); // <t^2>
        CHECK(z.is_normal());
    }
    for (const FiniteGroup& g : {FiniteGroup::cyclic(6), FiniteGroup::product({2, 4})}) {
        Subgroup z = center(g);
        CHECK(z.order() == g.order());
        QuotientGroup q = quotient(g, z);
        CHECK(q.group().order() * z.order() == g.order());
    }
}

TEST_CASE("quotient projection is a homomorphism") {
    FiniteGroup g = FiniteGroup::product({2, 4});
    Subgroup n = subgroup_generated(g, {GroupElement{{0, 2}}});
    QuotientGroup q = quotient(g, n);
    CHECK(q.group().order() == 4);
    CHECK(q.group().orders() == std::vector<int>{2, 2}); // (1,1) has order 2 in the quotient
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            CHECK(q.project(g.mul(a, b)) == q.group().mul(q.project(a), q.project(b)));
    for (const auto& c : q.group().elements()) {
        CHECK(q.project(q.representative(c)) == c);
        CHECK(q.coset_members(c).size() == static_cast<std::size_t>(n.order()));
    }
}

TEST_CASE("quotient rejects bad input") {
    FiniteGroup g = FiniteGroup::metacyclic33(3);
    Subgroup s = subgroup_generated(g, {GroupElement{{1, 0}}});
    CHECK(s.is_normal());
    QuotientGroup ok = quotient(g, s);
    CHECK(ok.group().order() == 6);
    // G / Z(G) is the nonabelian group of order 6
    Subgroup t2 = subgroup_generated(g, {GroupElement{{0, 2}}});
    CHECK_THROWS_AS(quotient(g, t2), NotAbelianQuotient);
    Subgroup t = subgroup_generated(g, {GroupElement{{0, 1}}});
    CHECK(!t.is_normal());
    CHECK_THROWS_AS(quotient(g, t), NotNormal);
}

TEST_CASE("generated subgroups, powers, intersections") {
    FiniteGroup g = FiniteGroup::product({2, 4});
    Subgroup h = subgroup_generated(g, {GroupElement{{1, 1}}});
    CHECK(h.order() == 4);
    CHECK(h.contains(GroupElement{{0, 2}}));
    Subgroup p = power_subgroup(h, 2);
    CHECK(p.order() == 2);
    Subgroup i = intersect(h, subgroup_generated(g, {GroupElement{{0, 1}}}));
    CHECK(i.order() == 2);
    CHECK(trivial_subgroup(g).order() == 1);
    CHECK(whole_group(g).order() == 8);
}
