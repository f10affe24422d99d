#include <doctest.h>

#include "zest/io.hpp"

using namespace zest;

TEST_CASE("scalar strings round-trip") {
    for (const auto& s : {TorsionScalar::zero(), TorsionScalar::one(), TorsionScalar::minus_one(),
                          TorsionScalar::root(1, 4), TorsionScalar::root(3, 4),
                          TorsionScalar::root(5, 7), TorsionScalar::root(1, 12)})
        CHECK(parse_scalar(scalar_to_string(s)) == s);
    CHECK_THROWS_AS(parse_scalar("zeta"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("groups round-trip through json") {
    for (const FiniteGroup& g : {FiniteGroup::cyclic(5), FiniteGroup::product({2, 9}),
                                 FiniteGroup::metacyclic33(3)})
        CHECK(group_from_json(group_to_json(g)) == g);
    CHECK_THROWS_AS(group_from_json({{"kind", "dihedral"}, {"n", 3}}), ParseError);
}

TEST_CASE("associative data round-trip through json") {
    YetterDrinfeldDatum yd = builtin_a12(3);
    auto data = enumerate_cyclic_zestings(yd, default_gamma0_a12(yd),
                                          std::vector<GroupElement>{yd.degrees[0]});
    for (const auto& d : data) {
        AssociativeZestingDatum back = datum_from_json(datum_to_json(d));
        CHECK(back.lambda == d.lambda);
        CHECK(back.omega == d.omega);
        CHECK(back.phi == d.phi);
        CHECK(back.gamma0.elems == d.gamma0.elems);
        CHECK(datum_to_json(back) == datum_to_json(d));
        CHECK(verify_assoc_datum(back).all_pass());
    }
}

TEST_CASE("fk3 data with the permutation action round-trip") {
    YetterDrinfeldDatum yd = builtin_fk3(9, 1);
    auto data = enumerate_cyclic_zestings(yd, default_gamma0_fk3(yd));
    const auto& d = data.back();
    AssociativeZestingDatum back = datum_from_json(datum_to_json(d));
    CHECK(datum_to_json(back) == datum_to_json(d));
    CHECK(verify_assoc_datum(back).all_pass());
}

TEST_CASE("braided data round-trip through json") {
    BraidedZestingDatum bd = builtin_z4(TorsionScalar::minus_one(), TorsionScalar::root(1, 4));
    BraidedZestingDatum back = braided_from_json(braided_to_json(bd));
    CHECK(braided_to_json(back) == braided_to_json(bd));
    CHECK(verify_braided_datum(back).all_pass());
}

TEST_CASE("reports serialize with rows and verdict") {
    VerificationReport rep;
    rep.rows.push_back({"alpha", true, ""});
    rep.rows.push_back({"beta", false, "at (1,1): lhs=1 rhs=-1"});
    auto j = report_to_json(rep);
    CHECK(j["all_pass"] == false);
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][1]["counterexample"] == "at (1,1): lhs=1 rhs=-1");
    std::string text = report_to_text(rep);
    CHECK(text.find("[PASS] alpha") != std::string::npos);
    CHECK(text.find("[FAIL] beta") != std::string::npos);
    CHECK(text.find("FAILED") != std::string::npos);
}

TEST_CASE("structure constant export embeds the datum") {
    YetterDrinfeldDatum yd = builtin_a12(2);
    auto data = enumerate_cyclic_zestings(yd, default_gamma0_a12(yd),
                                          std::vector<GroupElement>{yd.degrees[0]});
    const auto& d = data.front();
    auto j = algebra_to_json(build_zested(d), datum_to_json(d));
    CHECK(j["mlambda"].size() == 64);
    CHECK(j["omega"].size() == 512);
    CHECK(group_from_json(j["group"]) == yd.gamma);
    AssociativeZestingDatum back = datum_from_json(j["datum"]);
    CHECK(verify_assoc_datum(back).all_pass());
}

TEST_CASE("malformed input is reported as a parse error") {
    YetterDrinfeldDatum yd = builtin_a12(2);
    auto data = enumerate_cyclic_zestings(yd, default_gamma0_a12(yd),
                                          std::vector<GroupElement>{yd.degrees[0]});
    auto j = datum_to_json(data.front());
    j["lambda"][3] = nlohmann::json::array({9, 9});
    CHECK_THROWS_AS(datum_from_json(j), ParseError);
    auto j2 = datum_to_json(data.front());
    j2["omega"][7] = "q";
    CHECK_THROWS_AS(datum_from_json(j2), ParseError);
}
