#include "zest/io.hpp"

namespace zest {

namespace {

using nlohmann::json;

json element_to_json(const GroupElement& e) { return json(e.w); }

GroupElement element_from_json(const FiniteGroup& g, const json& j) {
    if (!j.is_array())
        throw ParseError("group element must be an array of integers");
    GroupElement e{j.get<std::vector<int>>()};
    try {
        g.check_member(e);
    } catch (const ForeignElement& ex) {
        throw ParseError(std::string("bad group element: ") + ex.what());
    }
    return e;
}

std::vector<GroupElement> elements_from_json(const FiniteGroup& g, const json& j) {
    std::vector<GroupElement> out;
    for (const auto& item : j)
        out.push_back(element_from_json(g, item));
    return out;
}

ScalarCochain scalar_cochain_from_json(int arity, const FiniteGroup& domain, const json& j) {
    std::vector<TorsionScalar> table;
    for (const auto& item : j)
        table.push_back(parse_scalar(item.get<std::string>()));
    try {
        return ScalarCochain(arity, domain, UnityCoeff{}, std::move(table));
    } catch (const InvalidParameters& ex) {
        throw ParseError(std::string("bad cochain table: ") + ex.what());
    }
}

json scalar_cochain_to_json(const ScalarCochain& c) {
    json out = json::array();
    for (const auto& v : c.table())
        out.push_back(scalar_to_string(v));
    return out;
}

} // namespace

std::string scalar_to_string(const TorsionScalar& s) {
    if (s.is_zero())
        return "0";
    if (s.is_one())
        return "1";
    if (s == TorsionScalar::minus_one())
        return "-1";
    if (s == TorsionScalar::root(1, 4))
        return "i";
    if (s == TorsionScalar::root(3, 4))
        return "-i";
    return std::to_string(s.num()) + "/" + std::to_string(s.den());
}

TorsionScalar parse_scalar(const std::string& text) {
    if (text == "0")
        return TorsionScalar::zero();
    if (text == "1")
        return TorsionScalar::one();
    if (text == "-1")
        return TorsionScalar::minus_one();
    if (text == "i")
        return TorsionScalar::root(1, 4);
    if (text == "-i")
        return TorsionScalar::root(3, 4);
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw ParseError("cannot parse scalar '" + text + "'");
    try {
        std::int64_t a = std::stoll(text.substr(0, slash));
        std::int64_t b = std::stoll(text.substr(slash + 1));
        if (b <= 0)
            throw ParseError("scalar denominator must be positive in '" + text + "'");
        return TorsionScalar::root(a, b);
    } catch (const std::logic_error&) {
        throw ParseError("cannot parse scalar '" + text + "'");
    }
}

nlohmann::json group_to_json(const FiniteGroup& g) {
    switch (g.kind()) {
    case GroupKind::Cyclic:
        return {{"kind", "cyclic"}, {"n", g.orders().front()}};
    case GroupKind::Product:
        return {{"kind", "product"}, {"orders", g.orders()}};
    case GroupKind::Metacyclic33:
        return {{"kind", "metacyclic33"}, {"ell", g.ell()}};
    }
    throw ParseError("unknown group kind");
}

FiniteGroup group_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "cyclic")
            return FiniteGroup::cyclic(j.at("n").get<int>());
        if (kind == "product")
            return FiniteGroup::product(j.at("orders").get<std::vector<int>>());
        if (kind == "metacyclic33")
            return FiniteGroup::metacyclic33(j.at("ell").get<int>());
    } catch (const InvalidParameters& ex) {
        throw ParseError(std::string("bad group spec: ") + ex.what());
    }
    throw ParseError("unknown group kind '" + kind + "'");
}

nlohmann::json yd_to_json(const YetterDrinfeldDatum& v) {
    json degrees = json::array();
    for (const auto& d : v.degrees)
        degrees.push_back(element_to_json(d));
    json action;
    if (const auto* diag = std::get_if<DiagonalAction>(&v.action)) {
        json chars = json::array();
        for (const auto& c : diag->characters)
            chars.push_back(c.exponents());
        action = {{"type", "diagonal"}, {"characters", chars}};
    } else {
        const auto& perm = std::get<IndexPermutationAction>(v.action);
        json gens = json::array();
        for (const auto& g : perm.trivially_acting_gens)
            gens.push_back(element_to_json(g));
        action = {{"type", "index_permutation"}, {"trivially_acting", gens}};
    }
    return {{"gamma", group_to_json(v.gamma)}, {"degrees", degrees}, {"action", action}};
}

YetterDrinfeldDatum yd_from_json(const nlohmann::json& j) {
    YetterDrinfeldDatum v;
    v.gamma = group_from_json(j.at("gamma"));
    v.degrees = elements_from_json(v.gamma, j.at("degrees"));
    const json& action = j.at("action");
    std::string type = action.at("type").get<std::string>();
    if (type == "diagonal") {
        std::vector<Character> chars;
        for (const auto& exps : action.at("characters"))
            chars.push_back(Character(v.gamma, exps.get<std::vector<int>>()));
        if (chars.size() != v.degrees.size())
            throw ParseError("need one character per degree");
        v.action = DiagonalAction{std::move(chars)};
    } else if (type == "index_permutation") {
        v.action = IndexPermutationAction{elements_from_json(v.gamma, action.at("trivially_acting"))};
    } else {
        throw ParseError("unknown action type '" + type + "'");
    }
    return v;
}

nlohmann::json datum_to_json(const AssociativeZestingDatum& d) {
    json gens = json::array();
    for (const auto& g : d.gamma0.gens)
        gens.push_back(element_to_json(g));
    json images = json::array();
    for (const auto& c : d.phi.generator_images())
        images.push_back(c.exponents());
    json lambda = json::array();
    for (const auto& v : d.lambda.table())
        lambda.push_back(element_to_json(v));
    return {{"yd", yd_to_json(d.yd)},
            {"gamma0_gens", gens},
            {"phi_images", images},
            {"lambda", lambda},
            {"omega", scalar_cochain_to_json(d.omega)}};
}

AssociativeZestingDatum datum_from_json(const nlohmann::json& j) {
    YetterDrinfeldDatum yd = yd_from_json(j.at("yd"));
    Subgroup gamma0 = subgroup_generated(yd.gamma, elements_from_json(yd.gamma, j.at("gamma0_gens")));
    std::vector<Character> images;
    for (const auto& exps : j.at("phi_images"))
        images.push_back(Character(yd.gamma, exps.get<std::vector<int>>()));
    auto phi = PhiMap::from_generator_images(gamma0, images);
    if (!phi)
        throw ParseError("phi images do not extend to a homomorphism on gamma0");
    QuotientGroup grading = universal_grading(yd);
    std::vector<GroupElement> ltab;
    for (const auto& item : j.at("lambda"))
        ltab.push_back(element_from_json(yd.gamma, item));
    GroupValuedCochain lambda = [&] {
        try {
            return GroupValuedCochain(2, grading.group(), GroupCoeff{yd.gamma}, std::move(ltab));
        } catch (const InvalidParameters& ex) {
            throw ParseError(std::string("bad lambda table: ") + ex.what());
        }
    }();
    ScalarCochain omega = scalar_cochain_from_json(3, grading.group(), j.at("omega"));
    return AssociativeZestingDatum{std::move(yd), std::move(grading), std::move(gamma0),
                                   std::move(*phi), std::move(lambda), std::move(omega)};
}

nlohmann::json braided_to_json(const BraidedZestingDatum& bd) {
    json r0 = json::array();
    for (const auto& row : bd.r0.generator_values()) {
        json jrow = json::array();
        for (const auto& v : row)
            jrow.push_back(scalar_to_string(v));
        r0.push_back(jrow);
    }
    json out = datum_to_json(bd.assoc);
    out["r0"] = r0;
    out["t"] = scalar_cochain_to_json(bd.t_cochain);
    return out;
}

BraidedZestingDatum braided_from_json(const nlohmann::json& j) {
    AssociativeZestingDatum assoc = datum_from_json(j);
    std::vector<std::vector<TorsionScalar>> gen_values;
    for (const auto& row : j.at("r0")) {
        std::vector<TorsionScalar> vrow;
        for (const auto& item : row)
            vrow.push_back(parse_scalar(item.get<std::string>()));
        gen_values.push_back(std::move(vrow));
    }
    Bicharacter r0 = [&] {
        try {
            return Bicharacter(assoc.yd.gamma, std::move(gen_values));
        } catch (const InvalidParameters& ex) {
            throw ParseError(std::string("bad r0 table: ") + ex.what());
        }
    }();
    ScalarCochain t = scalar_cochain_from_json(2, assoc.grading_group(), j.at("t"));
    return BraidedZestingDatum{std::move(assoc), std::move(r0), std::move(t)};
}

nlohmann::json report_to_json(const VerificationReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"name", r.name}, {"pass", r.pass}, {"counterexample", r.counterexample}});
    return {{"all_pass", rep.all_pass()}, {"rows", rows}};
}

std::string report_to_text(const VerificationReport& rep) {
    std::string out;
    for (const auto& r : rep.rows) {
        out += (r.pass ? "[PASS] " : "[FAIL] ") + r.name + "\n";
        if (!r.pass)
            out += "       counterexample: " + r.counterexample + "\n";
    }
    out += rep.all_pass() ? "ALL PASS\n" : "FAILED\n";
    return out;
}

nlohmann::json algebra_to_json(const ZestedGroupAlgebra& z, const nlohmann::json& datum) {
    json omega = json::array();
    for (const auto& v : z.omega)
        omega.push_back(scalar_to_string(v));
    json out = {{"group", group_to_json(z.gamma)},
                {"grading_group", group_to_json(z.grading.group())},
                {"mlambda", z.mlambda},
                {"omega", omega},
                {"datum", datum}};
    if (z.rlambda) {
        json r = json::array();
        for (const auto& v : *z.rlambda)
            r.push_back(scalar_to_string(v));
        out["rlambda"] = r;
    }
    return out;
}

} // namespace zest
