#include "zest/coquasi.hpp"

#include <numeric>

namespace zest {

namespace {

std::string triple_str(const FiniteGroup& g, const GroupElement& a, const GroupElement& b,
                       const GroupElement& c) {
    return "(" + g.str(a) + ", " + g.str(b) + ", " + g.str(c) + ")";
}

} // namespace

ZestedGroupAlgebra build_zested(const AssociativeZestingDatum& d, bool force) {
    if (!force) {
        VerificationReport rep = verify_assoc_datum(d);
        if (!rep.all_pass())
            throw InvalidDatum(std::move(rep));
    }
    const FiniteGroup& gamma = d.yd.gamma;
    std::size_t nn = static_cast<std::size_t>(gamma.order());
    const auto& elems = gamma.elements();

    ZestedGroupAlgebra z{gamma, d.grading, {}, {}, std::nullopt};
    z.mlambda.resize(nn * nn);
    z.omega.resize(nn * nn * nn);
    std::vector<GroupElement> proj(nn);
    for (std::size_t i = 0; i < nn; ++i)
        proj[i] = d.grading.project(elems[i]);

    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
            GroupElement p = gamma.mul(gamma.mul(elems[i], elems[j]), d.lambda.at(proj[i], proj[j]));
            z.mlambda[i * nn + j] = gamma.index_of(p);
        }
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
            const Character& chi = d.phi.at(d.lambda.at(proj[i], proj[j]));
            for (std::size_t k = 0; k < nn; ++k)
                z.omega[(i * nn + j) * nn + k] =
                    d.omega.at(proj[i], proj[j], proj[k]) * chi.eval(elems[k]);
        }
    return z;
}

ZestedGroupAlgebra build_braided_zested(const BraidedZestingDatum& bd, bool force) {
    if (!force) {
        VerificationReport rep = verify_braided_datum(bd);
        if (!rep.all_pass())
            throw InvalidDatum(std::move(rep));
    }
    ZestedGroupAlgebra z = build_zested(bd.assoc, true);
    std::size_t nn = static_cast<std::size_t>(z.n());
    const auto& elems = z.gamma.elements();
    std::vector<TorsionScalar> r(nn * nn);
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            r[i * nn + j] = bd.t_cochain.at(z.grading.project(elems[i]), z.grading.project(elems[j])) *
                            bd.r0.eval(elems[i], elems[j]);
    z.rlambda = std::move(r);
    return z;
}

VerificationReport verify_coquasi_bialgebra(const ZestedGroupAlgebra& z) {
    VerificationReport rep;
    const FiniteGroup& g = z.gamma;
    std::size_t nn = static_cast<std::size_t>(z.n());
    const auto& elems = g.elements();
    const auto& mt = z.mlambda;

    {
        CheckRow row{"quasi-associativity", true, ""};
        for (std::size_t a = 0; a < nn && row.pass; ++a)
            for (std::size_t b = 0; b < nn && row.pass; ++b)
                for (std::size_t c = 0; c < nn; ++c) {
                    std::size_t lhs = static_cast<std::size_t>(
                        mt[static_cast<std::size_t>(mt[a * nn + b]) * nn + c]);
                    std::size_t rhs = static_cast<std::size_t>(
                        mt[a * nn + static_cast<std::size_t>(mt[b * nn + c])]);
                    if (lhs != rhs) {
                        row.pass = false;
                        row.counterexample = triple_str(g, elems[a], elems[b], elems[c]) +
                                             ": (ab)c = " + g.str(elems[lhs]) + ", a(bc) = " +
                                             g.str(elems[rhs]);
                        break;
                    }
                }
        rep.rows.push_back(row);
    }

    {
        CheckRow row{"unit", true, ""};
        for (std::size_t a = 0; a < nn; ++a)
            if (static_cast<std::size_t>(mt[a]) != a || static_cast<std::size_t>(mt[a * nn]) != a) {
                row.pass = false;
                row.counterexample = "1 is not a two-sided unit at " + g.str(elems[a]);
                break;
            }
        rep.rows.push_back(row);
    }

    {
        CheckRow row{"associator nonzero", true, ""};
        for (std::size_t f = 0; f < z.omega.size(); ++f)
            if (z.omega[f].is_zero()) {
                row.pass = false;
                row.counterexample = "associator vanishes at flat index " + std::to_string(f);
                break;
            }
        rep.rows.push_back(row);
    }

    {
        CheckRow row{"normalization", true, ""};
        for (std::size_t a = 0; a < nn && row.pass; ++a)
            for (std::size_t b = 0; b < nn; ++b) {
                if (!z.omega[a * nn + b].is_one() || !z.omega[a * nn * nn + b].is_one() ||
                    !z.omega[(a * nn + b) * nn].is_one()) {
                    row.pass = false;
                    row.counterexample = "associator not normalized at (" + g.str(elems[a]) + ", " +
                                         g.str(elems[b]) + ") with a unit slot";
                    break;
                }
            }
        rep.rows.push_back(row);
    }

    {
        CheckRow row{"pentagon", true, ""};
        bool has_zero = false;
        for (const auto& v : z.omega)
            if (v.is_zero())
                has_zero = true;
        if (has_zero) {
            row.pass = false;
            row.counterexample = "associator has a zero entry, pentagon cannot hold";
        } else {
            // pack exponents as integers mod the common denominator so the
            // |G|^4 loop stays cheap
            std::int64_t L = 1;
            for (const auto& v : z.omega)
                L = std::lcm(L, v.den());
            std::vector<std::int32_t> e(z.omega.size());
            for (std::size_t f = 0; f < z.omega.size(); ++f)
                e[f] = static_cast<std::int32_t>((z.omega[f].num() * (L / z.omega[f].den())) % L);
            for (std::size_t a = 0; a < nn && row.pass; ++a)
                for (std::size_t b = 0; b < nn && row.pass; ++b) {
                    std::size_t mab = static_cast<std::size_t>(mt[a * nn + b]);
                    for (std::size_t c = 0; c < nn && row.pass; ++c) {
                        std::int64_t r1 = e[(a * nn + b) * nn + c];
                        std::size_t mbc = static_cast<std::size_t>(mt[b * nn + c]);
                        for (std::size_t d = 0; d < nn; ++d) {
                            std::int64_t lhs = e[(mab * nn + c) * nn + d] +
                                               e[(a * nn + b) * nn +
                                                 static_cast<std::size_t>(mt[c * nn + d])];
                            std::int64_t rhs =
                                r1 + e[(a * nn + mbc) * nn + d] + e[(b * nn + c) * nn + d];
                            if ((lhs - rhs) % L != 0) {
                                row.pass = false;
                                row.counterexample =
                                    "(" + g.str(elems[a]) + ", " + g.str(elems[b]) + ", " +
                                    g.str(elems[c]) + ", " + g.str(elems[d]) + "): lhs=" +
                                    (z.omega[(mab * nn + c) * nn + d] *
                                     z.omega[(a * nn + b) * nn +
                                             static_cast<std::size_t>(mt[c * nn + d])])
                                        .str() +
                                    " rhs=" +
                                    (z.omega[(a * nn + b) * nn + c] *
                                     z.omega[(a * nn + mbc) * nn + d] *
                                     z.omega[(b * nn + c) * nn + d])
                                        .str();
                                break;
                            }
                        }
                    }
                }
        }
        rep.rows.push_back(row);
    }

    return rep;
}

VerificationReport verify_coquasitriangular(const ZestedGroupAlgebra& z) {
    VerificationReport rep;
    if (!z.rlambda) {
        rep.rows.push_back({"r-form present", false, "no r-form tabulated"});
        return rep;
    }
    const FiniteGroup& g = z.gamma;
    std::size_t nn = static_cast<std::size_t>(z.n());
    const auto& elems = g.elements();
    const auto& mt = z.mlambda;
    const auto& r = *z.rlambda;
    auto om = [&](std::size_t a, std::size_t b, std::size_t c) -> const TorsionScalar& {
        return z.omega[(a * nn + b) * nn + c];
    };

    {
        CheckRow row{"commutation", true, ""};
        for (std::size_t a = 0; a < nn && row.pass; ++a)
            for (std::size_t b = 0; b < nn; ++b) {
                if (r[a * nn + b].is_zero()) {
                    row.pass = false;
                    row.counterexample = "r(" + g.str(elems[a]) + ", " + g.str(elems[b]) +
                                         ") = 0 is not convolution invertible";
                    break;
                }
                if (mt[a * nn + b] != mt[b * nn + a]) {
                    row.pass = false;
                    row.counterexample =
                        "(" + g.str(elems[a]) + ", " + g.str(elems[b]) + "): m(a,b) = " +
                        g.str(elems[static_cast<std::size_t>(mt[a * nn + b])]) + " but m(b,a) = " +
                        g.str(elems[static_cast<std::size_t>(mt[b * nn + a])]);
                    break;
                }
            }
        rep.rows.push_back(row);
    }

    // r(h, kl) Omega^{-1}(h,k,l) = Omega(k,l,h) r(h,l) Omega^{-1}(k,h,l) r(h,k)
    {
        CheckRow row{"hexagon (split second slot)", true, ""};
        for (std::size_t h = 0; h < nn && row.pass; ++h)
            for (std::size_t k = 0; k < nn && row.pass; ++k)
                for (std::size_t l = 0; l < nn; ++l) {
                    std::size_t kl = static_cast<std::size_t>(mt[k * nn + l]);
                    TorsionScalar lhs = r[h * nn + kl] * om(h, k, l).inverse();
                    TorsionScalar rhs = om(k, l, h) * r[h * nn + l] * om(k, h, l).inverse() *
                                        r[h * nn + k];
                    if (!(lhs == rhs)) {
                        row.pass = false;
                        row.counterexample = triple_str(g, elems[h], elems[k], elems[l]) +
                                             ": lhs=" + lhs.str() + " rhs=" + rhs.str();
                        break;
                    }
                }
        rep.rows.push_back(row);
    }

    // r(hk, l) Omega(h,k,l) = Omega^{-1}(l,k,h) r(h,l) Omega(h,l,k) r(k,l)
    {
        CheckRow row{"hexagon (split first slot)", true, ""};
        for (std::size_t h = 0; h < nn && row.pass; ++h)
            for (std::size_t k = 0; k < nn && row.pass; ++k)
                for (std::size_t l = 0; l < nn; ++l) {
                    std::size_t hk = static_cast<std::size_t>(mt[h * nn + k]);
                    TorsionScalar lhs = r[hk * nn + l] * om(h, k, l);
                    TorsionScalar rhs = om(l, k, h).inverse() * r[h * nn + l] * om(h, l, k) *
                                        r[k * nn + l];
                    if (!(lhs == rhs)) {
                        row.pass = false;
                        row.counterexample = triple_str(g, elems[h], elems[k], elems[l]) +
                                             ": lhs=" + lhs.str() + " rhs=" + rhs.str();
                        break;
                    }
                }
        rep.rows.push_back(row);
    }

    return rep;
}

CharacterInducingResult character_inducing(const BraidedZestingDatum& bd, const GroupElement& g) {
    const FiniteGroup& grading = bd.assoc.grading_group();
    const FiniteGroup& gamma = bd.assoc.yd.gamma;
    CharacterInducingResult res;
    for (const auto& s : grading.elements()) {
        auto members = bd.assoc.grading.coset_members(s);
        TorsionScalar v = bd.r0.eval(members.front(), g) * bd.r0.eval(g, members.front());
        for (const auto& other : members) {
            TorsionScalar alt = bd.r0.eval(other, g) * bd.r0.eval(g, other);
            if (!(alt == v)) {
                res.ok = false;
                res.failure = "value on coset " + grading.str(s) + " depends on the representative: " +
                              gamma.str(members.front()) + " -> " + v.str() + " vs " +
                              gamma.str(other) + " -> " + alt.str();
                return res;
            }
        }
        res.values.push_back(v);
    }
    for (const auto& s1 : grading.elements())
        for (const auto& s2 : grading.elements()) {
            const TorsionScalar& a = res.values[static_cast<std::size_t>(grading.index_of(s1))];
            const TorsionScalar& b = res.values[static_cast<std::size_t>(grading.index_of(s2))];
            const TorsionScalar& ab =
                res.values[static_cast<std::size_t>(grading.index_of(grading.mul(s1, s2)))];
            if (!(ab == a * b)) {
                res.ok = false;
                res.failure = "values are not multiplicative at (" + grading.str(s1) + ", " +
                              grading.str(s2) + ")";
                return res;
            }
        }
    res.ok = true;
    return res;
}

} // namespace zest
