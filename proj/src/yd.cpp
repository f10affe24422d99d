#include "zest/yd.hpp"

namespace zest {

Subgroup support(const YetterDrinfeldDatum& v) {
    Subgroup s = subgroup_generated(v.gamma, v.degrees);
    if (!s.is_normal())
        throw NotNormalSupport("support of the Yetter-Drinfeld datum is not normal");
    return s;
}

QuotientGroup universal_grading(const YetterDrinfeldDatum& v) {
    return quotient(v.gamma, support(v));
}

std::vector<std::vector<TorsionScalar>> braiding_matrix(const YetterDrinfeldDatum& v) {
    const auto* diag = std::get_if<DiagonalAction>(&v.action);
    if (!diag)
        throw NotDiagonal("braiding matrix requires a diagonal action");
    int th = v.basis_size();
    std::vector<std::vector<TorsionScalar>> q(static_cast<std::size_t>(th),
                                              std::vector<TorsionScalar>(static_cast<std::size_t>(th)));
    for (int i = 0; i < th; ++i)
        for (int j = 0; j < th; ++j)
            q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                diag->characters[static_cast<std::size_t>(j)].eval(v.degrees[static_cast<std::size_t>(i)]);
    return q;
}

int index_action(const YetterDrinfeldDatum& v, const GroupElement& g, int i) {
    const auto& gi = v.degrees[static_cast<std::size_t>(i)];
    GroupElement c = v.gamma.mul(v.gamma.mul(g, gi), v.gamma.inv(g));
    for (int j = 0; j < v.basis_size(); ++j)
        if (v.degrees[static_cast<std::size_t>(j)] == c)
            return j;
    throw NonDiagonalAction("conjugation moves a degree outside the degree set");
}

TorsionScalar action_scalar(const YetterDrinfeldDatum& v, const GroupElement& g, int i) {
    if (i < 0 || i >= v.basis_size())
        throw InvalidParameters("basis index out of range");
    if (const auto* diag = std::get_if<DiagonalAction>(&v.action))
        return diag->characters[static_cast<std::size_t>(i)].eval(g);
    const auto& perm = std::get<IndexPermutationAction>(v.action);
    if (v.gamma.is_identity(g))
        return TorsionScalar::one();
    Subgroup trivial = subgroup_generated(v.gamma, perm.trivially_acting_gens);
    if (!trivial.contains(g) || index_action(v, g, i) != i)
        throw NonDiagonalAction("the scalar action of this element is not determined by the datum");
    return TorsionScalar::one();
}

YetterDrinfeldDatum builtin_a12(int n) {
    if (n < 2)
        throw InvalidParameters("A(1|2) datum needs n >= 2");
    FiniteGroup gamma = FiniteGroup::product({2, n * n});
    GroupElement a1{{1, 0}};
    GroupElement a2{{0, 1}};
    YetterDrinfeldDatum v;
    v.gamma = gamma;
    v.degrees = {a1, gamma.pow(a2, n)};
    // chi_2 = nu_2 so chi_2(g_2) = zeta_n = q; chi_1 = nu_1 nu_2^{n-1} so
    // chi_1(g_2) = zeta_n^{n-1} = q^{-1} and chi_1(g_1) = -1.
    Character chi1(gamma, {1, n - 1});
    Character chi2(gamma, {0, 1});
    v.action = DiagonalAction{{chi1, chi2}};
    return v;
}

YetterDrinfeldDatum builtin_fk3(int ell, int k) {
    if (ell < 1 || k < 0 || k >= ell)
        throw InvalidParameters("FK3 datum needs 0 <= k < ell");
    FiniteGroup gamma = FiniteGroup::metacyclic33(ell);
    int n2k1 = 2 * k + 1;
    YetterDrinfeldDatum v;
    v.gamma = gamma;
    for (int i = 0; i < 3; ++i)
        v.degrees.push_back(GroupElement{{i, n2k1 % (2 * ell)}});
    Subgroup trivial = intersect(center(gamma), subgroup_generated(gamma, v.degrees));
    v.action = IndexPermutationAction{trivial.elems};
    // conjugation must permute the degree set for the index map to exist
    for (const auto& g : gamma.elements())
        for (int i = 0; i < 3; ++i)
            index_action(v, g, i);
    return v;
}

Subgroup default_gamma0_a12(const YetterDrinfeldDatum& v) {
    return subgroup_generated(v.gamma, {v.degrees.at(0)});
}

Subgroup default_gamma0_fk3(const YetterDrinfeldDatum& v) {
    Subgroup g0 = intersect(center(v.gamma), support(v));
    // regenerate from a single generator (the subgroup is cyclic <t^{2N}>)
    for (const auto& e : g0.elems)
        if (v.gamma.element_order(e) == g0.order()) {
            g0.gens = {e};
            break;
        }
    return g0;
}

} // namespace zest
