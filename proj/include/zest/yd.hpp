#pragma once

#include <variant>
#include <vector>

#include "zest/group.hpp"

namespace zest {

/// Diagonal action: the group acts on basis vector x_i through the character chi_i.
struct DiagonalAction {
    std::vector<Character> characters;
};

/// Action by index permutation induced by conjugation on the degrees, with a
/// declared set of central elements that act trivially. The scalar part of
/// the action is only defined on those elements.
struct IndexPermutationAction {
    std::vector<GroupElement> trivially_acting_gens;
};

/// Degrees and action data for the skew-primitive generators of a pointed
/// Hopf algebra B # kGamma. Only what the zesting construction consumes is
/// stored: the degree set, the support, and enough of the action to evaluate
/// the centrality condition.
struct YetterDrinfeldDatum {
    FiniteGroup gamma;
    std::vector<GroupElement> degrees;
    std::variant<DiagonalAction, IndexPermutationAction> action;

    int basis_size() const { return static_cast<int>(degrees.size()); }
    bool is_diagonal() const { return std::holds_alternative<DiagonalAction>(action); }
};

/// Subgroup generated by the degrees; throws NotNormalSupport if it is not
/// normal in gamma.
Subgroup support(const YetterDrinfeldDatum& v);

/// Gamma / supp(V) with the grading projection.
QuotientGroup universal_grading(const YetterDrinfeldDatum& v);

/// q_ij = chi_j(g_i), diagonal case only.
std::vector<std::vector<TorsionScalar>> braiding_matrix(const YetterDrinfeldDatum& v);

/// For the IndexPermutation action: the index j with g g_i g^{-1} = g_j.
/// Throws NonDiagonalAction if conjugation leaves the degree set.
int index_action(const YetterDrinfeldDatum& v, const GroupElement& g, int i);

/// The scalar by which g acts on x_i. Diagonal case: chi_i(g). Index
/// permutation case: defined (and equal to 1) only for declared
/// trivially-acting elements fixing the index.
TorsionScalar action_scalar(const YetterDrinfeldDatum& v, const GroupElement& g, int i);

/// Built-in A(1|2)-type datum over C_2 x C_{n^2}: degrees g_1 = a1,
/// g_2 = a2^n, diagonal characters realizing the braiding matrix
/// ((-1, 1), (q^{-1}, q)) with q = zeta_n.
YetterDrinfeldDatum builtin_a12(int n);

/// Built-in FK_3 datum over G_{3,ell}: degrees g_i = s^i t^{2k+1} with the
/// conjugation index action; central elements of <t^2> inside the support
/// are declared trivially acting.
YetterDrinfeldDatum builtin_fk3(int ell, int k);

/// The default central subgroup Gamma_0 for the built-in families:
/// <g_1> for A(1|2), Z(Gamma) ∩ supp(V) for FK_3.
Subgroup default_gamma0_a12(const YetterDrinfeldDatum& v);
Subgroup default_gamma0_fk3(const YetterDrinfeldDatum& v);

} // namespace zest
