#pragma once

#include "zest/zesting.hpp"

namespace zest {

/// Structure constants of the zested algebra on the group-algebra skeleton:
/// twisted multiplication, associator, and (for braided data) the twisted
/// r-form, all tabulated densely over Gamma in canonical element order.
struct ZestedGroupAlgebra {
    FiniteGroup gamma;
    QuotientGroup grading;
    std::vector<int> mlambda;                          // |G|^2, index of g*h*lambda(|g|,|h|)
    std::vector<TorsionScalar> omega;                  // |G|^3
    std::optional<std::vector<TorsionScalar>> rlambda; // |G|^2 when braided

    int n() const { return gamma.order(); }

    GroupElement m(const GroupElement& a, const GroupElement& b) const {
        return gamma.elements()[static_cast<std::size_t>(
            mlambda[static_cast<std::size_t>(gamma.index_of(a)) * static_cast<std::size_t>(n()) +
                    static_cast<std::size_t>(gamma.index_of(b))])];
    }
    const TorsionScalar& assoc(const GroupElement& a, const GroupElement& b,
                               const GroupElement& c) const {
        std::size_t nn = static_cast<std::size_t>(n());
        return omega[(static_cast<std::size_t>(gamma.index_of(a)) * nn +
                      static_cast<std::size_t>(gamma.index_of(b))) * nn +
                     static_cast<std::size_t>(gamma.index_of(c))];
    }
    const TorsionScalar& r(const GroupElement& a, const GroupElement& b) const {
        return (*rlambda)[static_cast<std::size_t>(gamma.index_of(a)) * static_cast<std::size_t>(n()) +
                          static_cast<std::size_t>(gamma.index_of(b))];
    }
};

/// Tabulates mlambda and omega. Throws InvalidDatum (with the embedded
/// report) when the datum fails verification, unless force is set.
ZestedGroupAlgebra build_zested(const AssociativeZestingDatum& d, bool force = false);

/// As build_zested, additionally tabulating rlambda(g,h) = t(|g|,|h|) r0(g,h).
ZestedGroupAlgebra build_braided_zested(const BraidedZestingDatum& bd, bool force = false);

/// Coquasi-bialgebra axioms on the group-like basis: quasi-associativity,
/// unit, the pentagon identity for the associator w.r.t. the twisted
/// multiplication, and normalization. Exhaustive and exact.
VerificationReport verify_coquasi_bialgebra(const ZestedGroupAlgebra& z);

/// Coquasitriangularity of rlambda: the commutation axiom and both
/// omega-mixed hexagons, exhaustively on group-likes.
VerificationReport verify_coquasitriangular(const ZestedGroupAlgebra& z);

struct CharacterInducingResult {
    bool ok = false;
    std::string failure;                // offending representatives when !ok
    std::vector<TorsionScalar> values;  // lambda_g on G, canonical order, when ok
};

/// lambda_g(s) = r0(rep, g) r0(g, rep) over every representative of the coset
/// s; succeeds iff the value is representative-independent and multiplicative
/// in s.
CharacterInducingResult character_inducing(const BraidedZestingDatum& bd, const GroupElement& g);

} // namespace zest
