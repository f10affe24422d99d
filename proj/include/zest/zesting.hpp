#pragma once

#include <optional>
#include <string>

#include "zest/cochain.hpp"
#include "zest/yd.hpp"

namespace zest {

/// One named condition of a verification run. A failed check always carries
/// the first counterexample with both evaluated sides.
struct CheckRow {
    std::string name;
    bool pass = false;
    std::string counterexample; // empty iff pass
};

struct VerificationReport {
    std::vector<CheckRow> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass)
                return false;
        return true;
    }
    const CheckRow* find(const std::string& name) const {
        for (const auto& r : rows)
            if (r.name == name)
                return &r;
        return nullptr;
    }
};

struct InvalidDatum : Error {
    VerificationReport report;
    explicit InvalidDatum(VerificationReport r)
        : Error("zesting datum fails verification"), report(std::move(r)) {}
};

/// Homomorphism Phi: Gamma_0 -> characters of Gamma, tabulated on the whole
/// subgroup. Built from generator images by closure; construction fails when
/// the images do not extend to a well-defined homomorphism.
class PhiMap {
public:
    static std::optional<PhiMap> from_generator_images(const Subgroup& gamma0,
                                                       const std::vector<Character>& images);
    static PhiMap trivial(const Subgroup& gamma0);

    const Subgroup& gamma0() const { return gamma0_; }
    /// Phi(g); throws NotInGamma0 when g is outside the subgroup.
    const Character& at(const GroupElement& g) const;
    /// Generator images, aligned with gamma0().gens.
    const std::vector<Character>& generator_images() const { return images_; }

    bool operator==(const PhiMap& other) const;

private:
    Subgroup gamma0_;
    std::vector<Character> images_;
    std::vector<Character> table_; // aligned with gamma0_.elems
};

struct AssociativeZestingDatum {
    YetterDrinfeldDatum yd;
    QuotientGroup grading; // Gamma -> G (universal grading, optionally refined)
    Subgroup gamma0;
    PhiMap phi;
    GroupValuedCochain lambda; // arity 2 on G, values in Gamma_0 (inside Gamma)
    ScalarCochain omega;       // arity 3 on G

    const FiniteGroup& grading_group() const { return grading.group(); }
};

/// <gamma(g), h> = Phi(g)(h) for g in Gamma_0, h in Gamma.
TorsionScalar gamma_eval(const AssociativeZestingDatum& d, const GroupElement& g,
                         const GroupElement& h);

/// Runs every defining condition of an associative zesting datum and reports
/// one row per check. Mathematical failures are report rows, never throws.
VerificationReport verify_assoc_datum(const AssociativeZestingDatum& d);

/// The cyclic-grading construction: lambda = lambda^(nu), omega = omega^(q)
/// with q^N = <gamma(nu), nu>. Throws RootMismatch / NotCyclic on bad input.
AssociativeZestingDatum cyclic_zesting(const YetterDrinfeldDatum& yd, const QuotientGroup& grading,
                                       const Subgroup& gamma0, const PhiMap& phi,
                                       const GroupElement& nu, const TorsionScalar& q);

/// All homomorphisms Phi: Gamma_0 -> characters of Gamma satisfying the
/// centrality condition action(g on x_i) = Phi(g)(g_i), in deterministic order.
std::vector<PhiMap> phi_candidates(const YetterDrinfeldDatum& yd, const Subgroup& gamma0);

/// Coset representatives of Gamma_0 / Gamma_0^N as powers of the first
/// generator of Gamma_0.
std::vector<GroupElement> standard_nu_representatives(const FiniteGroup& gamma,
                                                      const Subgroup& gamma0, int n);

/// Cartesian enumeration Phi x nu x q of cyclic zesting data over the
/// universal grading. When nu_reps is given it overrides the standard coset
/// representatives (the A(1|2) family fixes nu = g_1).
std::vector<AssociativeZestingDatum> enumerate_cyclic_zestings(
    const YetterDrinfeldDatum& yd, const Subgroup& gamma0,
    const std::optional<std::vector<GroupElement>>& nu_reps = std::nullopt);

/// Bicharacter on an abelian group, stored on generator pairs and extended
/// bimultiplicatively.
class Bicharacter {
public:
    Bicharacter(FiniteGroup g, std::vector<std::vector<TorsionScalar>> gen_values);

    const FiniteGroup& group() const { return group_; }
    const std::vector<std::vector<TorsionScalar>>& generator_values() const { return gen_values_; }
    TorsionScalar eval(const GroupElement& a, const GroupElement& b) const;

private:
    FiniteGroup group_;
    std::vector<std::vector<TorsionScalar>> gen_values_;
};

struct BraidedZestingDatum {
    AssociativeZestingDatum assoc;
    Bicharacter r0;      // on Gamma
    ScalarCochain t_cochain; // arity 2 on G
};

/// Associative checks followed by the braided conditions: abelian grading,
/// symmetric lambda, r0/Phi compatibility, character-inducing lambda values,
/// BZ2 and BZ3 (with representative-independence recorded as its own check).
VerificationReport verify_braided_datum(const BraidedZestingDatum& bd);

/// The Z/4 example: Gamma = C4, r0(sigma,sigma) = i, G = C2, lambda(1,1) =
/// sigma^2, omega(1,1,1) = zeta, t(1,1) = eta.
BraidedZestingDatum builtin_z4(const TorsionScalar& zeta, const TorsionScalar& eta);

} // namespace zest
