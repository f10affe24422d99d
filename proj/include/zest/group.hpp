#pragma once

#include <map>
#include <string>
#include <vector>

#include "zest/scalar.hpp"

namespace zest {

/// Normal-form word of an element of a FiniteGroup. For cyclic(n) this is a
/// single residue, for products an exponent vector, for metacyclic33 the pair
/// (a, b) of the normal form s^a t^b.
struct GroupElement {
    std::vector<int> w;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

enum class GroupKind { Cyclic, Product, Metacyclic33 };

/// Small finite group with exact normal forms. Supported families: C_n,
/// products of cyclics, and the metacyclic groups G_{3,l} = <s,t | s^3 =
/// t^{2l} = 1, ts = s^2 t>. Elements are listed in lexicographic normal-form
/// order, identity first. Orders are capped at 256.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 256;

    /// Default-constructed: the trivial group C_1.
    FiniteGroup() : orders_{1} { build_elements(); }

    static FiniteGroup cyclic(int n);
    static FiniteGroup product(std::vector<int> orders);
    static FiniteGroup metacyclic33(int ell);

    GroupKind kind() const { return kind_; }
    int ell() const { return ell_; }
    /// Cyclic orders for cyclic/product groups.
    const std::vector<int>& orders() const { return orders_; }

    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    GroupElement identity() const;
    bool is_identity(const GroupElement& a) const { return a == identity(); }

    /// Index of an element in the canonical element list.
    int index_of(const GroupElement& a) const;
    /// Throws ForeignElement unless a is a valid normal form for this group.
    void check_member(const GroupElement& a) const;

    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement pow(const GroupElement& a, int k) const;
    int element_order(const GroupElement& a) const;

    bool is_abelian() const;
    /// Canonical generating set: the residue 1 for cyclics, unit vectors for
    /// products, {s, t} for metacyclic33.
    std::vector<GroupElement> generators() const;

    /// Cyclic orders of the abelianization w.r.t. its canonical generators.
    /// For metacyclic33 the abelianization is C_{2l} generated by the image of t.
    std::vector<int> ab_orders() const;
    /// Image of an element in the abelianization, as exponents of the
    /// canonical generators.
    std::vector<int> ab_project(const GroupElement& a) const;

    std::string str(const GroupElement& a) const;
    std::string str() const;

    bool operator==(const FiniteGroup& other) const {
        return kind_ == other.kind_ && orders_ == other.orders_ && ell_ == other.ell_;
    }

private:
    void build_elements();

    GroupKind kind_ = GroupKind::Cyclic;
    std::vector<int> orders_; // cyclic: {n}; product: factor orders
    int ell_ = 0;             // metacyclic33 only
    std::vector<GroupElement> elements_;
};

/// Linear character of a group, realized through its abelianization: the
/// value on the i-th canonical abelianization generator is ζ_{m_i}^{e_i}.
class Character {
public:
    Character(FiniteGroup domain, std::vector<int> exponents);

    static Character trivial(const FiniteGroup& g);

    const FiniteGroup& domain() const { return domain_; }
    const std::vector<int>& exponents() const { return exponents_; }

    TorsionScalar eval(const GroupElement& g) const;

    Character operator*(const Character& other) const;
    Character pow(int k) const;
    int order() const;

    bool operator==(const Character& other) const;

private:
    FiniteGroup domain_;
    std::vector<int> exponents_; // reduced mod ab_orders
};

inline TorsionScalar char_eval(const Character& chi, const GroupElement& g) { return chi.eval(g); }

/// Generators of the character group (dual basis of the abelianization).
std::vector<Character> character_group(const FiniteGroup& g);
/// Every character of g, in lexicographic exponent order.
std::vector<Character> all_characters(const FiniteGroup& g);

struct Subgroup {
    FiniteGroup parent;
    std::vector<GroupElement> elems; // sorted, canonical order
    std::vector<GroupElement> gens;

    int order() const { return static_cast<int>(elems.size()); }
    bool contains(const GroupElement& a) const;
    bool is_trivial() const { return elems.size() == 1; }
    bool is_normal() const;
    bool is_central() const;
};

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<GroupElement>& gens);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// {g^n : g in h}, as a subgroup (h must be abelian).
Subgroup power_subgroup(const Subgroup& h, int n);

/// Quotient of a group by a normal subgroup whose quotient is abelian. The
/// quotient is reported in its invariant-factor decomposition as a concrete
/// cyclic/product group, together with the projection map.
class QuotientGroup {
public:
    QuotientGroup(FiniteGroup parent, Subgroup normal);

    const FiniteGroup& parent() const { return parent_; }
    const Subgroup& kernel() const { return normal_; }
    /// The quotient as a concrete group (cyclic or product of cyclics).
    const FiniteGroup& group() const { return grading_; }

    /// Image of a parent element in group().
    GroupElement project(const GroupElement& a) const;
    /// Canonical representative in the parent of a quotient element.
    GroupElement representative(const GroupElement& q) const;
    /// All parent elements mapping onto q.
    std::vector<GroupElement> coset_members(const GroupElement& q) const;

private:
    FiniteGroup parent_;
    Subgroup normal_;
    FiniteGroup grading_;
    std::vector<GroupElement> proj_; // parent element index -> grading element
    std::vector<GroupElement> reps_; // grading element index -> canonical rep
};

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

} // namespace zest
