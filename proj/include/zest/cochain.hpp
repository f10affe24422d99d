#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zest/group.hpp"

namespace zest {

/// Coefficient operations for cochain values. Two instantiations are used:
/// elements of a finite abelian group, and nonzero torsion scalars.
struct GroupCoeff {
    FiniteGroup m;

    using Value = GroupElement;
    Value id() const { return m.identity(); }
    Value mul(const Value& a, const Value& b) const { return m.mul(a, b); }
    Value inv(const Value& a) const { return m.inv(a); }
    Value pow(const Value& a, int k) const { return m.pow(a, k); }
    bool eq(const Value& a, const Value& b) const { return a == b; }
    std::vector<Value> elements() const { return m.elements(); }
    std::string str(const Value& a) const { return m.str(a); }
};

struct UnityCoeff {
    /// Enumeration order: the finite subgroup mu_order (identity-first);
    /// order 0 means enumeration is unavailable (the full torsion group).
    std::int64_t mu_order = 0;

    using Value = TorsionScalar;
    Value id() const { return TorsionScalar::one(); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value inv(const Value& a) const { return a.inverse(); }
    Value pow(const Value& a, int k) const { return a.pow(k); }
    bool eq(const Value& a, const Value& b) const { return a == b; }
    std::vector<Value> elements() const {
        if (mu_order <= 0)
            throw BudgetExceeded("cannot enumerate the full group of roots of unity");
        return roots_of_unity(mu_order);
    }
    std::string str(const Value& a) const { return a.str(); }
};

/// Normalized n-cochain on a group with a dense value table over G^n in
/// canonical element order. Construction rejects tables that are not
/// normalized (identity value whenever some argument is the group identity).
template <typename Coeff>
class Cochain {
public:
    using Value = typename Coeff::Value;

    Cochain(int arity, FiniteGroup domain, Coeff coeff, std::vector<Value> table)
        : arity_(arity), domain_(std::move(domain)), coeff_(std::move(coeff)), table_(std::move(table)) {
        if (arity_ < 1 || arity_ > 4)
            throw InvalidParameters("cochain arity must be in 1..4");
        std::size_t expect = 1;
        for (int i = 0; i < arity_; ++i)
            expect *= static_cast<std::size_t>(domain_.order());
        if (table_.size() != expect)
            throw InvalidParameters("cochain table has wrong size");
        check_normalized();
    }

    static Cochain constant_identity(int arity, const FiniteGroup& domain, const Coeff& coeff) {
        std::size_t sz = 1;
        for (int i = 0; i < arity; ++i)
            sz *= static_cast<std::size_t>(domain.order());
        return Cochain(arity, domain, coeff, std::vector<Value>(sz, coeff.id()));
    }

    int arity() const { return arity_; }
    const FiniteGroup& domain() const { return domain_; }
    const Coeff& coeff() const { return coeff_; }
    const std::vector<Value>& table() const { return table_; }

    const Value& at(const std::vector<GroupElement>& args) const {
        return table_[flat_index(args)];
    }
    const Value& at(const GroupElement& a, const GroupElement& b) const {
        return table_[static_cast<std::size_t>(domain_.index_of(a)) * static_cast<std::size_t>(domain_.order()) +
                      static_cast<std::size_t>(domain_.index_of(b))];
    }
    const Value& at(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
        std::size_t n = static_cast<std::size_t>(domain_.order());
        return table_[(static_cast<std::size_t>(domain_.index_of(a)) * n +
                       static_cast<std::size_t>(domain_.index_of(b))) * n +
                      static_cast<std::size_t>(domain_.index_of(c))];
    }

    std::size_t flat_index(const std::vector<GroupElement>& args) const {
        if (static_cast<int>(args.size()) != arity_)
            throw InvalidParameters("wrong number of cochain arguments");
        std::size_t idx = 0;
        for (const auto& a : args)
            idx = idx * static_cast<std::size_t>(domain_.order()) +
                  static_cast<std::size_t>(domain_.index_of(a));
        return idx;
    }

    bool is_identity() const {
        for (const auto& v : table_)
            if (!coeff_.eq(v, coeff_.id()))
                return false;
        return true;
    }

    bool operator==(const Cochain& other) const {
        if (arity_ != other.arity_ || !(domain_ == other.domain_) || table_.size() != other.table_.size())
            return false;
        for (std::size_t i = 0; i < table_.size(); ++i)
            if (!coeff_.eq(table_[i], other.table_[i]))
                return false;
        return true;
    }

    /// Pointwise product / quotient.
    Cochain operator*(const Cochain& other) const {
        std::vector<Value> t = table_;
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] = coeff_.mul(t[i], other.table_[i]);
        return Cochain(arity_, domain_, coeff_, std::move(t));
    }
    Cochain inverse() const {
        std::vector<Value> t = table_;
        for (auto& v : t)
            v = coeff_.inv(v);
        return Cochain(arity_, domain_, coeff_, std::move(t));
    }

private:
    void check_normalized() const {
        int n = domain_.order();
        std::vector<int> idx(static_cast<std::size_t>(arity_), 0);
        std::size_t flat = 0;
        std::size_t total = table_.size();
        for (flat = 0; flat < total; ++flat) {
            std::size_t rest = flat;
            bool has_id = false;
            for (int i = arity_ - 1; i >= 0; --i) {
                idx[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
            }
            for (int i = 0; i < arity_; ++i)
                if (idx[static_cast<std::size_t>(i)] == 0)
                    has_id = true;
            if (has_id && !coeff_.eq(table_[flat], coeff_.id()))
                throw InvalidParameters("cochain is not normalized");
        }
    }

    int arity_;
    FiniteGroup domain_;
    Coeff coeff_;
    std::vector<Value> table_;
};

using ScalarCochain = Cochain<UnityCoeff>;
using GroupValuedCochain = Cochain<GroupCoeff>;

/// Standard group cohomology coboundary with trivial action. Input arity <= 3.
template <typename Coeff>
Cochain<Coeff> delta(const Cochain<Coeff>& c);

/// True iff delta(c) is the constant identity cochain.
template <typename Coeff>
bool is_cocycle(const Cochain<Coeff>& c);

/// Standard cyclic cochains on C_N with values in an abelian coefficient
/// group: beta_nu(i) = nu^i, lambda^(nu)(i,j) = nu iff i+j >= N,
/// omega^(q)(i,j,k) = q^k iff i+j >= N, theta^(nu)(i,j,k,l) = nu iff
/// i+j >= N and k+l >= N.
template <typename Coeff>
Cochain<Coeff> std_beta(const typename Coeff::Value& nu, int n, const Coeff& coeff);
template <typename Coeff>
Cochain<Coeff> std_lambda2(const typename Coeff::Value& nu, int n, const Coeff& coeff);
template <typename Coeff>
Cochain<Coeff> std_omega3(const typename Coeff::Value& q, int n, const Coeff& coeff);
template <typename Coeff>
Cochain<Coeff> std_theta4(const typename Coeff::Value& nu, int n, const Coeff& coeff);

template <typename Coeff>
struct CohomologyClasses {
    int class_count = 0;
    /// Lexicographically minimal cocycle of each class, deterministic order.
    std::vector<Cochain<Coeff>> representatives;
};

/// Brute-force cohomology oracle: enumerates all normalized n-cocycles over a
/// finite coefficient group and partitions them by coboundary equivalence.
/// Throws BudgetExceeded when the enumeration would exceed `budget` cochains.
template <typename Coeff>
CohomologyClasses<Coeff> enumerate_cohomology(int arity, const FiniteGroup& g, const Coeff& coeff,
                                              std::uint64_t budget = 20'000'000);

/// Brute-force cohomologous test: searches for an (n-1)-cochain b with
/// delta(b) = c1 / c2.
template <typename Coeff>
bool cohomologous(const Cochain<Coeff>& c1, const Cochain<Coeff>& c2,
                  std::uint64_t budget = 20'000'000);

extern template class Cochain<GroupCoeff>;
extern template class Cochain<UnityCoeff>;

} // namespace zest
