#include "zest/cochain.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zest {

template class Cochain<GroupCoeff>;
template class Cochain<UnityCoeff>;

template <typename Coeff>
Cochain<Coeff> delta(const Cochain<Coeff>& c) {
    if (c.arity() >= 4)
        throw ArityTooHigh("coboundary is only computed up to arity-3 inputs");
    const FiniteGroup& g = c.domain();
    const Coeff& coeff = c.coeff();
    int d = c.arity();
    int n = g.order();
    std::size_t out_size = 1;
    for (int i = 0; i <= d; ++i)
        out_size *= static_cast<std::size_t>(n);
    std::vector<typename Coeff::Value> out(out_size, coeff.id());

    std::vector<GroupElement> args(static_cast<std::size_t>(d + 1));
    for (std::size_t flat = 0; flat < out_size; ++flat) {
        std::size_t rest = flat;
        for (int i = d; i >= 0; --i) {
            args[static_cast<std::size_t>(i)] = g.elements()[rest % static_cast<std::size_t>(n)];
            rest /= static_cast<std::size_t>(n);
        }
        // alternating product: drop-first, merge adjacent pairs, drop-last
        typename Coeff::Value v = coeff.id();
        for (int term = 0; term <= d + 1; ++term) {
            std::vector<GroupElement> sub;
            sub.reserve(static_cast<std::size_t>(d));
            if (term == 0) {
                sub.assign(args.begin() + 1, args.end());
            } else if (term == d + 1) {
                sub.assign(args.begin(), args.end() - 1);
            } else {
                for (int i = 0; i <= d; ++i) {
                    if (i == term - 1)
                        sub.push_back(g.mul(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i + 1)]));
                    else if (i != term)
                        sub.push_back(args[static_cast<std::size_t>(i)]);
                }
            }
            const auto& cv = c.at(sub);
            v = coeff.mul(v, term % 2 == 0 ? cv : coeff.inv(cv));
        }
        out[flat] = v;
    }
    return Cochain<Coeff>(d + 1, g, coeff, std::move(out));
}

template <typename Coeff>
bool is_cocycle(const Cochain<Coeff>& c) {
    return delta(c).is_identity();
}

template <typename Coeff>
Cochain<Coeff> std_beta(const typename Coeff::Value& nu, int n, const Coeff& coeff) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    std::vector<typename Coeff::Value> t;
    t.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t.push_back(coeff.pow(nu, i));
    return Cochain<Coeff>(1, g, coeff, std::move(t));
}

template <typename Coeff>
Cochain<Coeff> std_lambda2(const typename Coeff::Value& nu, int n, const Coeff& coeff) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    std::vector<typename Coeff::Value> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), coeff.id());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j >= n)
                t[static_cast<std::size_t>(i * n + j)] = nu;
    return Cochain<Coeff>(2, g, coeff, std::move(t));
}

template <typename Coeff>
Cochain<Coeff> std_omega3(const typename Coeff::Value& q, int n, const Coeff& coeff) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    std::size_t nn = static_cast<std::size_t>(n);
    std::vector<typename Coeff::Value> t(nn * nn * nn, coeff.id());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (i + j >= n)
                    t[(static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)) * nn +
                      static_cast<std::size_t>(k)] = coeff.pow(q, k);
    return Cochain<Coeff>(3, g, coeff, std::move(t));
}

template <typename Coeff>
Cochain<Coeff> std_theta4(const typename Coeff::Value& nu, int n, const Coeff& coeff) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    std::size_t nn = static_cast<std::size_t>(n);
    std::vector<typename Coeff::Value> t(nn * nn * nn * nn, coeff.id());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (i + j >= n && k + l >= n)
                        t[((static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)) * nn +
                           static_cast<std::size_t>(k)) * nn + static_cast<std::size_t>(l)] = nu;
    return Cochain<Coeff>(4, g, coeff, std::move(t));
}

// ---------------------------------------------------------------------------
// Brute-force cohomology oracle. Internally all scans work over value
// *indices* into the coefficient element list, with precomputed index tables.

namespace {

struct CoeffIndexTable {
    int m = 0;
    std::vector<int> mul; // m*m
    std::vector<int> inv; // m

    template <typename Coeff>
    static CoeffIndexTable build(const Coeff& coeff) {
        auto elems = coeff.elements();
        CoeffIndexTable t;
        t.m = static_cast<int>(elems.size());
        auto index_of = [&](const typename Coeff::Value& v) {
            for (int i = 0; i < t.m; ++i)
                if (coeff.eq(elems[static_cast<std::size_t>(i)], v))
                    return i;
            throw Error("internal: coefficient value not in enumeration");
        };
        t.mul.resize(static_cast<std::size_t>(t.m) * static_cast<std::size_t>(t.m));
        t.inv.resize(static_cast<std::size_t>(t.m));
        for (int i = 0; i < t.m; ++i) {
            t.inv[static_cast<std::size_t>(i)] = index_of(coeff.inv(elems[static_cast<std::size_t>(i)]));
            for (int j = 0; j < t.m; ++j)
                t.mul[static_cast<std::size_t>(i * t.m + j)] =
                    index_of(coeff.mul(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
        }
        return t;
    }
};

// For input arity d over a group of order n: per output tuple of delta, the
// list of (input flat index, inverted?) factors.
struct DeltaPlan {
    std::size_t out_size = 0;
    std::vector<std::pair<std::size_t, bool>> terms; // (d+2) per output tuple
    int terms_per_out = 0;

    DeltaPlan(const FiniteGroup& g, int d) {
        int n = g.order();
        std::vector<int> gtab(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                gtab[static_cast<std::size_t>(i * n + j)] = g.index_of(
                    g.mul(g.elements()[static_cast<std::size_t>(i)], g.elements()[static_cast<std::size_t>(j)]));

        out_size = 1;
        for (int i = 0; i <= d; ++i)
            out_size *= static_cast<std::size_t>(n);
        terms_per_out = d + 2;
        terms.reserve(out_size * static_cast<std::size_t>(terms_per_out));

        std::vector<int> args(static_cast<std::size_t>(d + 1));
        for (std::size_t flat = 0; flat < out_size; ++flat) {
            std::size_t rest = flat;
            for (int i = d; i >= 0; --i) {
                args[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
            }
            for (int term = 0; term <= d + 1; ++term) {
                std::size_t in = 0;
                for (int i = 0; i <= d; ++i) {
                    int digit;
                    if (term == 0) {
                        if (i == 0)
                            continue;
                        digit = args[static_cast<std::size_t>(i)];
                    } else if (term == d + 1) {
                        if (i == d)
                            continue;
                        digit = args[static_cast<std::size_t>(i)];
                    } else {
                        if (i == term)
                            continue;
                        digit = i == term - 1
                                    ? gtab[static_cast<std::size_t>(args[static_cast<std::size_t>(i)] * n +
                                                                    args[static_cast<std::size_t>(i + 1)])]
                                    : args[static_cast<std::size_t>(i)];
                    }
                    in = in * static_cast<std::size_t>(n) + static_cast<std::size_t>(digit);
                }
                terms.push_back({in, term % 2 == 1});
            }
        }
    }

    // Evaluate one output entry of delta(c) as a value index.
    int eval(const std::vector<int>& table, const CoeffIndexTable& ct, std::size_t out_flat) const {
        int v = 0;
        const auto* t = terms.data() + out_flat * static_cast<std::size_t>(terms_per_out);
        for (int k = 0; k < terms_per_out; ++k) {
            int f = table[t[k].first];
            if (t[k].second)
                f = ct.inv[static_cast<std::size_t>(f)];
            v = ct.mul[static_cast<std::size_t>(v * ct.m + f)];
        }
        return v;
    }
};

// Free (non-normalized) positions of a d-cochain table: tuples avoiding the
// identity in every slot.
std::vector<std::size_t> free_positions(int n, int d) {
    std::size_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= static_cast<std::size_t>(n);
    std::vector<std::size_t> out;
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        bool has_id = false;
        for (int i = 0; i < d; ++i) {
            if (rest % static_cast<std::size_t>(n) == 0)
                has_id = true;
            rest /= static_cast<std::size_t>(n);
        }
        if (!has_id)
            out.push_back(flat);
    }
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t budget) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > budget / (base == 0 ? 1 : base) + 1)
            return budget + 1;
        v *= base;
        if (v > budget)
            return budget + 1;
    }
    return v;
}

// Runs fn on every assignment of value indices to the free positions of a
// d-cochain (all other entries identity), in odometer order.
template <typename Fn>
void scan_cochains(int n, int d, int m, std::uint64_t budget, Fn&& fn) {
    auto frees = free_positions(n, d);
    if (checked_pow(static_cast<std::uint64_t>(m), frees.size(), budget) > budget)
        throw BudgetExceeded("cochain enumeration exceeds the configured budget");
    std::size_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= static_cast<std::size_t>(n);
    std::vector<int> table(total, 0);
    std::vector<int> digits(frees.size(), 0);
    for (;;) {
        fn(table);
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0) {
            std::size_t ui = static_cast<std::size_t>(i);
            if (++digits[ui] < m) {
                table[frees[ui]] = digits[ui];
                break;
            }
            digits[ui] = 0;
            table[frees[ui]] = 0;
            --i;
        }
        if (i < 0)
            break;
    }
}

} // namespace

template <typename Coeff>
CohomologyClasses<Coeff> enumerate_cohomology(int arity, const FiniteGroup& g, const Coeff& coeff,
                                              std::uint64_t budget) {
    if (arity != 2 && arity != 3)
        throw InvalidParameters("cohomology oracle supports arity 2 and 3");
    auto elems = coeff.elements();
    CoeffIndexTable ct = CoeffIndexTable::build(coeff);
    DeltaPlan plan(g, arity);
    DeltaPlan bplan(g, arity - 1);

    // all normalized cocycles, as index tables in enumeration order
    std::vector<std::vector<int>> cocycles;
    scan_cochains(g.order(), arity, ct.m, budget, [&](const std::vector<int>& table) {
        for (std::size_t o = 0; o < plan.out_size; ++o)
            if (plan.eval(table, ct, o) != 0)
                return;
        cocycles.push_back(table);
    });

    // the full set of coboundaries
    std::set<std::vector<int>> boundaries;
    scan_cochains(g.order(), arity - 1, ct.m, budget, [&](const std::vector<int>& table) {
        std::vector<int> db(bplan.out_size);
        for (std::size_t o = 0; o < bplan.out_size; ++o)
            db[o] = bplan.eval(table, ct, o);
        boundaries.insert(std::move(db));
    });

    // class key: lexicographically minimal member of z * B
    std::map<std::vector<int>, std::vector<int>> classes; // key -> minimal rep (same thing)
    for (const auto& z : cocycles) {
        std::vector<int> best;
        for (const auto& b : boundaries) {
            std::vector<int> zb(z.size());
            for (std::size_t i = 0; i < z.size(); ++i)
                zb[i] = ct.mul[static_cast<std::size_t>(z[i] * ct.m + b[i])];
            if (best.empty() || zb < best)
                best = std::move(zb);
        }
        classes.emplace(best, best);
    }

    CohomologyClasses<Coeff> out;
    out.class_count = static_cast<int>(classes.size());
    for (const auto& [key, rep] : classes) {
        std::vector<typename Coeff::Value> vals;
        vals.reserve(rep.size());
        for (int idx : rep)
            vals.push_back(elems[static_cast<std::size_t>(idx)]);
        out.representatives.emplace_back(arity, g, coeff, std::move(vals));
    }
    return out;
}

template <typename Coeff>
bool cohomologous(const Cochain<Coeff>& c1, const Cochain<Coeff>& c2, std::uint64_t budget) {
    if (c1.arity() != c2.arity() || !(c1.domain() == c2.domain()))
        throw InvalidParameters("cohomologous needs cochains on the same domain and arity");
    const Coeff& coeff = c1.coeff();
    auto elems = coeff.elements();
    CoeffIndexTable ct = CoeffIndexTable::build(coeff);
    auto index_of = [&](const typename Coeff::Value& v) {
        for (int i = 0; i < ct.m; ++i)
            if (coeff.eq(elems[static_cast<std::size_t>(i)], v))
                return i;
        throw Error("cochain value outside the finite coefficient enumeration");
    };
    std::vector<int> target(c1.table().size());
    for (std::size_t i = 0; i < target.size(); ++i)
        target[i] = ct.mul[static_cast<std::size_t>(
            index_of(c1.table()[i]) * ct.m +
            ct.inv[static_cast<std::size_t>(index_of(c2.table()[i]))])];

    DeltaPlan plan(c1.domain(), c1.arity() - 1);
    bool found = false;
    scan_cochains(c1.domain().order(), c1.arity() - 1, ct.m, budget, [&](const std::vector<int>& table) {
        if (found)
            return;
        for (std::size_t o = 0; o < plan.out_size; ++o)
            if (plan.eval(table, ct, o) != target[o])
                return;
        found = true;
    });
    return found;
}

// explicit instantiations
template Cochain<GroupCoeff> delta(const Cochain<GroupCoeff>&);
template Cochain<UnityCoeff> delta(const Cochain<UnityCoeff>&);
template bool is_cocycle(const Cochain<GroupCoeff>&);
template bool is_cocycle(const Cochain<UnityCoeff>&);
template Cochain<GroupCoeff> std_beta(const GroupElement&, int, const GroupCoeff&);
template Cochain<UnityCoeff> std_beta(const TorsionScalar&, int, const UnityCoeff&);
template Cochain<GroupCoeff> std_lambda2(const GroupElement&, int, const GroupCoeff&);
template Cochain<UnityCoeff> std_lambda2(const TorsionScalar&, int, const UnityCoeff&);
template Cochain<GroupCoeff> std_omega3(const GroupElement&, int, const GroupCoeff&);
template Cochain<UnityCoeff> std_omega3(const TorsionScalar&, int, const UnityCoeff&);
template Cochain<GroupCoeff> std_theta4(const GroupElement&, int, const GroupCoeff&);
template Cochain<UnityCoeff> std_theta4(const TorsionScalar&, int, const UnityCoeff&);
template CohomologyClasses<GroupCoeff> enumerate_cohomology(int, const FiniteGroup&, const GroupCoeff&, std::uint64_t);
template CohomologyClasses<UnityCoeff> enumerate_cohomology(int, const FiniteGroup&, const UnityCoeff&, std::uint64_t);
template bool cohomologous(const Cochain<GroupCoeff>&, const Cochain<GroupCoeff>&, std::uint64_t);
template bool cohomologous(const Cochain<UnityCoeff>&, const Cochain<UnityCoeff>&, std::uint64_t);

} // namespace zest
