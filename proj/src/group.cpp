#include "zest/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace zest {

namespace {

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

// 2^b mod 3: the conjugation exponent in G_{3,l} (t^b s t^{-b} = s^{2^b}).
int pow2mod3(int b) { return b % 2 == 0 ? 1 : 2; }

} // namespace

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1 || n > kMaxOrder)
        throw InvalidParameters("cyclic order out of range");
    FiniteGroup g;
    g.kind_ = GroupKind::Cyclic;
    g.orders_ = {n};
    g.build_elements();
    return g;
}

FiniteGroup FiniteGroup::product(std::vector<int> orders) {
    long long total = 1;
    for (int n : orders) {
        if (n < 1)
            throw InvalidParameters("cyclic factor order must be positive");
        total *= n;
        if (total > kMaxOrder)
            throw InvalidParameters("group order exceeds cap");
    }
    if (orders.empty())
        throw InvalidParameters("product needs at least one factor");
    FiniteGroup g;
    g.kind_ = GroupKind::Product;
    g.orders_ = std::move(orders);
    g.build_elements();
    return g;
}

FiniteGroup FiniteGroup::metacyclic33(int ell) {
    if (ell < 1 || 6 * ell > kMaxOrder)
        throw InvalidParameters("metacyclic33 parameter out of range");
    FiniteGroup g;
    g.kind_ = GroupKind::Metacyclic33;
    g.ell_ = ell;
    g.build_elements();
    return g;
}

void FiniteGroup::build_elements() {
    elements_.clear();
    if (kind_ == GroupKind::Metacyclic33) {
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 2 * ell_; ++b)
                elements_.push_back(GroupElement{{a, b}});
        return;
    }
    std::vector<int> w(orders_.size(), 0);
    for (;;) {
        elements_.push_back(GroupElement{w});
        int i = static_cast<int>(w.size()) - 1;
        while (i >= 0 && ++w[static_cast<std::size_t>(i)] == orders_[static_cast<std::size_t>(i)]) {
            w[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            break;
    }
    // lexicographic order needs most-significant digit first
    std::sort(elements_.begin(), elements_.end());
}

GroupElement FiniteGroup::identity() const {
    if (kind_ == GroupKind::Metacyclic33)
        return GroupElement{{0, 0}};
    return GroupElement{std::vector<int>(orders_.size(), 0)};
}

void FiniteGroup::check_member(const GroupElement& a) const {
    if (kind_ == GroupKind::Metacyclic33) {
        if (a.w.size() != 2 || a.w[0] < 0 || a.w[0] >= 3 || a.w[1] < 0 || a.w[1] >= 2 * ell_)
            throw ForeignElement("element is not a normal form of this metacyclic group");
        return;
    }
    if (a.w.size() != orders_.size())
        throw ForeignElement("element has wrong number of components");
    for (std::size_t i = 0; i < a.w.size(); ++i)
        if (a.w[i] < 0 || a.w[i] >= orders_[i])
            throw ForeignElement("element component out of range");
}

int FiniteGroup::index_of(const GroupElement& a) const {
    check_member(a);
    if (kind_ == GroupKind::Metacyclic33)
        return a.w[0] * 2 * ell_ + a.w[1];
    int idx = 0;
    for (std::size_t i = 0; i < a.w.size(); ++i)
        idx = idx * orders_[i] + a.w[i];
    return idx;
}

GroupElement FiniteGroup::mul(const GroupElement& a, const GroupElement& b) const {
    check_member(a);
    check_member(b);
    if (kind_ == GroupKind::Metacyclic33) {
        // s^a t^b . s^c t^d = s^{a + c 2^b} t^{b+d}
        int x = mod(a.w[0] + b.w[0] * pow2mod3(a.w[1]), 3);
        int y = mod(a.w[1] + b.w[1], 2 * ell_);
        return GroupElement{{x, y}};
    }
    GroupElement r = a;
    for (std::size_t i = 0; i < r.w.size(); ++i)
        r.w[i] = mod(r.w[i] + b.w[i], orders_[i]);
    return r;
}

GroupElement FiniteGroup::inv(const GroupElement& a) const {
    check_member(a);
    if (kind_ == GroupKind::Metacyclic33) {
        int x = mod(-a.w[0] * pow2mod3(a.w[1]), 3);
        int y = mod(-a.w[1], 2 * ell_);
        return GroupElement{{x, y}};
    }
    GroupElement r = a;
    for (std::size_t i = 0; i < r.w.size(); ++i)
        r.w[i] = mod(-r.w[i], orders_[i]);
    return r;
}

GroupElement FiniteGroup::pow(const GroupElement& a, int k) const {
    GroupElement base = k < 0 ? inv(a) : a;
    int e = k < 0 ? -k : k;
    GroupElement r = identity();
    for (int i = 0; i < e; ++i)
        r = mul(r, base);
    return r;
}

int FiniteGroup::element_order(const GroupElement& a) const {
    GroupElement x = a;
    int n = 1;
    while (!is_identity(x)) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const { return kind_ != GroupKind::Metacyclic33; }

std::vector<GroupElement> FiniteGroup::generators() const {
    if (kind_ == GroupKind::Metacyclic33)
        return {GroupElement{{1, 0}}, GroupElement{{0, 1}}};
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        GroupElement e = identity();
        if (orders_[i] > 1)
            e.w[i] = 1;
        gens.push_back(e);
    }
    return gens;
}

std::vector<int> FiniteGroup::ab_orders() const {
    if (kind_ == GroupKind::Metacyclic33)
        return {2 * ell_};
    return orders_;
}

std::vector<int> FiniteGroup::ab_project(const GroupElement& a) const {
    check_member(a);
    if (kind_ == GroupKind::Metacyclic33)
        return {a.w[1]}; // s maps to the identity in the abelianization
    return a.w;
}

std::string FiniteGroup::str(const GroupElement& a) const {
    check_member(a);
    if (kind_ == GroupKind::Metacyclic33)
        return "s^" + std::to_string(a.w[0]) + " t^" + std::to_string(a.w[1]);
    std::string out = "(";
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(a.w[i]);
    }
    return out + ")";
}

std::string FiniteGroup::str() const {
    switch (kind_) {
    case GroupKind::Cyclic:
        return "C" + std::to_string(orders_[0]);
    case GroupKind::Metacyclic33:
        return "G(3," + std::to_string(ell_) + ")";
    case GroupKind::Product: {
        std::string out;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i)
                out += "x";
            out += "C" + std::to_string(orders_[i]);
        }
        return out;
    }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Characters

Character::Character(FiniteGroup domain, std::vector<int> exponents)
    : domain_(std::move(domain)), exponents_(std::move(exponents)) {
    auto orders = domain_.ab_orders();
    if (exponents_.size() != orders.size())
        throw InvalidParameters("character exponent vector has wrong length");
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        exponents_[i] = mod(exponents_[i], orders[i]);
}

Character Character::trivial(const FiniteGroup& g) {
    return Character(g, std::vector<int>(g.ab_orders().size(), 0));
}

TorsionScalar Character::eval(const GroupElement& g) const {
    auto x = domain_.ab_project(g);
    auto orders = domain_.ab_orders();
    TorsionScalar v = TorsionScalar::one();
    for (std::size_t i = 0; i < x.size(); ++i)
        v = v * TorsionScalar::root(static_cast<std::int64_t>(exponents_[i]) * x[i], orders[i]);
    return v;
}

Character Character::operator*(const Character& other) const {
    if (!(domain_ == other.domain_))
        throw InvalidParameters("character product needs a common domain");
    std::vector<int> e = exponents_;
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += other.exponents_[i];
    return Character(domain_, e);
}

Character Character::pow(int k) const {
    std::vector<int> e = exponents_;
    auto orders = domain_.ab_orders();
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = mod(e[i] * mod(k, orders[i]), orders[i]);
    return Character(domain_, e);
}

int Character::order() const {
    auto orders = domain_.ab_orders();
    long long o = 1;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        o = std::lcm(o, orders[i] / std::gcd(orders[i], exponents_[i] == 0 ? orders[i] : exponents_[i]));
    return static_cast<int>(o);
}

bool Character::operator==(const Character& other) const {
    return domain_ == other.domain_ && exponents_ == other.exponents_;
}

std::vector<Character> character_group(const FiniteGroup& g) {
    auto orders = g.ab_orders();
    std::vector<Character> gens;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<int> e(orders.size(), 0);
        if (orders[i] > 1)
            e[i] = 1;
        gens.emplace_back(g, e);
    }
    return gens;
}

std::vector<Character> all_characters(const FiniteGroup& g) {
    auto orders = g.ab_orders();
    std::vector<Character> out;
    std::vector<int> e(orders.size(), 0);
    for (;;) {
        out.emplace_back(g, e);
        int i = static_cast<int>(e.size()) - 1;
        while (i >= 0 && ++e[static_cast<std::size_t>(i)] == orders[static_cast<std::size_t>(i)]) {
            e[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            break;
    }
    std::sort(out.begin(), out.end(), [](const Character& a, const Character& b) {
        return a.exponents() < b.exponents();
    });
    return out;
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(const GroupElement& a) const {
    return std::binary_search(elems.begin(), elems.end(), a);
}

bool Subgroup::is_normal() const {
    for (const auto& g : parent.elements()) {
        auto gi = parent.inv(g);
        for (const auto& h : elems)
            if (!contains(parent.mul(parent.mul(g, h), gi)))
                return false;
    }
    return true;
}

bool Subgroup::is_central() const {
    for (const auto& h : elems)
        for (const auto& g : parent.elements())
            if (!(parent.mul(g, h) == parent.mul(h, g)))
                return false;
    return true;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<GroupElement>& gens) {
    for (const auto& x : gens)
        g.check_member(x);
    std::set<GroupElement> closed{g.identity()};
    std::vector<GroupElement> work(closed.begin(), closed.end());
    while (!work.empty()) {
        GroupElement x = work.back();
        work.pop_back();
        for (const auto& s : gens) {
            GroupElement y = g.mul(x, s);
            if (closed.insert(y).second)
                work.push_back(y);
        }
    }
    Subgroup h;
    h.parent = g;
    h.elems.assign(closed.begin(), closed.end());
    h.gens = gens;
    return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return subgroup_generated(g, {}); }

Subgroup whole_group(const FiniteGroup& g) { return subgroup_generated(g, g.generators()); }

Subgroup center(const FiniteGroup& g) {
    std::vector<GroupElement> zs;
    for (const auto& z : g.elements()) {
        bool central = true;
        for (const auto& x : g.elements())
            if (!(g.mul(z, x) == g.mul(x, z))) {
                central = false;
                break;
            }
        if (central)
            zs.push_back(z);
    }
    Subgroup h;
    h.parent = g;
    h.elems = zs; // already sorted: elements() is ordered
    h.gens = zs;
    return h;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup h;
    h.parent = a.parent;
    std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                          std::back_inserter(h.elems));
    h.gens = h.elems;
    return h;
}

Subgroup power_subgroup(const Subgroup& h, int n) {
    std::set<GroupElement> pw;
    for (const auto& x : h.elems)
        pw.insert(h.parent.pow(x, n));
    Subgroup r;
    r.parent = h.parent;
    r.elems.assign(pw.begin(), pw.end());
    r.gens = r.elems;
    return r;
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

// Abstract abelian group given by an index multiplication table; identity is 0.
struct AbTable {
    std::vector<std::vector<int>> mul;

    int size() const { return static_cast<int>(mul.size()); }
    int pow(int a, int k) const {
        int r = 0;
        for (int i = 0; i < k; ++i)
            r = mul[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)];
        return r;
    }
    int order(int a) const {
        int x = a, n = 1;
        while (x != 0) {
            x = mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)];
            ++n;
        }
        return n;
    }
};

struct CosetData {
    AbTable quot;
    std::vector<int> coset_of; // element -> coset id
    std::vector<int> rep_of;   // coset id -> representative element
};

CosetData cosets_by_cyclic(const AbTable& t, int gen) {
    int n = t.size();
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<int> rep_of;
    for (int x = 0; x < n; ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0)
            continue;
        int cid = static_cast<int>(rep_of.size());
        rep_of.push_back(x);
        int y = x;
        do {
            coset_of[static_cast<std::size_t>(y)] = cid;
            y = t.mul[static_cast<std::size_t>(y)][static_cast<std::size_t>(gen)];
        } while (y != x);
    }
    CosetData cd;
    cd.coset_of = coset_of;
    cd.rep_of = rep_of;
    int m = static_cast<int>(rep_of.size());
    cd.quot.mul.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            cd.quot.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                coset_of[static_cast<std::size_t>(
                    t.mul[static_cast<std::size_t>(rep_of[static_cast<std::size_t>(i)])]
                         [static_cast<std::size_t>(rep_of[static_cast<std::size_t>(j)])])];
    return cd;
}

// Invariant-factor decomposition: a maximal-order element spans a direct
// cyclic factor, the rest comes from recursing on the quotient and lifting
// generators to representatives of the same order.
void decompose_abelian(const AbTable& t, std::vector<int>& factor_orders, std::vector<int>& gens) {
    if (t.size() == 1)
        return;
    int g1 = 1, d1 = t.order(1);
    for (int x = 2; x < t.size(); ++x) {
        int o = t.order(x);
        if (o > d1) {
            d1 = o;
            g1 = x;
        }
    }
    factor_orders.push_back(d1);
    gens.push_back(g1);
    CosetData cd = cosets_by_cyclic(t, g1);
    std::vector<int> sub_orders, sub_gens;
    decompose_abelian(cd.quot, sub_orders, sub_gens);
    for (std::size_t i = 0; i < sub_gens.size(); ++i) {
        int h = cd.rep_of[static_cast<std::size_t>(sub_gens[i])];
        int r = sub_orders[i];
        // h^r lands in <g1>; adjust by a power of g1 so the lift has order r
        int hr = t.pow(h, r);
        int x = 0;
        while (t.pow(g1, x) != hr)
            ++x;
        assert(x % r == 0);
        int y = x / r;
        int lifted = t.mul[static_cast<std::size_t>(h)][static_cast<std::size_t>(t.pow(g1, d1 - (y % d1 == 0 ? d1 : y)))];
        if (y % d1 == 0)
            lifted = h;
        assert(t.order(lifted) == r);
        factor_orders.push_back(r);
        gens.push_back(lifted);
    }
}

} // namespace

QuotientGroup::QuotientGroup(FiniteGroup parent, Subgroup normal)
    : parent_(std::move(parent)), normal_(std::move(normal)) {
    if (!(normal_.parent == parent_))
        throw InvalidParameters("subgroup belongs to a different parent group");
    if (!normal_.is_normal())
        throw NotNormal("subgroup is not normal");

    int n = parent_.order();
    // cosets; representatives are minimal in canonical element order
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<int> coset_rep;
    for (int i = 0; i < n; ++i) {
        if (coset_of[static_cast<std::size_t>(i)] >= 0)
            continue;
        int cid = static_cast<int>(coset_rep.size());
        coset_rep.push_back(i);
        const GroupElement& g = parent_.elements()[static_cast<std::size_t>(i)];
        for (const auto& h : normal_.elems)
            coset_of[static_cast<std::size_t>(parent_.index_of(parent_.mul(g, h)))] = cid;
    }
    int m = static_cast<int>(coset_rep.size());

    AbTable t;
    t.mul.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto& gi = parent_.elements()[static_cast<std::size_t>(coset_rep[static_cast<std::size_t>(i)])];
            const auto& gj = parent_.elements()[static_cast<std::size_t>(coset_rep[static_cast<std::size_t>(j)])];
            t.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                coset_of[static_cast<std::size_t>(parent_.index_of(parent_.mul(gi, gj)))];
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (t.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                t.mul[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw NotAbelianQuotient("quotient is non-abelian");

    std::vector<int> factor_orders, factor_gens;
    decompose_abelian(t, factor_orders, factor_gens);
    if (factor_orders.empty()) {
        grading_ = FiniteGroup::cyclic(1);
    } else {
        // present ascending: C2 x C4, not C4 x C2
        std::vector<std::size_t> perm(factor_orders.size());
        std::iota(perm.begin(), perm.end(), 0u);
        std::stable_sort(perm.begin(), perm.end(),
                         [&](std::size_t a, std::size_t b) { return factor_orders[a] < factor_orders[b]; });
        std::vector<int> orders;
        std::vector<int> gens;
        for (auto p : perm) {
            orders.push_back(factor_orders[p]);
            gens.push_back(factor_gens[p]);
        }
        grading_ = orders.size() == 1 ? FiniteGroup::cyclic(orders[0]) : FiniteGroup::product(orders);
        factor_orders = orders;
        factor_gens = gens;
    }

    // coset id -> grading element, by enumerating exponent vectors
    std::vector<int> coset_to_grading(static_cast<std::size_t>(m), -1);
    for (const auto& e : grading_.elements()) {
        int c = 0;
        for (std::size_t i = 0; i < factor_gens.size(); ++i)
            c = t.mul[static_cast<std::size_t>(c)]
                     [static_cast<std::size_t>(t.pow(factor_gens[i], e.w[i]))];
        if (coset_to_grading[static_cast<std::size_t>(c)] != -1)
            throw Error("internal: abelian decomposition is not a bijection");
        coset_to_grading[static_cast<std::size_t>(c)] = grading_.index_of(e);
    }

    proj_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        proj_[static_cast<std::size_t>(i)] =
            grading_.elements()[static_cast<std::size_t>(
                coset_to_grading[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(i)])])];
    reps_.resize(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c)
        reps_[static_cast<std::size_t>(coset_to_grading[static_cast<std::size_t>(c)])] =
            parent_.elements()[static_cast<std::size_t>(coset_rep[static_cast<std::size_t>(c)])];
}

GroupElement QuotientGroup::project(const GroupElement& a) const {
    return proj_[static_cast<std::size_t>(parent_.index_of(a))];
}

GroupElement QuotientGroup::representative(const GroupElement& q) const {
    return reps_[static_cast<std::size_t>(grading_.index_of(q))];
}

std::vector<GroupElement> QuotientGroup::coset_members(const GroupElement& q) const {
    std::vector<GroupElement> out;
    for (const auto& g : parent_.elements())
        if (project(g) == q)
            out.push_back(g);
    return out;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) { return QuotientGroup(g, n); }

} // namespace zest
