#include "zest/scalar.hpp"

#include <algorithm>
#include <numeric>

namespace zest {

TorsionScalar TorsionScalar::root(std::int64_t num, std::int64_t den) {
    if (den <= 0)
        throw InvalidParameters("root-of-unity denominator must be positive");
    num %= den;
    if (num < 0)
        num += den;
    std::int64_t g = std::gcd(num, den);
    TorsionScalar s;
    s.zero_ = false;
    s.num_ = num / g;
    s.den_ = den / g;
    return s;
}

std::int64_t TorsionScalar::order() const {
    if (zero_)
        throw InvalidParameters("zero has no multiplicative order");
    return den_;
}

TorsionScalar TorsionScalar::operator*(const TorsionScalar& other) const {
    if (zero_ || other.zero_)
        return zero();
    // a/b + c/d mod 1
    std::int64_t den = den_ / std::gcd(den_, other.den_) * other.den_;
    std::int64_t num = num_ * (den / den_) + other.num_ * (den / other.den_);
    return root(num, den);
}

TorsionScalar TorsionScalar::pow(std::int64_t k) const {
    if (zero_) {
        if (k <= 0)
            throw ZeroToNonpositivePower("0 cannot be raised to a non-positive power");
        return zero();
    }
    std::int64_t e = num_ * (k % den_);
    return root(e, den_);
}

bool TorsionScalar::operator<(const TorsionScalar& other) const {
    if (zero_ != other.zero_)
        return zero_;
    if (zero_)
        return false;
    // compare exponents a/b < c/d
    return num_ * other.den_ < other.num_ * den_;
}

std::string TorsionScalar::str() const {
    if (zero_)
        return "0";
    if (num_ == 0)
        return "1";
    if (num_ == 1 && den_ == 2)
        return "-1";
    if (num_ == 1 && den_ == 4)
        return "i";
    if (num_ == 3 && den_ == 4)
        return "-i";
    return "e(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

std::vector<TorsionScalar> ts_nth_roots(const TorsionScalar& m, std::int64_t n) {
    if (m.is_zero())
        throw ZeroHasNoRoots("zero has no n-th roots in the unity monoid");
    if (n <= 0)
        throw InvalidParameters("root index must be positive");
    // q = e^{2πi (a + k·b) / (n·b)} for k = 0..n-1, where m = e^{2πi a/b}
    std::vector<TorsionScalar> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k)
        out.push_back(TorsionScalar::root(m.num() + k * m.den(), n * m.den()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TorsionScalar> roots_of_unity(std::int64_t n) {
    std::vector<TorsionScalar> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k)
        out.push_back(TorsionScalar::root(k, n));
    return out;
}

} // namespace zest
