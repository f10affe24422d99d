#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zest/errors.hpp"

namespace zest {

/// Exact element of {0} ∪ {roots of unity}. A nonzero value e^{2πi·a/b} is
/// stored as the reduced fraction a/b with 0 <= a < b. This monoid is closed
/// under multiplication and contains every scalar the library ever produces,
/// so equality is exact and cheap.
class TorsionScalar {
public:
    /// The zero scalar.
    TorsionScalar() : zero_(true), num_(0), den_(1) {}

    static TorsionScalar zero() { return TorsionScalar(); }
    static TorsionScalar one() { return root(0, 1); }
    static TorsionScalar minus_one() { return root(1, 2); }

    /// e^{2πi·num/den}; the fraction is reduced on construction.
    static TorsionScalar root(std::int64_t num, std::int64_t den);

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && num_ == 0; }

    /// Reduced numerator/denominator of the exponent; only meaningful when nonzero.
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// Multiplicative order of a nonzero scalar (the reduced denominator).
    std::int64_t order() const;

    TorsionScalar operator*(const TorsionScalar& other) const;
    TorsionScalar pow(std::int64_t k) const;
    TorsionScalar inverse() const { return pow(-1); }

    bool operator==(const TorsionScalar& other) const = default;
    bool operator<(const TorsionScalar& other) const;

    std::string str() const;

private:
    bool zero_;
    std::int64_t num_;
    std::int64_t den_;
};

inline TorsionScalar ts_mul(const TorsionScalar& a, const TorsionScalar& b) { return a * b; }
inline TorsionScalar ts_pow(const TorsionScalar& a, std::int64_t k) { return a.pow(k); }

/// All N distinct q with q^N = m, ascending by exponent. m must be nonzero.
std::vector<TorsionScalar> ts_nth_roots(const TorsionScalar& m, std::int64_t n);

/// The N-th roots of unity 1, ζ_N, ζ_N², ... in ascending exponent order.
std::vector<TorsionScalar> roots_of_unity(std::int64_t n);

} // namespace zest
