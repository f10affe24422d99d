#pragma once

#include <stdexcept>
#include <string>

namespace zest {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroToNonpositivePower : Error { using Error::Error; };
struct ZeroHasNoRoots : Error { using Error::Error; };
struct ForeignElement : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotAbelianQuotient : Error { using Error::Error; };
struct ArityTooHigh : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotDiagonal : Error { using Error::Error; };
struct NonDiagonalAction : Error { using Error::Error; };
struct NotNormalSupport : Error { using Error::Error; };
struct InvalidParameters : Error { using Error::Error; };
struct RootMismatch : Error { using Error::Error; };
struct NotCyclic : Error { using Error::Error; };
struct NotInGamma0 : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace zest
