#pragma once

#include <stdexcept>
#include <string>

namespace euorient {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// residue / prime-field errors
struct NonInvertible : Error { using Error::Error; };
struct DuplicatePrime : Error { using Error::Error; };

// truncated-series errors
struct CapOverflow : Error { using Error::Error; };
struct CapMismatch : Error { using Error::Error; };
struct PrimeMismatch : Error { using Error::Error; };
struct NonDivisible : Error { using Error::Error; };

// solver errors
struct DependencyViolation : Error { using Error::Error; };
struct OddPower : Error { using Error::Error; };

// oracle errors
struct LimitExceeded : Error { using Error::Error; };

// analysis errors
struct ZeroCoefficient : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct InsufficientTerms : Error { using Error::Error; };
struct EmptyEnsemble : Error { using Error::Error; };
struct RootFindingFailure : Error { using Error::Error; };

// driver errors
struct ConfigError : Error { using Error::Error; };
struct VerifyMismatch : Error { using Error::Error; };
struct NumericFailure : Error { using Error::Error; };

} // namespace euorient
