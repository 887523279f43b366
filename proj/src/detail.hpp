#pragma once

#include <cmath>
#include <string>

#include "isokit/error.hpp"

namespace isokit::detail {

/// base^exponent, rejecting bases where no real power exists.
inline double real_power(double base, double exponent)
{
    const bool integral = exponent == std::round(exponent);
    if (base < 0.0 && !integral) {
        fail(ErrorCode::DomainError,
             "negative base " + std::to_string(base) + " with non-integer exponent");
    }
    if (base == 0.0 && exponent < 0.0) {
        fail(ErrorCode::DomainError, "zero base with negative exponent");
    }
    return std::pow(base, exponent);
}

inline constexpr double kSingularThreshold = 1e-12;

inline void require_nonsingular(double denominator, const char* what)
{
    if (!(std::abs(denominator) >= kSingularThreshold)) {
        fail(ErrorCode::SingularDenominator, std::string(what) + " vanishes");
    }
}

}  // namespace isokit::detail
