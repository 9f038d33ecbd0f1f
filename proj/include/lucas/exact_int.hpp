#pragma once

// Arbitrary-precision integer plumbing shared by every module.
//
// All sequence terms and sums are carried as GMP integers. Closed forms are
// evaluated as "integer numerator over integer denominator" followed by one
// exact division; `exact_divide` is the single place that division happens
// and it refuses to round.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lucas {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Sequence index. Negative indices are not supported anywhere.
using Index = std::uint64_t;

/// Record of one closed-form division: value * denominator == numerator.
struct DivisionWitness {
    ExactInt numerator{0};
    ExactInt denominator{1};
    bool remainder_checked_zero = true;
};

/// Divides `numerator` by `denominator`, throwing ExactDivisionViolation on a
/// nonzero remainder and ZeroDenominator on a zero denominator. The witness is
/// filled in when non-null.
ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator,
                      DivisionWitness* witness = nullptr);

ExactInt from_int(std::int64_t value);
ExactInt power(const ExactInt& base, Index exponent);

/// n(n+1)/2
ExactInt binom2_next(Index n);

std::string to_decimal(const ExactInt& value);
std::string to_decimal(const ExactRational& value);

} // namespace lucas
