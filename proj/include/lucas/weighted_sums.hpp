#pragma once

// Closed forms for sum_{i=1}^n i U_i and sum_{i=1}^n i V_i, obtained from the
// consecutive sums by summation by parts.
//
// With d = p - q - 1 and
//   Omega(n) = U_{n+1} - 2q U_n + q^2 U_{n-1} + q - 1
//   Psi(n)   = V_{n+1} - 2q V_n + q^2 V_{n-1} + (p - 2q)(q - 1)
// the p - q != 1 forms are
//   sum i U_i = (n (U_{n+1} - q U_n) d - Omega(n)) / d^2
//   sum i V_i = ((n (V_{n+1} - q V_n) + 2q) d - Psi(n)) / d^2
// Omega(n) alone is in general not divisible by d; only the combined
// numerator is, so each form is evaluated with a single division by d^2.
//
// The p - q = 1 forms are
//   sum i U_i = q/(q-1) (n U_n - (q U_{n-1} - n + 1)/(q-1) - C(n+1,2)/q)
//   sum i V_i = n U_{n+1} - (q U_n - n)/(q-1) + C(n+1,2)
// and the power-form corollaries replace U by q^n directly.

#include <span>

#include "lucas/consecutive_sums.hpp"
#include "lucas/exact_int.hpp"
#include "lucas/sequence_core.hpp"

namespace lucas {

struct OmegaPsi {
    ExactInt omega;
    ExactInt psi;

    friend bool operator==(const OmegaPsi&, const OmegaPsi&) = default;
};

/// Requires n >= 1; n = 0 returns the empty sum.
SumResult weighted_sum(const SequenceParams& params, Kind kind, Index n);
SumResult weighted_sum(const SequenceParams& params, Kind kind, const TermWindow& window);

/// Power-form corollaries (p - q = 1 only). Kind U needs q not in {0, 1};
/// kind V needs q != 1.
SumResult weighted_sum_powerform(const SequenceParams& params, Kind kind, Index n);

OmegaPsi omega_psi(const SequenceParams& params, Index n);
OmegaPsi omega_psi(const SequenceParams& params, const TermWindow& window);

/// a_n * sum(b) + sum_{i<n} (a_i - a_{i+1}) * (b_1 + ... + b_i).
/// Equals sum a_i b_i. Throws LengthMismatch on unequal or empty inputs.
ExactInt abel_sum(std::span<const ExactInt> a, std::span<const ExactInt> b);

} // namespace lucas
