#pragma once

// Closed forms for sum_{i=1}^n U_i and sum_{i=1}^n V_i.
//
//   p - q = 1, U:   (q U_n - n) / (q - 1)                  (q != 1)
//   p - q = 1, V:   U_{n+1} + n - 1
//   p - q != 1, U:  (U_{n+1} - q U_n - 1) / (p - q - 1)
//   p - q != 1, V:  (V_{n+1} - q V_n - p + 2q) / (p - q - 1)
//
// n = 0 is accepted as an extension and yields the empty sum 0.

#include "lucas/exact_int.hpp"
#include "lucas/sequence_core.hpp"

namespace lucas {

struct SumResult {
    ExactInt value;
    Branch branch_used = Branch::PMinusQIsNotOne;
    DivisionWitness witness;
};

SumResult consecutive_sum(const SequenceParams& params, Kind kind, Index n);

/// Same closed form, reading U/V at n and n+1 from an existing window.
SumResult consecutive_sum(const SequenceParams& params, Kind kind, const TermWindow& window);

} // namespace lucas
