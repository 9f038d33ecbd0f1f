#pragma once

// Brute-force reference sums. Everything here is built from the defining
// recurrence and literal loops; this target links only against the sequence
// core, so no closed form can leak into the ground truth.

#include <string>
#include <vector>

#include "lucas/exact_int.hpp"
#include "lucas/sequence_core.hpp"

namespace lucas::oracle {

enum class ModeTag {
    Consecutive,      // sum T_i
    Weighted,         // sum i T_i
    Stride,           // sum T_{i r}
    ReverseWeighted,  // sum (n - i + 1) T_i
    WeightedStride2,  // sum i T_{2i}
    WeightedSquare,   // sum i T_i^2
};

struct SumMode {
    ModeTag tag = ModeTag::Consecutive;
    Index r = 1;  // only read for Stride

    static SumMode consecutive() { return {ModeTag::Consecutive, 1}; }
    static SumMode weighted() { return {ModeTag::Weighted, 1}; }
    static SumMode stride(Index r) { return {ModeTag::Stride, r}; }
    static SumMode reverse_weighted() { return {ModeTag::ReverseWeighted, 1}; }
    static SumMode weighted_stride2() { return {ModeTag::WeightedStride2, 1}; }
    static SumMode weighted_square() { return {ModeTag::WeightedSquare, 1}; }
};

std::string to_string(const SumMode& mode);

/// The literal sum over i = 1..n. n = 0 gives 0.
ExactInt brute_sum(const SequenceParams& params, Kind kind, Index n, SumMode mode);

/// brute_sum for every n in 0..n_max, sharing one term table.
std::vector<ExactInt> brute_sums_upto(const SequenceParams& params, Kind kind, Index n_max,
                                      SumMode mode);

/// C_0 = 1, C_1 = 3, C_n = 6 C_{n-1} - C_{n-2}; its own recurrence, not V/2.
std::vector<ExactInt> lucas_balancing_terms(Index count);

/// sum_{i=1}^n i C_i.
ExactInt brute_lucas_balancing_weighted(Index n);

} // namespace lucas::oracle
