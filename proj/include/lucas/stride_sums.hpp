#pragma once

// Sums over every r-th term, the Fibonacci/Lucas weighted stride-2 and
// weighted-square identities, and reverse-weighted sums.
//
// For any (p, q) and r >= 1 with 1 + q^r - V_r != 0:
//   sum_{i=1}^n U_{ir} = (U_r + q^r U_{nr} - U_{(n+1)r}) / (1 + q^r - V_r)
//   sum_{i=1}^n V_{ir} = (V_r + q^r V_{nr} - V_{(n+1)r} - 2 q^r) / (1 + q^r - V_r)
// erratum_demo evaluates the V numerator with and without the -2 q^r term.
//
// The denominator factors as (1 - alpha^r)(1 - beta^r), so it vanishes for
// every r whenever p - q = 1 (beta = 1).

#include "lucas/consecutive_sums.hpp"
#include "lucas/exact_int.hpp"
#include "lucas/sequence_core.hpp"

namespace lucas {

struct StrideQuery {
    SequenceParams params;
    Kind kind = Kind::First;
    Index n = 1;
    Index r = 1;
};

/// 1 + q^r - V_r
ExactInt stride_denominator(const SequenceParams& params, Index r);

SumResult stride_sum(const StrideQuery& query);

struct ErratumReport {
    ExactInt corrected;
    ExactRational uncorrected;  // need not be an integer
    ExactInt oracle;
    ExactRational difference;           // uncorrected - oracle
    ExactRational predicted_difference; // 2 q^r / (1 + q^r - V_r)

    bool corrected_matches_oracle() const { return corrected == oracle; }
    bool difference_as_predicted() const { return difference == predicted_difference; }
};

/// Kind must be V. Throws ZeroDenominator. The oracle value comes from the
/// brute-force sum.
ErratumReport erratum_demo(const StrideQuery& query);

/// Same, with the brute-force value supplied by the caller (sweeps that already
/// hold a table of literal sums).
ErratumReport erratum_demo(const StrideQuery& query, const ExactInt& oracle_value);

/// V_{m+2r} == V_r V_{m+r} - q^r V_m
bool identity13_check(const SequenceParams& params, Index m, Index r);

/// First kind: sum i F_{2i} = n F_{2n+1} - F_{2n}
/// Second kind: sum i L_{2i} = n L_{2n+1} - L_{2n} + 2
ExactInt fib_luc_weighted_stride2(Kind kind, Index n);

/// First kind: sum i F_i^2 = n F_n F_{n+1} - F_n^2 + (1 - (-1)^n)/2
/// Second kind: sum i L_i^2 = n L_n L_{n+1} - L_n^2 + (3 + 5(-1)^n)/2
ExactInt fib_luc_weighted_square(Kind kind, Index n);

enum class ReverseMethod {
    DifferenceOfSums,      // (n + 1) sum S_i - sum i S_i
    SumOfConsecutiveSums,  // sum_{k=1}^n sum_{i=1}^k S_i
};

/// sum_{i=1}^n (n - i + 1) S_i. Errors propagate from the underlying sums.
ExactInt reverse_weighted_sum(const SequenceParams& params, Kind kind, Index n,
                              ReverseMethod method = ReverseMethod::DifferenceOfSums);

} // namespace lucas
