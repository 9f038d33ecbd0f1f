#pragma once

// The ten classical Lucas sequences and their sequence-specific weighted-sum
// formulas. The specialised formulas are evaluated independently of the
// generic weighted_sum path so the two can be checked against each other.
//
// Lucas-balancing numbers C_n (1, 3, 17, 99, ...) are not a Lucas sequence of
// either kind; they are carried as half of V_n(6,1). The half-companion Pell
// numbers (OEIS A001333) are likewise not U or V sequences and are not listed.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lucas/exact_int.hpp"
#include "lucas/sequence_core.hpp"
#include "lucas/weighted_sums.hpp"

namespace lucas {

enum class SequenceId {
    Fibonacci,
    Lucas,
    Pell,
    CompanionPell,
    Balancing,
    DoubleLucasBalancing,
    Jacobsthal,
    JacobsthalLucas,
    Mersenne,
    MersenneLucas,
};

struct NamedSequence {
    SequenceId id;
    std::string_view name;    // fibonacci, lucas, ...
    std::string_view symbol;  // F, L, P, Q, B, Ĉ, J, j, M, m
    std::int64_t p;
    std::int64_t q;
    Kind kind;
    std::string_view oeis_id;
    /// The OEIS entry lists term / oeis_divisor. Only A001541 differs from 1:
    /// it holds C_n, half of the double Lucas-balancing term.
    int oeis_divisor = 1;

    SequenceParams params() const { return make_params(p, q); }
};

/// All ten entries in table order.
std::span<const NamedSequence> registry();

/// Throws UnknownSequence.
const NamedSequence& lookup(std::string_view name);
const NamedSequence& lookup(SequenceId id);

/// sum_{i=1}^n i S_i via the sequence-specific formula. n >= 1.
ExactInt specialized_weighted_sum(std::string_view name, Index n);
ExactInt specialized_weighted_sum(SequenceId id, Index n);

/// C_n = V_n(6,1) / 2.
ExactInt lucas_balancing_term(Index n);

/// (n C_{n+1} - (n+1) C_n + 1) / 4
ExactInt lucas_balancing_weighted_sum(Index n);

/// Omega/Psi shortcuts for the four p - q != 1 families. Either member of a
/// family may be named. Mersenne-family names throw UnsupportedCase.
OmegaPsi omega_psi_specialized(std::string_view name, Index n);
OmegaPsi omega_psi_specialized(SequenceId id, Index n);

} // namespace lucas
