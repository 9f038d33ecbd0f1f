#pragma once

// Lucas sequences U_n(p,q) and V_n(p,q).
//
//   U_0 = 0, U_1 = 1, V_0 = 2, V_1 = p,  X_n = p X_{n-1} - q X_{n-2}.
//
// Three evaluators are provided and are expected to agree wherever they are
// all defined: the defining recurrence (O(n)), index doubling (O(log n)) and
// the Binet form evaluated in Z[sqrt(delta)] (O(log n)).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/exact_int.hpp"

namespace lucas {

enum class Kind { First, Second };

std::string_view to_string(Kind kind);  // "U" / "V"
Kind parse_kind(std::string_view text); // accepts U/V, first/second

enum class Branch { PMinusQIsOne, PMinusQIsNotOne };

std::string_view to_string(Branch branch);

/// Why alpha/beta fails to be a non-root-of-unity. `None` means nondegenerate.
enum class Degeneracy {
    None,
    QIsZero,
    PIsZero,           // p^2 = 0:   alpha/beta = -1
    PSquaredIsQ,       // p^2 = q:   primitive cube root
    PSquaredIsTwoQ,    // p^2 = 2q:  fourth root
    PSquaredIsThreeQ,  // p^2 = 3q:  sixth root
    ZeroDiscriminant,  // p^2 = 4q:  alpha = beta
};

std::string_view to_string(Degeneracy degeneracy);

/// Classified parameter pair. Every integer pair is accepted; degenerate pairs
/// are labelled, never refused.
class SequenceParams {
public:
    static SequenceParams make(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    const ExactInt& delta() const { return delta_; }
    Branch branch() const { return branch_; }
    Degeneracy degeneracy() const { return degeneracy_; }
    bool is_degenerate() const { return degeneracy_ != Degeneracy::None; }

    /// p - q - 1; zero exactly on the PMinusQIsOne branch.
    ExactInt p_minus_q_minus_one() const;

    friend bool operator==(const SequenceParams& a, const SequenceParams& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

private:
    SequenceParams() = default;

    std::int64_t p_ = 0;
    std::int64_t q_ = 0;
    ExactInt delta_;
    Branch branch_ = Branch::PMinusQIsNotOne;
    Degeneracy degeneracy_ = Degeneracy::None;
};

inline SequenceParams make_params(std::int64_t p, std::int64_t q) {
    return SequenceParams::make(p, q);
}

/// (x + y sqrt(delta)); used to raise p + sqrt(delta) to a power exactly.
struct QuadraticPair {
    ExactInt x{1};
    ExactInt y{0};
};

QuadraticPair multiply(const QuadraticPair& a, const QuadraticPair& b, const ExactInt& delta);

/// Both kinds at one index, plus q^index.
struct LucasState {
    Index index = 0;
    ExactInt u{0};
    ExactInt v{2};
    ExactInt q_pow{1};

    const ExactInt& term(Kind kind) const { return kind == Kind::First ? u : v; }
};

/// State at index 0.
LucasState initial_state();

/// State at index n by doubling, O(log n) multiplications.
LucasState state_at(const SequenceParams& params, Index n);

/// Moves the state forward by one index.
void advance(const SequenceParams& params, LucasState& state);

/// State at a.index + b.index from the two states (addition formulas).
LucasState combine(const SequenceParams& params, const LucasState& a, const LucasState& b);

ExactInt term_iter(const SequenceParams& params, Kind kind, Index n);
ExactInt term_fast(const SequenceParams& params, Kind kind, Index n);

/// Requires nondegenerate params; throws UnsupportedCase otherwise.
ExactInt term_binet(const SequenceParams& params, Kind kind, Index n);

/// U_n = 1 + q + ... + q^{n-1}, V_n = q^n + 1. Requires p - q = 1 but accepts
/// degenerate pairs.
ExactInt binet_special_pq1(const SequenceParams& params, Kind kind, Index n);

/// States at n-1, n and n+1 (n >= 1); closed forms read their terms from here.
struct TermWindow {
    LucasState prev;
    LucasState cur;
    LucasState next;

    Index n() const { return cur.index; }
};

TermWindow window_at(const SequenceParams& params, Index n);

/// Moves the window from n to n+1.
void slide(const SequenceParams& params, TermWindow& window);

/// Terms 0..count-1 by the recurrence.
std::vector<ExactInt> terms_iter(const SequenceParams& params, Kind kind, Index count);

} // namespace lucas
