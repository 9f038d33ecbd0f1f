#pragma once

// Closed form vs. brute force over a grid of (p, q, kind, n[, r]).
//
// Lives apart from the oracle target: the sweep links every closed-form
// module, the oracle links none.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lucas/exact_int.hpp"
#include "lucas/sequence_core.hpp"

namespace lucas::oracle {

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool empty() const { return lo > hi; }
};

enum class CheckMode {
    Consecutive,
    Weighted,
    WeightedPowerForm,
    Stride,
    Erratum,
    ReverseDifference,
    ReversePartialSums,
};

std::string to_string(CheckMode mode);

struct CheckSelection {
    bool consecutive = true;
    bool weighted = true;
    bool powerform = true;
    bool stride = true;
    bool erratum = true;
    bool reverse = true;

    static CheckSelection none() { return {false, false, false, false, false, false}; }
};

struct OracleConfig {
    IntRange p_range{-10, 10};
    IntRange q_range{-10, 10};
    Index n_max = 200;
    Index r_max = 10;
    bool skip_degenerate = true;
    CheckSelection checks{};
    /// Restrict to a single kind when set.
    std::optional<Kind> only_kind{};
    /// Restrict to a single n when set (n_max is then ignored).
    std::optional<Index> only_n{};
    /// 0 = hardware concurrency.
    unsigned threads = 1;
};

enum class Status { Pass, Fail, NotApplicable };

std::string_view to_string(Status status);

struct VerificationReport {
    std::int64_t p = 0;
    std::int64_t q = 0;
    Kind kind = Kind::First;
    CheckMode mode = CheckMode::Consecutive;
    Index r = 0;  // 0 unless mode is Stride or Erratum
    Index n = 0;
    ExactInt closed_form;
    ExactInt oracle;
    Status status = Status::Pass;
    /// Division witness of the closed form had remainder zero.
    bool witness_ok = true;
    std::string note;
};

/// Throws PreconditionViolation for empty p/q ranges.
void validate(const OracleConfig& config);

/// Visits every cell in cell-key order (p, q, kind, mode, r, n).
void sweep_each(const OracleConfig& config,
                const std::function<void(const VerificationReport&)>& visit);

/// Collects sweep_each. Memory grows with the grid; prefer sweep_each or
/// summarize for the full default grid.
std::vector<VerificationReport> sweep(const OracleConfig& config);

struct SweepSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t not_applicable = 0;
    std::size_t witness_failures = 0;
    std::vector<VerificationReport> first_failures;

    bool all_pass() const { return failed == 0 && witness_failures == 0; }
};

SweepSummary summarize(const OracleConfig& config, std::size_t keep_failures = 10);

} // namespace lucas::oracle
