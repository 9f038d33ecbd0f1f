#include "lucas/sweep.hpp"

#include <future>
#include <thread>
#include <utility>

#include "lucas/consecutive_sums.hpp"
#include "lucas/errors.hpp"
#include "lucas/oracle.hpp"
#include "lucas/stride_sums.hpp"
#include "lucas/weighted_sums.hpp"

namespace lucas::oracle {

std::string to_string(CheckMode mode) {
    switch (mode) {
    case CheckMode::Consecutive: return "consecutive";
    case CheckMode::Weighted: return "weighted";
    case CheckMode::WeightedPowerForm: return "weighted-powerform";
    case CheckMode::Stride: return "stride";
    case CheckMode::Erratum: return "erratum";
    case CheckMode::ReverseDifference: return "reverse-difference";
    case CheckMode::ReversePartialSums: return "reverse-partial-sums";
    }
    return "?";
}

std::string_view to_string(Status status) {
    switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "n/a";
    }
    return "?";
}

void validate(const OracleConfig& config) {
    if (config.p_range.empty() || config.q_range.empty()) {
        throw PreconditionViolation("oracle config: p and q ranges must be nonempty");
    }
}

namespace {

using Reports = std::vector<VerificationReport>;

struct CellKey {
    const SequenceParams& params;
    Kind kind;
    CheckMode mode;
    Index r;
};

/// Runs one closed-form evaluation. `compute` fills closed_form (and may set
/// witness_ok / status); the comparison against `expected` happens here unless
/// `compute` already decided the status.
template <typename Compute>
VerificationReport run_cell(const CellKey& key, Index n, const ExactInt& expected,
                            Compute&& compute) {
    VerificationReport rep;
    rep.p = key.params.p();
    rep.q = key.params.q();
    rep.kind = key.kind;
    rep.mode = key.mode;
    rep.r = key.r;
    rep.n = n;
    rep.oracle = expected;
    try {
        const bool decided = compute(rep);
        if (!decided) {
            rep.status = rep.closed_form == rep.oracle ? Status::Pass : Status::Fail;
        }
        if (!rep.witness_ok) {
            rep.status = Status::Fail;
        }
    } catch (const UnsupportedCase& e) {
        rep.status = Status::NotApplicable;
        rep.note = e.what();
    } catch (const ZeroDenominator& e) {
        rep.status = Status::NotApplicable;
        rep.note = e.what();
    } catch (const ExactDivisionViolation& e) {
        rep.status = Status::Fail;
        rep.witness_ok = false;
        rep.note = e.what();
    } catch (const LucasError& e) {
        rep.status = Status::Fail;
        rep.note = e.what();
    }
    return rep;
}

struct NRange {
    Index first;
    Index last;
};

void sweep_pair(const OracleConfig& config, const SequenceParams& params,
                const std::function<void(const VerificationReport&)>& visit) {
    const NRange ns = config.only_n ? NRange{*config.only_n, *config.only_n}
                                    : NRange{1, config.n_max};
    if (ns.first == 0 || ns.first > ns.last) {
        return;
    }
    const Index top = ns.last;
    const CheckSelection& checks = config.checks;

    for (Kind kind : {Kind::First, Kind::Second}) {
        if (config.only_kind && *config.only_kind != kind) {
            continue;
        }

        if (checks.consecutive) {
            const auto truth = brute_sums_upto(params, kind, top, SumMode::consecutive());
            const CellKey key{params, kind, CheckMode::Consecutive, 0};
            for (Index n = ns.first; n <= ns.last; ++n) {
                visit(run_cell(key, n, truth[n], [&](VerificationReport& rep) {
                    const SumResult res = consecutive_sum(params, kind, n);
                    rep.closed_form = res.value;
                    rep.witness_ok = res.witness.remainder_checked_zero;
                    return false;
                }));
            }
        }

        std::vector<ExactInt> weighted_truth;
        if (checks.weighted || checks.powerform) {
            weighted_truth = brute_sums_upto(params, kind, top, SumMode::weighted());
        }
        if (checks.weighted) {
            const CellKey key{params, kind, CheckMode::Weighted, 0};
            for (Index n = ns.first; n <= ns.last; ++n) {
                visit(run_cell(key, n, weighted_truth[n], [&](VerificationReport& rep) {
                    const SumResult res = weighted_sum(params, kind, n);
                    rep.closed_form = res.value;
                    rep.witness_ok = res.witness.remainder_checked_zero;
                    return false;
                }));
            }
        }
        if (checks.powerform && params.branch() == Branch::PMinusQIsOne) {
            const CellKey key{params, kind, CheckMode::WeightedPowerForm, 0};
            for (Index n = ns.first; n <= ns.last; ++n) {
                visit(run_cell(key, n, weighted_truth[n], [&](VerificationReport& rep) {
                    const SumResult res = weighted_sum_powerform(params, kind, n);
                    rep.closed_form = res.value;
                    rep.witness_ok = res.witness.remainder_checked_zero;
                    return false;
                }));
            }
        }

        std::vector<std::vector<ExactInt>> stride_truth;
        const bool want_erratum = checks.erratum && kind == Kind::Second;
        if (checks.stride || want_erratum) {
            for (Index r = 1; r <= config.r_max; ++r) {
                stride_truth.push_back(brute_sums_upto(params, kind, top, SumMode::stride(r)));
            }
        }
        if (checks.stride) {
            for (Index r = 1; r <= config.r_max; ++r) {
                const CellKey key{params, kind, CheckMode::Stride, r};
                for (Index n = ns.first; n <= ns.last; ++n) {
                    visit(run_cell(key, n, stride_truth[r - 1][n], [&](VerificationReport& rep) {
                        const SumResult res = stride_sum(StrideQuery{params, kind, n, r});
                        rep.closed_form = res.value;
                        rep.witness_ok = res.witness.remainder_checked_zero;
                        return false;
                    }));
                }
            }
        }
        if (want_erratum) {
            for (Index r = 1; r <= config.r_max; ++r) {
                const CellKey key{params, kind, CheckMode::Erratum, r};
                for (Index n = ns.first; n <= ns.last; ++n) {
                    const ExactInt& truth = stride_truth[r - 1][n];
                    visit(run_cell(key, n, truth, [&](VerificationReport& rep) {
                        const ErratumReport er = erratum_demo(StrideQuery{params, kind, n, r}, truth);
                        rep.closed_form = er.corrected;
                        const bool ok = er.corrected_matches_oracle() && er.difference_as_predicted();
                        rep.status = ok ? Status::Pass : Status::Fail;
                        if (!er.difference_as_predicted()) {
                            rep.note = "uncorrected - oracle = " + to_decimal(er.difference) +
                                       ", predicted " + to_decimal(er.predicted_difference);
                        }
                        return true;
                    }));
                }
            }
        }

        if (checks.reverse) {
            const auto truth = brute_sums_upto(params, kind, top, SumMode::reverse_weighted());
            const CellKey by_difference{params, kind, CheckMode::ReverseDifference, 0};
            for (Index n = ns.first; n <= ns.last; ++n) {
                visit(run_cell(by_difference, n, truth[n], [&](VerificationReport& rep) {
                    rep.closed_form =
                        reverse_weighted_sum(params, kind, n, ReverseMethod::DifferenceOfSums);
                    return false;
                }));
            }
            const CellKey by_partials{params, kind, CheckMode::ReversePartialSums, 0};
            for (Index n = ns.first; n <= ns.last; ++n) {
                visit(run_cell(by_partials, n, truth[n], [&](VerificationReport& rep) {
                    rep.closed_form =
                        reverse_weighted_sum(params, kind, n, ReverseMethod::SumOfConsecutiveSums);
                    return false;
                }));
            }
        }
    }
}

std::vector<SequenceParams> grid(const OracleConfig& config) {
    std::vector<SequenceParams> out;
    for (std::int64_t p = config.p_range.lo; p <= config.p_range.hi; ++p) {
        for (std::int64_t q = config.q_range.lo; q <= config.q_range.hi; ++q) {
            SequenceParams params = make_params(p, q);
            if (config.skip_degenerate && params.is_degenerate()) {
                continue;
            }
            out.push_back(std::move(params));
        }
    }
    return out;
}

} // namespace

void sweep_each(const OracleConfig& config,
                const std::function<void(const VerificationReport&)>& visit) {
    validate(config);
    const std::vector<SequenceParams> pairs = grid(config);

    unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
    if (threads <= 1) {
        for (const SequenceParams& params : pairs) {
            sweep_pair(config, params, visit);
        }
        return;
    }

    // Each pair is independent; evaluate a batch concurrently, then replay the
    // buffered reports in grid order so output does not depend on scheduling.
    for (std::size_t begin = 0; begin < pairs.size(); begin += threads) {
        const std::size_t end = std::min(pairs.size(), begin + threads);
        std::vector<std::future<Reports>> batch;
        for (std::size_t i = begin; i < end; ++i) {
            batch.push_back(std::async(std::launch::async, [&config, &params = pairs[i]] {
                Reports local;
                sweep_pair(config, params,
                           [&local](const VerificationReport& rep) { local.push_back(rep); });
                return local;
            }));
        }
        for (auto& fut : batch) {
            for (const VerificationReport& rep : fut.get()) {
                visit(rep);
            }
        }
    }
}

std::vector<VerificationReport> sweep(const OracleConfig& config) {
    std::vector<VerificationReport> out;
    sweep_each(config, [&out](const VerificationReport& rep) { out.push_back(rep); });
    return out;
}

SweepSummary summarize(const OracleConfig& config, std::size_t keep_failures) {
    SweepSummary summary;
    sweep_each(config, [&](const VerificationReport& rep) {
        ++summary.total;
        if (!rep.witness_ok) {
            ++summary.witness_failures;
        }
        switch (rep.status) {
        case Status::Pass: ++summary.passed; break;
        case Status::NotApplicable: ++summary.not_applicable; break;
        case Status::Fail:
            ++summary.failed;
            if (summary.first_failures.size() < keep_failures) {
                summary.first_failures.push_back(rep);
            }
            break;
        }
    });
    return summary;
}

} // namespace lucas::oracle
