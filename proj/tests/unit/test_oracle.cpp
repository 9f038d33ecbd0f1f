#include <doctest.h>

#include "lucas/errors.hpp"
#include "lucas/oracle.hpp"
#include "lucas/stride_sums.hpp"
#include "lucas/sweep.hpp"
#include "test_support.hpp"

using namespace lucas;
using namespace lucas::oracle;

TEST_CASE("brute_sum examples") {
    CHECK(brute_sum(make_params(1, -1), Kind::First, 5, SumMode::consecutive()) == 12);
    CHECK(brute_sum(make_params(3, 2), Kind::Second, 3, SumMode::weighted()) == 40);
    CHECK(brute_sum(make_params(1, -1), Kind::Second, 3, SumMode::weighted_stride2()) == 71);
    CHECK(brute_sum(make_params(1, -1), Kind::First, 4, SumMode::weighted_square()) == 51);
    CHECK(brute_sum(make_params(1, -1), Kind::Second, 3, SumMode::stride(2)) == 28);
    CHECK(brute_sum(make_params(3, 2), Kind::First, 3, SumMode::reverse_weighted()) == 16);
    for (int p = -3; p <= 3; ++p) {
        for (int q = -3; q <= 3; ++q) {
            for (Kind kind : {Kind::First, Kind::Second}) {
                CHECK(brute_sum(make_params(p, q), kind, 1, SumMode::consecutive()) ==
                      term_iter(make_params(p, q), kind, 1));
            }
        }
    }
    CHECK_THROWS_AS(brute_sum(make_params(1, -1), Kind::First, 3, SumMode::stride(0)),
                    PreconditionViolation);
}

TEST_CASE("brute_sums_upto is the table of brute_sum") {
    const auto params = make_params(-3, 5);
    for (SumMode mode : {SumMode::consecutive(), SumMode::weighted(), SumMode::stride(3),
                         SumMode::reverse_weighted(), SumMode::weighted_stride2(),
                         SumMode::weighted_square()}) {
        for (Kind kind : {Kind::First, Kind::Second}) {
            const auto table = brute_sums_upto(params, kind, 25, mode);
            REQUIRE(table.size() == 26);
            CHECK(table[0] == 0);
            for (Index n = 1; n <= 25; ++n) {
                CHECK(table[n] == brute_sum(params, kind, n, mode));
            }
        }
    }
}

TEST_CASE("Lucas-balancing terms") {
    const auto c = lucas_balancing_terms(6);
    CHECK(c == std::vector<ExactInt>{1, 3, 17, 99, 577, 3363});
    CHECK(brute_lucas_balancing_weighted(3) == 334);
}

TEST_CASE("single-cell sweep") {
    OracleConfig config;
    config.p_range = {1, 1};
    config.q_range = {-1, -1};
    config.only_kind = Kind::First;
    config.only_n = 5;
    config.checks = CheckSelection::none();
    config.checks.weighted = true;
    const auto reports = sweep(config);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == Status::Pass);
    CHECK(reports[0].closed_form == 46);
    CHECK(reports[0].oracle == 46);
    CHECK(reports[0].mode == CheckMode::Weighted);
}

TEST_CASE("empty n range gives no reports") {
    OracleConfig config;
    config.p_range = {-3, 3};
    config.q_range = {-3, 3};
    config.n_max = 0;
    CHECK(sweep(config).empty());
    config.p_range = {2, 1};
    CHECK_THROWS_AS(sweep(config), PreconditionViolation);
}

TEST_CASE("small sweep passes, only zero stride denominators are not applicable") {
    OracleConfig config;
    config.p_range = {-4, 4};
    config.q_range = {-4, 4};
    config.n_max = 30;
    config.r_max = 4;
    const SweepSummary summary = summarize(config);
    CHECK(summary.total > 0);
    CHECK(summary.all_pass());
    CHECK(summary.failed == 0);
    for (const auto& rep : sweep(config)) {
        if (rep.status == Status::NotApplicable) {
            CHECK((rep.mode == CheckMode::Stride || rep.mode == CheckMode::Erratum));
            CHECK(stride_denominator(make_params(rep.p, rep.q), rep.r) == 0);
        }
    }
}

TEST_CASE("threaded sweep reports in the same order") {
    OracleConfig config;
    config.p_range = {-3, 3};
    config.q_range = {-3, 3};
    config.n_max = 12;
    config.r_max = 3;
    const auto serial = sweep(config);
    config.threads = 3;
    const auto threaded = sweep(config);
    REQUIRE(serial.size() == threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].p == threaded[i].p);
        CHECK(serial[i].q == threaded[i].q);
        CHECK(serial[i].mode == threaded[i].mode);
        CHECK(serial[i].n == threaded[i].n);
        CHECK(serial[i].closed_form == threaded[i].closed_form);
    }
}

TEST_CASE("degenerate pairs can be included") {
    OracleConfig config;
    config.p_range = {2, 2};
    config.q_range = {1, 1};
    config.n_max = 10;
    CHECK(sweep(config).empty());
    config.skip_degenerate = false;
    const SweepSummary summary = summarize(config);
    CHECK(summary.total > 0);
    CHECK(summary.all_pass());
}
