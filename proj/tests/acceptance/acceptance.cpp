// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Fixture directory comes from the build (LUCAS_FIXTURE_DIR) or argv[1].

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "lucas/named_sequences.hpp"
#include "lucas/oracle.hpp"
#include "lucas/sequence_core.hpp"
#include "lucas/stride_sums.hpp"
#include "lucas/sweep.hpp"
#include "lucas/weighted_sums.hpp"

using namespace lucas;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_fixtures = LUCAS_FIXTURE_DIR;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << " s";
    return o.str();
}

// The full default sweep is shared by criteria 2, 3 and 5.
struct SweepTally {
    oracle::SweepSummary all;
    std::size_t erratum_cells = 0;
    std::size_t erratum_pass = 0;
    std::size_t stride_cells = 0;
    double seconds = 0;
};

const SweepTally& default_sweep() {
    static const SweepTally tally = [] {
        SweepTally t;
        const auto t0 = Clock::now();
        oracle::OracleConfig config;
        oracle::sweep_each(config, [&](const oracle::VerificationReport& rep) {
            ++t.all.total;
            if (!rep.witness_ok) {
                ++t.all.witness_failures;
            }
            switch (rep.status) {
            case oracle::Status::Pass: ++t.all.passed; break;
            case oracle::Status::NotApplicable: ++t.all.not_applicable; break;
            case oracle::Status::Fail:
                ++t.all.failed;
                if (t.all.first_failures.size() < 5) {
                    t.all.first_failures.push_back(rep);
                }
                break;
            }
            if (rep.mode == oracle::CheckMode::Erratum && rep.status != oracle::Status::NotApplicable) {
                ++t.erratum_cells;
                if (rep.status == oracle::Status::Pass) {
                    ++t.erratum_pass;
                }
            }
            if (rep.mode == oracle::CheckMode::Stride && rep.status != oracle::Status::NotApplicable) {
                ++t.stride_cells;
            }
        });
        t.seconds = seconds_since(t0);
        return t;
    }();
    return tally;
}

std::string describe(const oracle::VerificationReport& rep) {
    return "(p,q)=(" + std::to_string(rep.p) + "," + std::to_string(rep.q) + ") " +
           std::string(to_string(rep.kind)) + " " + oracle::to_string(rep.mode) +
           " r=" + std::to_string(rep.r) + " n=" + std::to_string(rep.n) + ": " +
           to_decimal(rep.closed_form) + " vs " + to_decimal(rep.oracle) +
           (rep.note.empty() ? "" : " (" + rep.note + ")");
}

Outcome table_reproduction() {
    Outcome out;
    std::ifstream in(g_fixtures + "/table2.txt");
    if (!in) {
        out.fail("cannot read table2.txt");
        return out;
    }
    const auto t0 = Clock::now();
    std::string line;
    std::getline(in, line);  // header
    std::size_t checked = 0;
    std::size_t row = 0;
    while (std::getline(in, line) && row < registry().size()) {
        const NamedSequence& seq = registry()[row++];
        std::istringstream fields(line);
        std::string symbol;
        fields >> symbol;
        if (symbol != seq.symbol) {
            out.fail("row " + std::to_string(row) + " symbol " + symbol);
        }
        const auto params = seq.params();
        for (Index n = 0; n < 10; ++n) {
            std::string text;
            fields >> text;
            const ExactInt expected(text);
            const ExactInt a = term_iter(params, seq.kind, n);
            const ExactInt b = term_fast(params, seq.kind, n);
            const ExactInt c = term_binet(params, seq.kind, n);
            if (a != expected || b != expected || c != expected) {
                out.fail(std::string(seq.name) + " n=" + std::to_string(n) + " expected " + text);
            }
            ++checked;
        }
        std::string oeis;
        fields >> oeis;
        if (oeis != seq.oeis_id) {
            out.fail(std::string(seq.name) + " OEIS " + oeis);
        }
    }
    const double s = seconds_since(t0);
    if (checked != 100) {
        out.fail("expected 100 values, read " + std::to_string(checked));
    }
    if (s >= 1.0) {
        out.fail("took " + fmt_seconds(s));
    }
    if (out.ok) {
        out.detail = "100 values x 3 evaluators in " + fmt_seconds(s);
    }
    return out;
}

Outcome oracle_sweep() {
    Outcome out;
    const SweepTally& t = default_sweep();
    if (t.all.failed != 0) {
        out.fail(std::to_string(t.all.failed) + " failures, first " +
                 describe(t.all.first_failures.front()));
        return out;
    }
    out.detail = std::to_string(t.all.passed) + " cells pass, " +
                 std::to_string(t.all.not_applicable) + " not applicable (zero stride denominator), " +
                 fmt_seconds(t.seconds);
    if (t.seconds >= 300) {
        out.fail("sweep took " + fmt_seconds(t.seconds));
    }
    return out;
}

Outcome exact_division() {
    Outcome out;
    const SweepTally& t = default_sweep();
    if (t.all.witness_failures != 0) {
        out.fail(std::to_string(t.all.witness_failures) + " nonzero remainders");
        return out;
    }
    out.detail = "every division exact across " + std::to_string(t.all.total) + " cells";
    return out;
}

Outcome specialization() {
    Outcome out;
    struct Spot {
        const char* name;
        Index n;
        long value;
    };
    for (const Spot& spot : {Spot{"fibonacci", 5, 46}, Spot{"pell", 4, 68}, Spot{"balancing", 3, 118},
                             Spot{"mersenne", 4, 88}, Spot{"mersenne_lucas", 4, 108}}) {
        const NamedSequence& seq = lookup(spot.name);
        const ExactInt brute = oracle::brute_sum(seq.params(), seq.kind, spot.n, oracle::SumMode::weighted());
        if (brute != spot.value) {
            out.fail(std::string(spot.name) + " brute force gives " + to_decimal(brute));
        }
        if (specialized_weighted_sum(spot.name, spot.n) != spot.value) {
            out.fail(std::string(spot.name) + " specialized value");
        }
    }
    if (oracle::brute_lucas_balancing_weighted(3) != 334 || lucas_balancing_weighted_sum(3) != 334) {
        out.fail("Lucas-balancing n=3");
    }
    std::size_t checked = 0;
    for (const NamedSequence& seq : registry()) {
        const auto truth = oracle::brute_sums_upto(seq.params(), seq.kind, 200, oracle::SumMode::weighted());
        for (Index n = 1; n <= 200; ++n) {
            const ExactInt special = specialized_weighted_sum(seq.id, n);
            const ExactInt generic = weighted_sum(seq.params(), seq.kind, n).value;
            if (special != truth[n] || generic != truth[n]) {
                out.fail(std::string(seq.name) + " n=" + std::to_string(n));
            }
            ++checked;
        }
    }
    for (Index n = 1; n <= 200; ++n) {
        if (lucas_balancing_weighted_sum(n) != oracle::brute_lucas_balancing_weighted(n)) {
            out.fail("lucas_balancing n=" + std::to_string(n));
        }
        ++checked;
    }
    if (out.ok) {
        out.detail = std::to_string(checked) + " (sequence, n) cells; spot values 46 68 118 88 108 334";
    }
    return out;
}

Outcome erratum() {
    Outcome out;
    const ErratumReport er = erratum_demo(StrideQuery{make_params(1, -1), Kind::Second, 3, 2});
    if (er.corrected != 28 || er.oracle != 28) {
        out.fail("corrected " + to_decimal(er.corrected) + ", oracle " + to_decimal(er.oracle));
    }
    if (er.uncorrected != 26) {
        out.fail("uncorrected " + to_decimal(er.uncorrected));
    }
    const SweepTally& t = default_sweep();
    if (t.erratum_cells == 0 || t.erratum_pass != t.erratum_cells) {
        out.fail(std::to_string(t.erratum_cells - t.erratum_pass) + " erratum cells off prediction");
    }
    if (out.ok) {
        out.detail = "corrected 28 = oracle, without -2q^r 26; difference = 2q^r/(1+q^r-V_r) in " +
                     std::to_string(t.erratum_cells) + " cells";
    }
    return out;
}

Outcome identity13() {
    Outcome out;
    std::size_t checked = 0;
    for (int p = -10; p <= 10; ++p) {
        for (int q = -10; q <= 10; ++q) {
            const auto params = make_params(p, q);
            for (Index m = 0; m <= 50; ++m) {
                for (Index r = 0; r <= 25; ++r) {
                    if (!identity13_check(params, m, r)) {
                        out.fail("(p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                                 ") m=" + std::to_string(m) + " r=" + std::to_string(r));
                    }
                    ++checked;
                }
            }
        }
    }
    if (out.ok) {
        out.detail = std::to_string(checked) + " (p,q,m,r) cases";
    }
    return out;
}

Outcome fib_lucas_identities() {
    Outcome out;
    const auto fib = make_params(1, -1);
    for (Kind kind : {Kind::First, Kind::Second}) {
        const auto square = oracle::brute_sums_upto(fib, kind, 200, oracle::SumMode::weighted_square());
        const auto stride2 = oracle::brute_sums_upto(fib, kind, 200, oracle::SumMode::weighted_stride2());
        for (Index n = 1; n <= 200; ++n) {
            if (fib_luc_weighted_square(kind, n) != square[n]) {
                out.fail(std::string("weighted square ") + std::string(to_string(kind)) + " n=" +
                         std::to_string(n));
            }
            if (fib_luc_weighted_stride2(kind, n) != stride2[n]) {
                out.fail(std::string("weighted stride-2 ") + std::string(to_string(kind)) + " n=" +
                         std::to_string(n) + ": closed form " +
                         to_decimal(fib_luc_weighted_stride2(kind, n)) + ", oracle " +
                         to_decimal(stride2[n]));
            }
        }
    }
    if (out.ok) {
        const ExactInt l3 = fib_luc_weighted_stride2(Kind::Second, 3);
        out.detail = "n <= 200, both kinds; sum i L_{2i} at n=3 is " + to_decimal(l3) +
                     " (closed form = oracle)";
    }
    return out;
}

Outcome abel() {
    Outcome out;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> len(1, 100);
    std::uniform_int_distribution<long> val(-1000000, 1000000);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = len(rng);
        std::vector<ExactInt> a(n);
        std::vector<ExactInt> b(n);
        ExactInt direct = 0;
        for (int i = 0; i < n; ++i) {
            a[i] = val(rng);
            b[i] = val(rng);
            direct += a[i] * b[i];
        }
        if (abel_sum(a, b) != direct) {
            out.fail("trial " + std::to_string(trial));
        }
    }
    if (out.ok) {
        out.detail = "1000 random pairs";
    }
    return out;
}

Outcome performance() {
    Outcome out;
    const auto fib = make_params(1, -1);
    constexpr Index n = 100000;
    const auto t0 = Clock::now();
    const ExactInt naive = oracle::brute_sum(fib, Kind::First, n, oracle::SumMode::weighted());
    const double naive_s = seconds_since(t0);
    const auto t1 = Clock::now();
    const ExactInt closed = weighted_sum(fib, Kind::First, n).value;
    const double closed_s = seconds_since(t1);
    if (naive != closed) {
        out.fail("values differ");
    }
    if (!(closed_s < naive_s)) {
        out.fail("closed form " + fmt_seconds(closed_s) + " not faster than naive " + fmt_seconds(naive_s));
    }
    if (out.ok) {
        out.detail = "equal " + std::to_string(closed.get_str().size()) + "-digit values; naive " +
                     fmt_seconds(naive_s) + ", closed form " + fmt_seconds(closed_s);
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::string* output = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    if (output) {
        *output = out.str() + err.str();
    }
    return code;
}

Outcome bfile_conformance() {
    Outcome out;
    for (const NamedSequence& seq : registry()) {
        const std::string path = g_fixtures + "/b" + std::string(seq.oeis_id.substr(1)) + ".txt";
        std::string text;
        const int code = run_cli({"oeis-check", "--seq", std::string(seq.name), "--bfile", path}, &text);
        if (code != cli::kExitOk) {
            out.fail(std::string(seq.name) + " exit " + std::to_string(code) + ": " + text);
        }
    }
    std::string text;
    const int code = run_cli(
        {"oeis-check", "--seq", "mersenne", "--bfile", g_fixtures + "/b000225_corrupted.txt"}, &text);
    if (code != cli::kExitMismatch) {
        out.fail("corrupted fixture exit " + std::to_string(code));
    }
    if (text.find("mismatch at n = 137") == std::string::npos) {
        out.fail("corrupted fixture did not report n = 137");
    }
    if (out.ok) {
        out.detail = "10 fixtures exit 0; corrupted Mersenne fixture exits 1 at n = 137";
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        g_fixtures = argv[1];
    }
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "table of first ten terms", table_reproduction},
        {2, "closed forms equal brute force on the default sweep", oracle_sweep},
        {3, "exact-division witnesses", exact_division},
        {4, "named-sequence specializations", specialization},
        {5, "stride V numerator with and without -2q^r", erratum},
        {6, "V_{m+2r} = V_r V_{m+r} - q^r V_m", identity13},
        {7, "Fibonacci/Lucas weighted square and stride-2 sums", fib_lucas_identities},
        {8, "abel_sum on random sequences", abel},
        {9, "closed form vs naive loop at n = 100000", performance},
        {10, "b-file conformance", bfile_conformance},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        failures += outcome.ok ? 0 : 1;
        std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": "
                  << outcome.detail << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
