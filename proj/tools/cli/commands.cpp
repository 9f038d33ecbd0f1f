#include "cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "cli/bfile.hpp"
#include "cli/report.hpp"
#include "lucas/consecutive_sums.hpp"
#include "lucas/errors.hpp"
#include "lucas/named_sequences.hpp"
#include "lucas/oracle.hpp"
#include "lucas/sequence_core.hpp"
#include "lucas/stride_sums.hpp"
#include "lucas/sweep.hpp"
#include "lucas/weighted_sums.hpp"

namespace lucas::cli {

namespace {

struct UsageError : LucasError {
    using LucasError::LucasError;
};

OutputFormat parse_format(const std::string& text) {
    if (text == "text") {
        return OutputFormat::Text;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw UsageError("unknown format '" + text + "' (expected text or json)");
}

Json params_json(std::int64_t p, std::int64_t q) {
    Json j;
    j["p"] = p;
    j["q"] = q;
    return j;
}

std::string degeneracy_note(const SequenceParams& params) {
    if (!params.is_degenerate()) {
        return "";
    }
    return " [(p,q) = (" + std::to_string(params.p()) + "," + std::to_string(params.q()) +
           ") is " + std::string(to_string(params.degeneracy())) + "]";
}

std::string abbreviate(const std::string& digits) {
    constexpr std::size_t kKeep = 15;
    if (digits.size() <= 2 * kKeep + 3) {
        return digits;
    }
    return digits.substr(0, kKeep) + "..." + digits.substr(digits.size() - kKeep) + " (" +
           std::to_string(digits.size()) + " digits)";
}

// ---------------------------------------------------------------- term

struct TermOptions {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::string kind = "U";
    Index n = 0;
    std::string method = "fast";
    std::string format = "text";
};

int cmd_term(const TermOptions& opt, std::ostream& out) {
    const SequenceParams params = make_params(opt.p, opt.q);
    const Kind kind = parse_kind(opt.kind);
    const OutputFormat format = parse_format(opt.format);

    ExactInt value;
    if (opt.method == "iter") {
        value = term_iter(params, kind, opt.n);
    } else if (opt.method == "fast") {
        value = term_fast(params, kind, opt.n);
    } else if (opt.method == "binet") {
        if (params.is_degenerate()) {
            throw UnsupportedCase("method binet requires nondegenerate parameters" +
                                  degeneracy_note(params));
        }
        value = term_binet(params, kind, opt.n);
    } else {
        throw UsageError("unknown method '" + opt.method + "' (expected iter, fast or binet)");
    }

    if (format == OutputFormat::Json) {
        Json row;
        row["command"] = "term";
        row["params"] = params_json(opt.p, opt.q);
        row["kind"] = std::string(to_string(kind));
        row["n"] = opt.n;
        row["method"] = opt.method;
        row["value"] = to_decimal(value);
        row["status"] = "ok";
        out << row.dump() << '\n';
    } else {
        out << to_decimal(value) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- sum

struct SumOptions {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::string kind = "U";
    Index n = 0;
    std::string mode = "consecutive";
    std::optional<Index> r;
    bool verbose = false;
    std::string format = "text";
};

int cmd_sum(const SumOptions& opt, std::ostream& out) {
    const SequenceParams params = make_params(opt.p, opt.q);
    const Kind kind = parse_kind(opt.kind);
    const OutputFormat format = parse_format(opt.format);

    const auto require_fibonacci = [&] {
        if (opt.p != 1 || opt.q != -1) {
            throw UnsupportedCase("mode " + opt.mode + " is defined only for (p,q) = (1,-1)");
        }
    };

    std::optional<SumResult> result;
    ExactInt value;
    if (opt.mode == "consecutive") {
        result = consecutive_sum(params, kind, opt.n);
    } else if (opt.mode == "weighted") {
        result = weighted_sum(params, kind, opt.n);
    } else if (opt.mode == "weighted-powerform") {
        result = weighted_sum_powerform(params, kind, opt.n);
    } else if (opt.mode == "stride") {
        if (!opt.r) {
            throw UsageError("mode stride requires --r");
        }
        result = stride_sum(StrideQuery{params, kind, opt.n, *opt.r});
    } else if (opt.mode == "reverse") {
        value = reverse_weighted_sum(params, kind, opt.n, ReverseMethod::DifferenceOfSums);
    } else if (opt.mode == "reverse-partial") {
        value = reverse_weighted_sum(params, kind, opt.n, ReverseMethod::SumOfConsecutiveSums);
    } else if (opt.mode == "weighted-stride2") {
        require_fibonacci();
        value = fib_luc_weighted_stride2(kind, opt.n);
    } else if (opt.mode == "weighted-square") {
        require_fibonacci();
        value = fib_luc_weighted_square(kind, opt.n);
    } else {
        throw UsageError("unknown mode '" + opt.mode + "'");
    }
    if (result) {
        value = result->value;
    }

    if (format == OutputFormat::Json) {
        Json row;
        row["command"] = "sum";
        row["params"] = params_json(opt.p, opt.q);
        row["kind"] = std::string(to_string(kind));
        row["n"] = opt.n;
        if (opt.mode == "stride") {
            row["r"] = *opt.r;
        }
        row["mode"] = opt.mode;
        row["value"] = to_decimal(value);
        if (opt.verbose && result) {
            row["branch"] = std::string(to_string(result->branch_used));
            row["numerator"] = to_decimal(result->witness.numerator);
            row["denominator"] = to_decimal(result->witness.denominator);
            row["remainder_zero"] = result->witness.remainder_checked_zero;
        }
        row["status"] = "ok";
        out << row.dump() << '\n';
        return kExitOk;
    }

    out << to_decimal(value) << '\n';
    if (opt.verbose && result) {
        out << "branch: " << to_string(result->branch_used) << '\n'
            << "numerator: " << to_decimal(result->witness.numerator) << '\n'
            << "denominator: " << to_decimal(result->witness.denominator) << '\n'
            << "remainder: " << (result->witness.remainder_checked_zero ? "0" : "nonzero") << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- table

struct TableOptions {
    std::string format = "text";
    std::optional<std::string> seq;
};

constexpr Index kTableColumns = 10;

std::vector<std::string> table_row(const NamedSequence& seq) {
    std::vector<std::string> values;
    for (const ExactInt& v : terms_iter(seq.params(), seq.kind, kTableColumns)) {
        values.push_back(to_decimal(v));
    }
    return values;
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const std::string& part : parts) {
        if (!s.empty()) {
            s += ' ';
        }
        s += part;
    }
    return s;
}

int cmd_table(const TableOptions& opt, std::ostream& out) {
    const OutputFormat format = parse_format(opt.format);
    std::vector<const NamedSequence*> rows;
    if (opt.seq) {
        rows.push_back(&lookup(*opt.seq));
    } else {
        for (const NamedSequence& seq : registry()) {
            rows.push_back(&seq);
        }
    }

    if (format == OutputFormat::Json) {
        for (const NamedSequence* seq : rows) {
            Json row;
            row["command"] = "table";
            row["name"] = std::string(seq->name);
            row["symbol"] = std::string(seq->symbol);
            row["params"] = params_json(seq->p, seq->q);
            row["kind"] = std::string(to_string(seq->kind));
            row["oeis"] = std::string(seq->oeis_id);
            row["values"] = table_row(*seq);
            row["status"] = "ok";
            out << row.dump() << '\n';
        }
        return kExitOk;
    }

    if (opt.seq) {
        out << join(table_row(*rows.front())) << '\n';
        return kExitOk;
    }
    out << "n 0 1 2 3 4 5 6 7 8 9 OEIS\n";
    for (const NamedSequence* seq : rows) {
        out << seq->symbol << ' ' << join(table_row(*seq)) << ' ' << seq->oeis_id << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::int64_t pmax = 10;
    std::int64_t qmax = 10;
    std::optional<std::int64_t> pmin;
    std::optional<std::int64_t> qmin;
    Index nmax = 200;
    std::optional<Index> n;
    Index rmax = 10;
    bool include_degenerate = false;
    std::vector<std::string> only;
    std::optional<std::string> kind;
    std::size_t max_failures = 10;
    std::size_t show = 10;
    unsigned threads = 1;
    std::string format = "text";
};

oracle::CheckSelection parse_checks(const std::vector<std::string>& only) {
    if (only.empty()) {
        return {};
    }
    oracle::CheckSelection sel = oracle::CheckSelection::none();
    for (const std::string& name : only) {
        if (name == "consecutive") {
            sel.consecutive = true;
        } else if (name == "weighted") {
            sel.weighted = true;
        } else if (name == "powerform") {
            sel.powerform = true;
        } else if (name == "stride") {
            sel.stride = true;
        } else if (name == "erratum") {
            sel.erratum = true;
        } else if (name == "reverse") {
            sel.reverse = true;
        } else {
            throw UsageError("unknown check '" + name +
                             "' (expected consecutive, weighted, powerform, stride, erratum "
                             "or reverse)");
        }
    }
    return sel;
}

Json report_row(const oracle::VerificationReport& rep) {
    Json row;
    row["command"] = "verify";
    row["params"] = params_json(rep.p, rep.q);
    row["kind"] = std::string(to_string(rep.kind));
    row["n"] = rep.n;
    if (rep.r != 0) {
        row["r"] = rep.r;
    }
    row["mode"] = oracle::to_string(rep.mode);
    row["value"] = to_decimal(rep.closed_form);
    row["oracle"] = to_decimal(rep.oracle);
    row["witness_ok"] = rep.witness_ok;
    if (!rep.note.empty()) {
        row["note"] = rep.note;
    }
    row["status"] = std::string(oracle::to_string(rep.status));
    return row;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const OutputFormat format = parse_format(opt.format);
    oracle::OracleConfig config;
    config.p_range = {opt.pmin.value_or(-opt.pmax), opt.pmax};
    config.q_range = {opt.qmin.value_or(-opt.qmax), opt.qmax};
    config.n_max = opt.nmax;
    config.only_n = opt.n;
    config.r_max = opt.rmax;
    config.skip_degenerate = !opt.include_degenerate;
    config.checks = parse_checks(opt.only);
    if (opt.kind) {
        config.only_kind = parse_kind(*opt.kind);
    }
    config.threads = opt.threads;
    oracle::validate(config);

    ReportDocument doc;
    doc.command = "verify";
    doc.parameters = {
        {"p", "[" + std::to_string(config.p_range.lo) + "," + std::to_string(config.p_range.hi) + "]"},
        {"q", "[" + std::to_string(config.q_range.lo) + "," + std::to_string(config.q_range.hi) + "]"},
        {"n", opt.n ? std::to_string(*opt.n) : "1.." + std::to_string(config.n_max)},
        {"r", "1.." + std::to_string(config.r_max)},
        {"degenerate", config.skip_degenerate ? "skipped" : "included"},
    };

    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t not_applicable = 0;
    std::size_t witness_failures = 0;
    std::size_t shown_erratum = 0;
    const bool erratum_only = !opt.only.empty() && config.checks.erratum &&
                              !config.checks.stride && !config.checks.consecutive &&
                              !config.checks.weighted && !config.checks.reverse &&
                              !config.checks.powerform;

    oracle::sweep_each(config, [&](const oracle::VerificationReport& rep) {
        ++total;
        if (!rep.witness_ok) {
            ++witness_failures;
        }
        switch (rep.status) {
        case oracle::Status::Pass: ++passed; break;
        case oracle::Status::NotApplicable: ++not_applicable; break;
        case oracle::Status::Fail:
            ++failed;
            if (failed <= opt.max_failures) {
                doc.rows.push_back(report_row(rep));
            }
            break;
        }
        if (erratum_only && rep.mode == oracle::CheckMode::Erratum &&
            rep.status == oracle::Status::Pass && shown_erratum < opt.show) {
            ++shown_erratum;
            const ErratumReport er = erratum_demo(
                StrideQuery{make_params(rep.p, rep.q), rep.kind, rep.n, rep.r}, rep.oracle);
            Json row;
            row["command"] = "verify";
            row["params"] = params_json(rep.p, rep.q);
            row["kind"] = "V";
            row["n"] = rep.n;
            row["r"] = rep.r;
            row["mode"] = "erratum";
            row["value"] = to_decimal(er.corrected);
            row["uncorrected"] = to_decimal(er.uncorrected);
            row["oracle"] = to_decimal(er.oracle);
            row["difference"] = to_decimal(er.difference);
            row["predicted_difference"] = to_decimal(er.predicted_difference);
            row["status"] = "pass";
            doc.rows.push_back(std::move(row));
        }
    });

    doc.summary.push_back("cells: " + std::to_string(total) + " total, " + std::to_string(passed) +
                          " pass, " + std::to_string(failed) + " fail, " +
                          std::to_string(not_applicable) + " not applicable, " +
                          std::to_string(witness_failures) + " division-witness failures");
    const bool ok = failed == 0 && witness_failures == 0;
    if (ok) {
        doc.summary.push_back("all " + std::to_string(passed) + " cells pass");
    } else {
        doc.summary.push_back("FAILED: " + std::to_string(failed) + " of " +
                              std::to_string(total) + " cells");
    }
    doc.status = ok ? "pass" : "fail";
    doc.render(out, format);
    return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
    std::int64_t p = 1;
    std::int64_t q = -1;
    std::string kind = "U";
    std::vector<Index> ns{100000};
    bool full_values = false;
    std::string format = "text";
};

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
    using Clock = std::chrono::steady_clock;
    const SequenceParams params = make_params(opt.p, opt.q);
    const Kind kind = parse_kind(opt.kind);
    const OutputFormat format = parse_format(opt.format);
    if (params.is_degenerate()) {
        throw UnsupportedCase("bench requires nondegenerate parameters" + degeneracy_note(params));
    }

    ReportDocument doc;
    doc.command = "bench";
    doc.parameters = {{"p", std::to_string(opt.p)},
                      {"q", std::to_string(opt.q)},
                      {"kind", std::string(to_string(kind))}};
    bool all_equal = true;
    for (Index n : opt.ns) {
        if (n == 0) {
            throw PreconditionViolation("bench needs n >= 1");
        }
        const auto t0 = Clock::now();
        const ExactInt naive = oracle::brute_sum(params, kind, n, oracle::SumMode::weighted());
        const auto t1 = Clock::now();
        const ExactInt closed = weighted_sum(params, kind, n).value;
        const auto t2 = Clock::now();

        const double naive_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const double closed_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
        const bool equal = naive == closed;
        all_equal = all_equal && equal;

        const std::string naive_digits = to_decimal(naive);
        const std::string closed_digits = to_decimal(closed);
        std::ostringstream naive_ms_text;
        std::ostringstream closed_ms_text;
        naive_ms_text.setf(std::ios::fixed);
        closed_ms_text.setf(std::ios::fixed);
        naive_ms_text.precision(3);
        closed_ms_text.precision(3);
        naive_ms_text << naive_ms;
        closed_ms_text << closed_ms;

        Json row;
        row["n"] = n;
        row["naive_ms"] = naive_ms_text.str();
        row["closed_ms"] = closed_ms_text.str();
        row["faster"] = closed_ms < naive_ms ? "closed-form" : "naive";
        row["equal"] = equal ? "yes" : "NO";
        row["naive_value"] = opt.full_values ? naive_digits : abbreviate(naive_digits);
        row["closed_value"] = opt.full_values ? closed_digits : abbreviate(closed_digits);
        doc.rows.push_back(std::move(row));
    }
    doc.summary.push_back(all_equal ? "values agree" : "VALUE MISMATCH");
    doc.status = all_equal ? "pass" : "fail";
    doc.render(out, format);
    return all_equal ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- oeis-check

struct OeisOptions {
    std::string seq;
    std::string bfile;
    std::optional<std::int64_t> max_n;
    std::string format = "text";
};

int cmd_oeis_check(const OeisOptions& opt, std::ostream& out, std::ostream& err) {
    const OutputFormat format = parse_format(opt.format);
    const NamedSequence& seq = lookup(opt.seq);
    std::ifstream in(opt.bfile);
    if (!in) {
        err << "error: cannot read b-file '" << opt.bfile << "'\n";
        return kExitUsage;
    }
    std::vector<BFileEntry> entries;
    try {
        entries = parse_bfile(in);
    } catch (const BFileParseError& e) {
        err << "error: parse error in " << opt.bfile << " at " << e.what() << '\n';
        return kExitUsage;
    }

    ReportDocument doc;
    doc.command = "oeis-check";
    doc.parameters = {{"seq", std::string(seq.name)},
                      {"oeis", std::string(seq.oeis_id)},
                      {"bfile", opt.bfile}};
    if (seq.oeis_divisor != 1) {
        doc.parameters.emplace_back("scale", "term/" + std::to_string(seq.oeis_divisor));
    }

    const SequenceParams params = seq.params();
    const ExactInt divisor{seq.oeis_divisor};
    std::size_t compared = 0;
    std::optional<std::int64_t> first_index;
    std::optional<std::int64_t> last_index;
    for (const BFileEntry& entry : entries) {
        if (opt.max_n && entry.index > *opt.max_n) {
            break;
        }
        if (entry.index < 0) {
            err << "error: negative index " << entry.index << " in " << opt.bfile << '\n';
            return kExitUsage;
        }
        const ExactInt computed =
            exact_divide(term_fast(params, seq.kind, static_cast<Index>(entry.index)), divisor);
        if (!first_index) {
            first_index = entry.index;
        }
        last_index = entry.index;
        ++compared;
        if (computed != entry.value) {
            Json row;
            row["command"] = "oeis-check";
            row["name"] = std::string(seq.name);
            row["n"] = entry.index;
            row["value"] = to_decimal(computed);
            row["bfile_value"] = to_decimal(entry.value);
            row["status"] = "mismatch";
            doc.rows.push_back(std::move(row));
            doc.summary.push_back("mismatch at n = " + std::to_string(entry.index));
            doc.status = "fail";
            doc.render(out, format);
            return kExitMismatch;
        }
    }
    std::string range = compared == 0 ? "no entries"
                                      : "n = " + std::to_string(*first_index) + ".." +
                                            std::to_string(*last_index);
    doc.summary.push_back(std::to_string(compared) + " entries compared (" + range +
                          "), all match");
    doc.render(out, format);
    return kExitOk;
}

void add_format(CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact closed-form sums over Lucas sequences U_n(p,q) and V_n(p,q)",
                 "lucas-sums"};
    app.require_subcommand(1);

    TermOptions term;
    CLI::App* term_cmd = app.add_subcommand("term", "Print U_n or V_n");
    term_cmd->add_option("--p", term.p)->required();
    term_cmd->add_option("--q", term.q)->required();
    term_cmd->add_option("--kind", term.kind, "U or V");
    term_cmd->add_option("--n", term.n)->required();
    term_cmd->add_option("--method", term.method, "iter, fast or binet");
    add_format(term_cmd, term.format);

    SumOptions sum;
    CLI::App* sum_cmd = app.add_subcommand("sum", "Evaluate a closed-form sum");
    sum_cmd->add_option("--p", sum.p)->required();
    sum_cmd->add_option("--q", sum.q)->required();
    sum_cmd->add_option("--kind", sum.kind, "U or V");
    sum_cmd->add_option("--n", sum.n)->required();
    sum_cmd->add_option("--mode", sum.mode,
                        "consecutive, weighted, weighted-powerform, stride, reverse, "
                        "reverse-partial, weighted-stride2, weighted-square");
    sum_cmd->add_option("--r", sum.r, "stride (mode stride)");
    sum_cmd->add_flag("--verbose", sum.verbose, "print branch and division witness");
    add_format(sum_cmd, sum.format);

    TableOptions table;
    CLI::App* table_cmd = app.add_subcommand("table", "First ten terms of the named sequences");
    table_cmd->add_option("--seq", table.seq, "single sequence name");
    add_format(table_cmd, table.format);

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Closed forms vs brute force");
    verify_cmd->add_option("--pmax", verify.pmax);
    verify_cmd->add_option("--qmax", verify.qmax);
    verify_cmd->add_option("--pmin", verify.pmin, "default -pmax");
    verify_cmd->add_option("--qmin", verify.qmin, "default -qmax");
    verify_cmd->add_option("--nmax", verify.nmax);
    verify_cmd->add_option("--n", verify.n, "check a single n");
    verify_cmd->add_option("--rmax", verify.rmax);
    verify_cmd->add_option("--kind", verify.kind, "restrict to U or V");
    verify_cmd->add_flag("--include-degenerate", verify.include_degenerate);
    verify_cmd->add_option("--only", verify.only,
                           "consecutive, weighted, powerform, stride, erratum, reverse");
    verify_cmd->add_option("--max-failures", verify.max_failures);
    verify_cmd->add_option("--show", verify.show, "erratum rows to print");
    verify_cmd->add_option("--threads", verify.threads, "0 = all cores");
    add_format(verify_cmd, verify.format);

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Naive loop vs closed-form weighted sum");
    bench_cmd->add_option("--p", bench.p);
    bench_cmd->add_option("--q", bench.q);
    bench_cmd->add_option("--kind", bench.kind, "U or V");
    bench_cmd->add_option("--n", bench.ns, "one or more n (comma separated)")->delimiter(',');
    bench_cmd->add_flag("--full-values", bench.full_values);
    add_format(bench_cmd, bench.format);

    OeisOptions oeis;
    CLI::App* oeis_cmd = app.add_subcommand("oeis-check", "Compare against an OEIS b-file");
    oeis_cmd->add_option("--seq", oeis.seq)->required();
    oeis_cmd->add_option("--bfile", oeis.bfile)->required();
    oeis_cmd->add_option("--max-n", oeis.max_n);
    add_format(oeis_cmd, oeis.format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (term_cmd->parsed()) {
            return cmd_term(term, out);
        }
        if (sum_cmd->parsed()) {
            return cmd_sum(sum, out);
        }
        if (table_cmd->parsed()) {
            return cmd_table(table, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify, out);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench, out);
        }
        if (oeis_cmd->parsed()) {
            return cmd_oeis_check(oeis, out, err);
        }
    } catch (const ExactDivisionViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const LucasError& e) {
        std::string note;
        if (sum_cmd->parsed()) {
            note = degeneracy_note(make_params(sum.p, sum.q));
        }
        err << "error: " << e.what() << note << '\n';
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace lucas::cli
