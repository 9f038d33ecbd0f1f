#include "lucas/stride_sums.hpp"

#include "lucas/errors.hpp"
#include "lucas/oracle.hpp"
#include "lucas/weighted_sums.hpp"

namespace lucas {

namespace {

void check_query(const StrideQuery& query) {
    if (query.n == 0) {
        throw PreconditionViolation("stride sum needs n >= 1");
    }
    if (query.r == 0) {
        throw PreconditionViolation("stride sum needs r >= 1");
    }
}

struct StrideTerms {
    LucasState at_r;
    LucasState at_nr;
    LucasState at_next;  // (n + 1) r
    ExactInt denominator;
};

StrideTerms stride_terms(const StrideQuery& query) {
    check_query(query);
    StrideTerms t;
    t.at_r = state_at(query.params, query.r);
    t.at_nr = state_at(query.params, query.n * query.r);
    t.at_next = combine(query.params, t.at_nr, t.at_r);
    t.denominator = 1 + t.at_r.q_pow - t.at_r.v;
    if (sgn(t.denominator) == 0) {
        throw ZeroDenominator("stride sum undefined: 1 + q^r - V_r = 0 for (p,q) = (" +
                              std::to_string(query.params.p()) + "," +
                              std::to_string(query.params.q()) +
                              "), r = " + std::to_string(query.r));
    }
    return t;
}

} // namespace

ExactInt stride_denominator(const SequenceParams& params, Index r) {
    const LucasState s = state_at(params, r);
    return 1 + s.q_pow - s.v;
}

SumResult stride_sum(const StrideQuery& query) {
    const StrideTerms t = stride_terms(query);
    const ExactInt& qr = t.at_r.q_pow;

    SumResult result;
    result.branch_used = query.params.branch();
    if (query.kind == Kind::First) {
        const ExactInt numerator = t.at_r.u + qr * t.at_nr.u - t.at_next.u;
        result.value = exact_divide(numerator, t.denominator, &result.witness);
    } else {
        const ExactInt numerator = t.at_r.v + qr * t.at_nr.v - t.at_next.v - 2 * qr;
        result.value = exact_divide(numerator, t.denominator, &result.witness);
    }
    return result;
}

ErratumReport erratum_demo(const StrideQuery& query) {
    if (query.kind != Kind::Second) {
        throw PreconditionViolation("erratum demonstration concerns the V stride sum only");
    }
    check_query(query);
    return erratum_demo(query, oracle::brute_sum(query.params, Kind::Second, query.n,
                                                 oracle::SumMode::stride(query.r)));
}

ErratumReport erratum_demo(const StrideQuery& query, const ExactInt& oracle_value) {
    if (query.kind != Kind::Second) {
        throw PreconditionViolation("erratum demonstration concerns the V stride sum only");
    }
    const StrideTerms t = stride_terms(query);
    const ExactInt& qr = t.at_r.q_pow;

    ErratumReport report;
    const ExactInt uncorrected_numerator = t.at_r.v + qr * t.at_nr.v - t.at_next.v;
    report.corrected = exact_divide(uncorrected_numerator - 2 * qr, t.denominator);
    report.uncorrected = ExactRational(uncorrected_numerator, t.denominator);
    report.uncorrected.canonicalize();
    report.oracle = oracle_value;
    report.difference = report.uncorrected - ExactRational(report.oracle);
    report.predicted_difference = ExactRational(2 * qr, t.denominator);
    report.predicted_difference.canonicalize();
    return report;
}

bool identity13_check(const SequenceParams& params, Index m, Index r) {
    const LucasState at_m = state_at(params, m);
    const LucasState at_r = state_at(params, r);
    const LucasState at_mr = combine(params, at_m, at_r);
    const ExactInt lhs = term_fast(params, Kind::Second, m + 2 * r);
    return lhs == at_r.v * at_mr.v - at_r.q_pow * at_m.v;
}

ExactInt fib_luc_weighted_stride2(Kind kind, Index n) {
    if (n == 0) {
        throw PreconditionViolation("weighted stride sum needs n >= 1");
    }
    const SequenceParams fib = make_params(1, -1);
    LucasState s = state_at(fib, 2 * n);
    const ExactInt t_2n = s.term(kind);
    advance(fib, s);
    const ExactInt t_2n1 = s.term(kind);
    const ExactInt nn{static_cast<unsigned long>(n)};
    if (kind == Kind::First) {
        return nn * t_2n1 - t_2n;
    }
    return nn * t_2n1 - t_2n + 2;
}

ExactInt fib_luc_weighted_square(Kind kind, Index n) {
    if (n == 0) {
        throw PreconditionViolation("weighted square sum needs n >= 1");
    }
    const SequenceParams fib = make_params(1, -1);
    LucasState s = state_at(fib, n);
    const ExactInt t_n = s.term(kind);
    advance(fib, s);
    const ExactInt t_n1 = s.term(kind);
    const ExactInt nn{static_cast<unsigned long>(n)};
    const bool even = n % 2 == 0;
    if (kind == Kind::First) {
        // (1 - (-1)^n)/2
        return nn * t_n * t_n1 - t_n * t_n + (even ? 0 : 1);
    }
    // (3 + 5(-1)^n)/2
    return nn * t_n * t_n1 - t_n * t_n + (even ? 4 : -1);
}

ExactInt reverse_weighted_sum(const SequenceParams& params, Kind kind, Index n,
                              ReverseMethod method) {
    if (n == 0) {
        throw PreconditionViolation("reverse weighted sum needs n >= 1");
    }
    if (method == ReverseMethod::DifferenceOfSums) {
        const TermWindow w = window_at(params, n);
        const ExactInt nn{static_cast<unsigned long>(n)};
        return (nn + 1) * consecutive_sum(params, kind, w).value -
               weighted_sum(params, kind, w).value;
    }
    TermWindow w = window_at(params, 1);
    ExactInt total = consecutive_sum(params, kind, w).value;
    for (Index k = 2; k <= n; ++k) {
        slide(params, w);
        total += consecutive_sum(params, kind, w).value;
    }
    return total;
}

} // namespace lucas
