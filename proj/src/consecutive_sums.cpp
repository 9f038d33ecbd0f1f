#include "lucas/consecutive_sums.hpp"

#include "lucas/errors.hpp"

namespace lucas {

SumResult consecutive_sum(const SequenceParams& params, Kind kind, const TermWindow& window) {
    const Index n = window.n();
    const ExactInt nn{static_cast<unsigned long>(n)};
    const ExactInt p = from_int(params.p());
    const ExactInt q = from_int(params.q());

    SumResult result;
    result.branch_used = params.branch();

    if (params.branch() == Branch::PMinusQIsOne) {
        if (kind == Kind::First) {
            if (params.q() == 1) {
                throw UnsupportedCase("sum of U_i requires q != 1 when p - q = 1");
            }
            result.value = exact_divide(q * window.cur.u - nn, q - 1, &result.witness);
        } else {
            result.value = exact_divide(window.next.u + nn - 1, ExactInt{1}, &result.witness);
        }
        return result;
    }

    const ExactInt d = params.p_minus_q_minus_one();
    if (kind == Kind::First) {
        result.value = exact_divide(window.next.u - q * window.cur.u - 1, d, &result.witness);
    } else {
        result.value =
            exact_divide(window.next.v - q * window.cur.v - p + 2 * q, d, &result.witness);
    }
    return result;
}

SumResult consecutive_sum(const SequenceParams& params, Kind kind, Index n) {
    if (n == 0) {
        if (params.branch() == Branch::PMinusQIsOne && kind == Kind::First && params.q() == 1) {
            throw UnsupportedCase("sum of U_i requires q != 1 when p - q = 1");
        }
        SumResult empty;
        empty.value = 0;
        empty.branch_used = params.branch();
        return empty;
    }
    return consecutive_sum(params, kind, window_at(params, n));
}

} // namespace lucas
