#include "lucas/weighted_sums.hpp"

#include "lucas/errors.hpp"

namespace lucas {

OmegaPsi omega_psi(const SequenceParams& params, const TermWindow& w) {
    const ExactInt p = from_int(params.p());
    const ExactInt q = from_int(params.q());
    OmegaPsi out;
    out.omega = w.next.u - 2 * q * w.cur.u + q * q * w.prev.u + q - 1;
    out.psi = w.next.v - 2 * q * w.cur.v + q * q * w.prev.v + (p - 2 * q) * (q - 1);
    return out;
}

OmegaPsi omega_psi(const SequenceParams& params, Index n) {
    if (n == 0) {
        throw PreconditionViolation("Omega/Psi need n >= 1");
    }
    return omega_psi(params, window_at(params, n));
}

SumResult weighted_sum(const SequenceParams& params, Kind kind, const TermWindow& w) {
    const Index n = w.n();
    const ExactInt nn{static_cast<unsigned long>(n)};
    const ExactInt q = from_int(params.q());
    const ExactInt tri = binom2_next(n);

    SumResult result;
    result.branch_used = params.branch();

    if (params.branch() == Branch::PMinusQIsOne) {
        if (kind == Kind::First) {
            if (params.q() == 1) {
                throw UnsupportedCase("weighted sum of U_i requires q != 1 when p - q = 1");
            }
            // q/(q-1) * (n U_n - (q U_{n-1} - n + 1)/(q-1) - C(n+1,2)/q) over (q-1)^2
            const ExactInt qm1 = q - 1;
            const ExactInt numerator =
                q * qm1 * nn * w.cur.u - q * (q * w.prev.u - nn + 1) - qm1 * tri;
            result.value = exact_divide(numerator, qm1 * qm1, &result.witness);
        } else if (params.q() == 1) {
            // (q U_n - n)/(q - 1) is the consecutive U-sum; at q = 1 that sum is
            // C(n+1,2) because U_i = i, and the closed form collapses to n U_{n+1}.
            result.value = exact_divide(nn * w.next.u, ExactInt{1}, &result.witness);
        } else {
            const ExactInt qm1 = q - 1;
            const ExactInt numerator = qm1 * (nn * w.next.u + tri) - (q * w.cur.u - nn);
            result.value = exact_divide(numerator, qm1, &result.witness);
        }
        return result;
    }

    const ExactInt d = params.p_minus_q_minus_one();
    const OmegaPsi op = omega_psi(params, w);
    if (kind == Kind::First) {
        const ExactInt numerator = nn * (w.next.u - q * w.cur.u) * d - op.omega;
        result.value = exact_divide(numerator, d * d, &result.witness);
    } else {
        const ExactInt numerator = (nn * (w.next.v - q * w.cur.v) + 2 * q) * d - op.psi;
        result.value = exact_divide(numerator, d * d, &result.witness);
    }
    return result;
}

SumResult weighted_sum(const SequenceParams& params, Kind kind, Index n) {
    if (n == 0) {
        if (params.branch() == Branch::PMinusQIsOne && kind == Kind::First && params.q() == 1) {
            throw UnsupportedCase("weighted sum of U_i requires q != 1 when p - q = 1");
        }
        SumResult empty;
        empty.value = 0;
        empty.branch_used = params.branch();
        return empty;
    }
    return weighted_sum(params, kind, window_at(params, n));
}

SumResult weighted_sum_powerform(const SequenceParams& params, Kind kind, Index n) {
    if (params.branch() != Branch::PMinusQIsOne) {
        throw UnsupportedCase("power-form weighted sum requires p - q = 1");
    }
    if (params.q() == 1) {
        throw UnsupportedCase("power-form weighted sum requires q != 1 (discriminant is zero)");
    }
    if (kind == Kind::First && params.q() == 0) {
        throw UnsupportedCase("power-form weighted sum of U_i requires q != 0");
    }
    if (n == 0) {
        throw PreconditionViolation("power-form weighted sum needs n >= 1");
    }

    const ExactInt nn{static_cast<unsigned long>(n)};
    const ExactInt q = from_int(params.q());
    const ExactInt qm1 = q - 1;
    const ExactInt delta = qm1 * qm1;
    const ExactInt tri = binom2_next(n);
    const ExactInt bracket = nn * q - nn - 1;

    SumResult result;
    result.branch_used = Branch::PMinusQIsOne;
    if (kind == Kind::First) {
        // q/(q-1) * ((q^n (nq-n-1) + 1)/delta - C(n+1,2)/q)
        const ExactInt numerator = q * (power(q, n) * bracket + 1) - delta * tri;
        result.value = exact_divide(numerator, delta * qm1, &result.witness);
    } else {
        // (q^{n+1} (nq-n-1) + q)/delta + C(n+1,2)
        const ExactInt numerator = power(q, n + 1) * bracket + q + delta * tri;
        result.value = exact_divide(numerator, delta, &result.witness);
    }
    return result;
}

ExactInt abel_sum(std::span<const ExactInt> a, std::span<const ExactInt> b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("abel_sum: sequences of length " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()));
    }
    if (a.empty()) {
        throw LengthMismatch("abel_sum: sequences must be nonempty");
    }
    ExactInt partial = 0;
    ExactInt total = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        partial += b[i];
        total += (a[i] - a[i + 1]) * partial;
    }
    partial += b.back();
    total += a.back() * partial;
    return total;
}

} // namespace lucas
