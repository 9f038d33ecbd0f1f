#include "lucas/sequence_core.hpp"

#include <bit>

#include "lucas/errors.hpp"

namespace lucas {

std::string_view to_string(Kind kind) { return kind == Kind::First ? "U" : "V"; }

Kind parse_kind(std::string_view text) {
    if (text == "U" || text == "u" || text == "first") {
        return Kind::First;
    }
    if (text == "V" || text == "v" || text == "second") {
        return Kind::Second;
    }
    throw PreconditionViolation("unknown kind '" + std::string(text) + "' (expected U or V)");
}

std::string_view to_string(Branch branch) {
    return branch == Branch::PMinusQIsOne ? "p-q=1" : "p-q!=1";
}

std::string_view to_string(Degeneracy degeneracy) {
    switch (degeneracy) {
    case Degeneracy::None: return "nondegenerate";
    case Degeneracy::QIsZero: return "degenerate: q = 0";
    case Degeneracy::PIsZero: return "degenerate: p = 0";
    case Degeneracy::PSquaredIsQ: return "degenerate: p^2 = q";
    case Degeneracy::PSquaredIsTwoQ: return "degenerate: p^2 = 2q";
    case Degeneracy::PSquaredIsThreeQ: return "degenerate: p^2 = 3q";
    case Degeneracy::ZeroDiscriminant: return "degenerate: p^2 = 4q";
    }
    return "?";
}

SequenceParams SequenceParams::make(std::int64_t p, std::int64_t q) {
    SequenceParams params;
    params.p_ = p;
    params.q_ = q;

    const ExactInt pp = from_int(p);
    const ExactInt qq = from_int(q);
    const ExactInt p2 = pp * pp;
    params.delta_ = p2 - 4 * qq;
    params.branch_ = (pp - qq == 1) ? Branch::PMinusQIsOne : Branch::PMinusQIsNotOne;

    // alpha/beta is a root of unity iff (p^2 - 2q)/q lies in {-2,...,2}.
    if (q == 0) {
        params.degeneracy_ = Degeneracy::QIsZero;
    } else if (p2 == 4 * qq) {
        params.degeneracy_ = Degeneracy::ZeroDiscriminant;
    } else if (p == 0) {
        params.degeneracy_ = Degeneracy::PIsZero;
    } else if (p2 == qq) {
        params.degeneracy_ = Degeneracy::PSquaredIsQ;
    } else if (p2 == 2 * qq) {
        params.degeneracy_ = Degeneracy::PSquaredIsTwoQ;
    } else if (p2 == 3 * qq) {
        params.degeneracy_ = Degeneracy::PSquaredIsThreeQ;
    }
    return params;
}

ExactInt SequenceParams::p_minus_q_minus_one() const { return from_int(p_) - from_int(q_) - 1; }

QuadraticPair multiply(const QuadraticPair& a, const QuadraticPair& b, const ExactInt& delta) {
    QuadraticPair out;
    out.x = a.x * b.x + delta * a.y * b.y;
    out.y = a.x * b.y + b.x * a.y;
    return out;
}

namespace {

void halve_in_place(ExactInt& value) {
    if (!mpz_even_p(value.get_mpz_t())) {
        throw ExactDivisionViolation("odd value in Lucas halving step: " + value.get_str());
    }
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), 2);
}

void double_in_place(LucasState& s) {
    s.u *= s.v;
    s.v = s.v * s.v - 2 * s.q_pow;
    s.q_pow *= s.q_pow;
    s.index *= 2;
}

} // namespace

LucasState initial_state() { return LucasState{}; }

void advance(const SequenceParams& params, LucasState& s) {
    // 2 U_{k+1} = p U_k + V_k,  2 V_{k+1} = delta U_k + p V_k
    const ExactInt p = from_int(params.p());
    ExactInt next_u = p * s.u + s.v;
    ExactInt next_v = params.delta() * s.u + p * s.v;
    halve_in_place(next_u);
    halve_in_place(next_v);
    s.u = std::move(next_u);
    s.v = std::move(next_v);
    s.q_pow *= params.q();
    ++s.index;
}

LucasState state_at(const SequenceParams& params, Index n) {
    LucasState s = initial_state();
    if (n == 0) {
        return s;
    }
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        double_in_place(s);
        if ((n >> bit) & 1U) {
            advance(params, s);
        }
    }
    return s;
}

LucasState combine(const SequenceParams& params, const LucasState& a, const LucasState& b) {
    LucasState out;
    out.index = a.index + b.index;
    out.u = a.u * b.v + b.u * a.v;
    out.v = a.v * b.v + params.delta() * a.u * b.u;
    halve_in_place(out.u);
    halve_in_place(out.v);
    out.q_pow = a.q_pow * b.q_pow;
    return out;
}

TermWindow window_at(const SequenceParams& params, Index n) {
    if (n == 0) {
        throw PreconditionViolation("term window needs n >= 1");
    }
    TermWindow w;
    w.prev = state_at(params, n - 1);
    w.cur = w.prev;
    advance(params, w.cur);
    w.next = w.cur;
    advance(params, w.next);
    return w;
}

void slide(const SequenceParams& params, TermWindow& w) {
    w.prev = std::move(w.cur);
    w.cur = w.next;
    advance(params, w.next);
}

ExactInt term_iter(const SequenceParams& params, Kind kind, Index n) {
    ExactInt prev = kind == Kind::First ? ExactInt{0} : ExactInt{2};
    ExactInt cur = kind == Kind::First ? ExactInt{1} : from_int(params.p());
    if (n == 0) {
        return prev;
    }
    const ExactInt p = from_int(params.p());
    const ExactInt q = from_int(params.q());
    for (Index i = 1; i < n; ++i) {
        ExactInt next = p * cur - q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<ExactInt> terms_iter(const SequenceParams& params, Kind kind, Index count) {
    std::vector<ExactInt> out;
    out.reserve(count);
    if (count == 0) {
        return out;
    }
    out.push_back(kind == Kind::First ? ExactInt{0} : ExactInt{2});
    if (count == 1) {
        return out;
    }
    out.push_back(kind == Kind::First ? ExactInt{1} : from_int(params.p()));
    const ExactInt p = from_int(params.p());
    const ExactInt q = from_int(params.q());
    for (Index i = 2; i < count; ++i) {
        out.push_back(p * out[i - 1] - q * out[i - 2]);
    }
    return out;
}

ExactInt term_fast(const SequenceParams& params, Kind kind, Index n) {
    return state_at(params, n).term(kind);
}

ExactInt term_binet(const SequenceParams& params, Kind kind, Index n) {
    if (params.is_degenerate()) {
        throw UnsupportedCase("Binet evaluation requires nondegenerate parameters (" +
                              std::string(to_string(params.degeneracy())) + ")");
    }
    if (n == 0) {
        return kind == Kind::First ? ExactInt{0} : ExactInt{2};
    }

    // (p + sqrt(delta))^n = x + y sqrt(delta) = 2^n alpha^n
    QuadraticPair result;
    QuadraticPair base{from_int(params.p()), ExactInt{1}};
    for (Index e = n; e != 0; e >>= 1) {
        if (e & 1U) {
            result = multiply(result, base, params.delta());
        }
        if (e > 1) {
            base = multiply(base, base, params.delta());
        }
    }

    // V_n = 2x / 2^n, U_n = 2y sqrt(delta) / (2^n sqrt(delta))
    const ExactInt& coefficient = kind == Kind::First ? result.y : result.x;
    const auto shift = static_cast<mp_bitcnt_t>(n - 1);
    if (!mpz_divisible_2exp_p(coefficient.get_mpz_t(), shift)) {
        throw ExactDivisionViolation("Binet coefficient not divisible by 2^" +
                                     std::to_string(n - 1));
    }
    ExactInt out;
    mpz_tdiv_q_2exp(out.get_mpz_t(), coefficient.get_mpz_t(), shift);
    return out;
}

ExactInt binet_special_pq1(const SequenceParams& params, Kind kind, Index n) {
    if (params.branch() != Branch::PMinusQIsOne) {
        throw UnsupportedCase("geometric form requires p - q = 1");
    }
    const ExactInt q = from_int(params.q());
    const ExactInt q_n = power(q, n);
    if (kind == Kind::Second) {
        return q_n + 1;
    }
    if (params.q() == 1) {
        return ExactInt{static_cast<unsigned long>(n)};
    }
    return exact_divide(q_n - 1, q - 1);
}

} // namespace lucas
