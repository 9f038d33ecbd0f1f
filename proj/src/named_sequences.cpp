#include "lucas/named_sequences.hpp"

#include <algorithm>

#include "lucas/errors.hpp"

namespace lucas {

namespace {

constexpr std::array<NamedSequence, 10> kRegistry{{
    {SequenceId::Fibonacci, "fibonacci", "F", 1, -1, Kind::First, "A000045", 1},
    {SequenceId::Lucas, "lucas", "L", 1, -1, Kind::Second, "A000032", 1},
    {SequenceId::Pell, "pell", "P", 2, -1, Kind::First, "A000129", 1},
    {SequenceId::CompanionPell, "companion_pell", "Q", 2, -1, Kind::Second, "A002203", 1},
    {SequenceId::Balancing, "balancing", "B", 6, 1, Kind::First, "A001109", 1},
    {SequenceId::DoubleLucasBalancing, "double_lucas_balancing", "Ĉ", 6, 1, Kind::Second,
     "A001541", 2},
    {SequenceId::Jacobsthal, "jacobsthal", "J", 1, -2, Kind::First, "A001045", 1},
    {SequenceId::JacobsthalLucas, "jacobsthal_lucas", "j", 1, -2, Kind::Second, "A014551", 1},
    {SequenceId::Mersenne, "mersenne", "M", 3, 2, Kind::First, "A000225", 1},
    {SequenceId::MersenneLucas, "mersenne_lucas", "m", 3, 2, Kind::Second, "A000051", 1},
}};

ExactInt big(Index n) { return ExactInt{static_cast<unsigned long>(n)}; }

} // namespace

std::span<const NamedSequence> registry() { return kRegistry; }

const NamedSequence& lookup(std::string_view name) {
    const auto it = std::find_if(kRegistry.begin(), kRegistry.end(),
                                 [&](const NamedSequence& s) { return s.name == name; });
    if (it == kRegistry.end()) {
        throw UnknownSequence("unknown sequence '" + std::string(name) + "'");
    }
    return *it;
}

const NamedSequence& lookup(SequenceId id) { return kRegistry[static_cast<std::size_t>(id)]; }

ExactInt specialized_weighted_sum(SequenceId id, Index n) {
    if (n == 0) {
        throw PreconditionViolation("weighted sum needs n >= 1");
    }
    const NamedSequence& seq = lookup(id);
    const SequenceParams params = seq.params();
    const ExactInt nn = big(n);
    // S_{n}, S_{n+1}, S_{n+2}, S_{n+3} of the sequence's own kind.
    LucasState s = state_at(params, n);
    const ExactInt s0 = s.term(seq.kind);
    advance(params, s);
    const ExactInt s1 = s.term(seq.kind);
    advance(params, s);
    const ExactInt s2 = s.term(seq.kind);
    advance(params, s);
    const ExactInt s3 = s.term(seq.kind);

    switch (id) {
    case SequenceId::Fibonacci:
        return nn * s2 - s3 + 2;  // + F_3
    case SequenceId::Lucas:
        return nn * s2 - s3 + 4;  // + L_3
    case SequenceId::Pell:
        return exact_divide((nn - 1) * s1 + nn * s0 + 1, ExactInt{2});
    case SequenceId::CompanionPell:
        return exact_divide((nn - 1) * s1 + nn * s0 + 2, ExactInt{2});
    case SequenceId::Balancing:
        return exact_divide(nn * s1 - (nn + 1) * s0, ExactInt{4});
    case SequenceId::DoubleLucasBalancing:
        return exact_divide(nn * s1 - (nn + 1) * s0 + 2, ExactInt{4});
    case SequenceId::Jacobsthal:
        // (n J_{n+2} - (J_{n+3} - 3)/2) / 2
        return exact_divide(nn * s2 - exact_divide(s3 - 3, ExactInt{2}), ExactInt{2});
    case SequenceId::JacobsthalLucas:
        return exact_divide(nn * s2 - 4 - exact_divide(s3 - 15, ExactInt{2}), ExactInt{2});
    case SequenceId::Mersenne:
        return power(ExactInt{2}, n + 1) * (nn - 1) + 2 - binom2_next(n);
    case SequenceId::MersenneLucas:
        return power(ExactInt{2}, n + 1) * (nn - 1) + 2 + binom2_next(n);
    }
    throw UnknownSequence("unhandled sequence id");
}

ExactInt specialized_weighted_sum(std::string_view name, Index n) {
    return specialized_weighted_sum(lookup(name).id, n);
}

ExactInt lucas_balancing_term(Index n) {
    return exact_divide(term_fast(make_params(6, 1), Kind::Second, n), ExactInt{2});
}

ExactInt lucas_balancing_weighted_sum(Index n) {
    if (n == 0) {
        throw PreconditionViolation("weighted sum needs n >= 1");
    }
    const SequenceParams params = make_params(6, 1);
    LucasState s = state_at(params, n);
    const ExactInt c_n = exact_divide(s.v, ExactInt{2});
    advance(params, s);
    const ExactInt c_next = exact_divide(s.v, ExactInt{2});
    const ExactInt nn = big(n);
    return exact_divide(nn * c_next - (nn + 1) * c_n + 1, ExactInt{4});
}

OmegaPsi omega_psi_specialized(SequenceId id, Index n) {
    if (n == 0) {
        throw PreconditionViolation("Omega/Psi need n >= 1");
    }
    const SequenceParams params = lookup(id).params();
    OmegaPsi out;
    switch (id) {
    case SequenceId::Fibonacci:
    case SequenceId::Lucas: {
        const LucasState s = state_at(params, n + 3);
        out.omega = s.u - 2;
        out.psi = s.v - 6;
        return out;
    }
    case SequenceId::Pell:
    case SequenceId::CompanionPell: {
        const LucasState s = state_at(params, n + 1);
        out.omega = 2 * s.u - 2;
        out.psi = 2 * s.v - 8;
        return out;
    }
    case SequenceId::Balancing:
    case SequenceId::DoubleLucasBalancing: {
        const LucasState s = state_at(params, n);
        out.omega = 4 * s.u;
        out.psi = 4 * s.v;
        return out;
    }
    case SequenceId::Jacobsthal:
    case SequenceId::JacobsthalLucas: {
        const LucasState s = state_at(params, n + 3);
        out.omega = s.u - 3;
        out.psi = s.v - 15;
        return out;
    }
    case SequenceId::Mersenne:
    case SequenceId::MersenneLucas:
        throw UnsupportedCase("Omega/Psi are defined only for p - q != 1; " +
                              std::string(lookup(id).name) + " has p - q = 1");
    }
    throw UnknownSequence("unhandled sequence id");
}

OmegaPsi omega_psi_specialized(std::string_view name, Index n) {
    return omega_psi_specialized(lookup(name).id, n);
}

} // namespace lucas
