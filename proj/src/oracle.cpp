#include "lucas/oracle.hpp"

#include "lucas/errors.hpp"

namespace lucas::oracle {

std::string to_string(const SumMode& mode) {
    switch (mode.tag) {
    case ModeTag::Consecutive: return "consecutive";
    case ModeTag::Weighted: return "weighted";
    case ModeTag::Stride: return "stride(r=" + std::to_string(mode.r) + ")";
    case ModeTag::ReverseWeighted: return "reverse";
    case ModeTag::WeightedStride2: return "weighted-stride2";
    case ModeTag::WeightedSquare: return "weighted-square";
    }
    return "?";
}

namespace {

Index highest_index(Index n_max, const SumMode& mode) {
    switch (mode.tag) {
    case ModeTag::Stride: return n_max * mode.r;
    case ModeTag::WeightedStride2: return 2 * n_max;
    default: return n_max;
    }
}

} // namespace

std::vector<ExactInt> brute_sums_upto(const SequenceParams& params, Kind kind, Index n_max,
                                      SumMode mode) {
    if (mode.tag == ModeTag::Stride && mode.r == 0) {
        throw PreconditionViolation("stride must be >= 1");
    }
    const std::vector<ExactInt> t = terms_iter(params, kind, highest_index(n_max, mode) + 1);

    std::vector<ExactInt> out(n_max + 1, ExactInt{0});
    ExactInt acc = 0;
    for (Index n = 1; n <= n_max; ++n) {
        const ExactInt i{static_cast<unsigned long>(n)};
        switch (mode.tag) {
        case ModeTag::Consecutive: acc += t[n]; break;
        case ModeTag::Weighted: acc += i * t[n]; break;
        case ModeTag::Stride: acc += t[n * mode.r]; break;
        case ModeTag::WeightedStride2: acc += i * t[2 * n]; break;
        case ModeTag::WeightedSquare: acc += i * t[n] * t[n]; break;
        case ModeTag::ReverseWeighted: {
            // weights change with n, so redo the whole sum
            acc = 0;
            for (Index k = 1; k <= n; ++k) {
                acc += ExactInt{static_cast<unsigned long>(n - k + 1)} * t[k];
            }
            break;
        }
        }
        out[n] = acc;
    }
    return out;
}

ExactInt brute_sum(const SequenceParams& params, Kind kind, Index n, SumMode mode) {
    return brute_sums_upto(params, kind, n, mode).back();
}

std::vector<ExactInt> lucas_balancing_terms(Index count) {
    std::vector<ExactInt> c;
    c.reserve(count);
    for (Index i = 0; i < count; ++i) {
        if (i == 0) {
            c.emplace_back(1);
        } else if (i == 1) {
            c.emplace_back(3);
        } else {
            c.push_back(6 * c[i - 1] - c[i - 2]);
        }
    }
    return c;
}

ExactInt brute_lucas_balancing_weighted(Index n) {
    const std::vector<ExactInt> c = lucas_balancing_terms(n + 1);
    ExactInt acc = 0;
    for (Index i = 1; i <= n; ++i) {
        acc += ExactInt{static_cast<unsigned long>(i)} * c[i];
    }
    return acc;
}

} // namespace lucas::oracle
