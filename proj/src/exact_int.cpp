#include "lucas/exact_int.hpp"

#include "lucas/errors.hpp"

namespace lucas {

ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator,
                      DivisionWitness* witness) {
    if (witness != nullptr) {
        witness->numerator = numerator;
        witness->denominator = denominator;
        witness->remainder_checked_zero = false;
    }
    if (sgn(denominator) == 0) {
        throw ZeroDenominator("division by zero: numerator " + numerator.get_str());
    }
    ExactInt quotient;
    ExactInt remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                denominator.get_mpz_t());
    if (sgn(remainder) != 0) {
        throw ExactDivisionViolation("inexact division: " + numerator.get_str() + " / " +
                                     denominator.get_str() + " leaves remainder " +
                                     remainder.get_str());
    }
    if (witness != nullptr) {
        witness->remainder_checked_zero = true;
    }
    return quotient;
}

ExactInt from_int(std::int64_t value) {
    // mpz_class has no int64_t constructor on every platform.
    ExactInt out;
    mpz_set_si(out.get_mpz_t(), static_cast<long>(value));
    return out;
}

ExactInt power(const ExactInt& base, Index exponent) {
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

ExactInt binom2_next(Index n) {
    ExactInt nn{static_cast<unsigned long>(n)};
    return exact_divide(nn * (nn + 1), ExactInt{2});
}

std::string to_decimal(const ExactInt& value) { return value.get_str(10); }

std::string to_decimal(const ExactRational& value) { return value.get_str(10); }

} // namespace lucas
