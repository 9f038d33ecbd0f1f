#pragma once

#include <stdexcept>
#include <string>

namespace lucas {

class LucasError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem's hypothesis does not hold for the requested inputs.
class UnsupportedCase : public LucasError {
public:
    using LucasError::LucasError;
};

/// A closed-form numerator was not divisible by its denominator: an
/// implementation bug.
class ExactDivisionViolation : public LucasError {
public:
    using LucasError::LucasError;
};

class ZeroDenominator : public LucasError {
public:
    using LucasError::LucasError;
};

class LengthMismatch : public LucasError {
public:
    using LucasError::LucasError;
};

class UnknownSequence : public LucasError {
public:
    using LucasError::LucasError;
};

/// Index or argument outside an operation's stated domain.
class PreconditionViolation : public LucasError {
public:
    using LucasError::LucasError;
};

} // namespace lucas
