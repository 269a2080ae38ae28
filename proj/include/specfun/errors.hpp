#pragma once

#include <stdexcept>
#include <string>

namespace specfun {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : Error {
    using Error::Error;
};

// Integration gave up; carries the best value reached and its error estimate.
struct NonConvergence : Error {
    double partial;
    double error_estimate;
    NonConvergence(const std::string& what, double part, double err)
        : Error(what), partial(part), error_estimate(err) {}
};

struct DegenerateDivisor : Error {
    using Error::Error;
};

struct StepUnderflow : Error {
    using Error::Error;
};

struct InsufficientSamples : Error {
    using Error::Error;
};

struct CutError : Error {
    using Error::Error;
};

struct PoleError : Error {
    using Error::Error;
};

struct OrderOverflow : Error {
    using Error::Error;
};

struct CancellationError : Error {
    using Error::Error;
};

struct AssertionError : Error {
    using Error::Error;
};

struct ExtrapolationError : Error {
    using Error::Error;
};

struct SingularPoint : Error {
    using Error::Error;
};

struct NonPositive : Error {
    using Error::Error;
};

struct BracketError : Error {
    using Error::Error;
};

struct DomainEscape : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

struct EvaluationError : Error {
    using Error::Error;
};

struct DegeneratePoints : Error {
    using Error::Error;
};

}  // namespace specfun
