#pragma once

#include <stdexcept>
#include <string>

namespace solti {

// Shapes disagree (non-square input, mismatched products, bad block counts).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// NaN/Inf encountered where only finite data is admitted.
struct NonFiniteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed system/trajectory document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires r >= 1 but the system has no input channel.
struct NoInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Zero or constant polynomial where roots were requested.
struct DegeneratePolynomialError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Discrete-only operation applied to a continuous system (or vice versa).
struct KindMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation restricted to a structural special case (e.g. A1 == 0).
struct UnsupportedFormError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Identically zero transfer function has no pole/zero structure.
struct ZeroTransferError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rational matrix evaluated at (or too close to) a denominator root.
struct PoleEvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankDeficiencyError : std::runtime_error {
    int computed_rank;
    int required_rank;
    RankDeficiencyError(const std::string& msg, int computed, int required)
        : std::runtime_error(msg), computed_rank(computed), required_rank(required) {}
};

// Observability matrix rank below 2n: the initial pair is not recoverable.
struct UnobservableError : RankDeficiencyError {
    using RankDeficiencyError::RankDeficiencyError;
};

// Full-rank system matrix but measurement stack outside its range.
struct InconsistentDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Steering target outside the range of the controllability matrix.
struct UncontrollableTargetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace solti
