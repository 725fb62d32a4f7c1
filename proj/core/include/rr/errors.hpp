/**
 * @file errors.hpp
 * @brief Exception taxonomy shared by the whole library.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rr {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An input value or file violates a documented precondition.
struct ValidationError : Error {
    using Error::Error;
};

/// A text input (curve file, divisor file, CLI value) could not be parsed.
struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

/// A randomized subroutine used up its retry budget without finding a good
/// random choice.  `subroutine` names the routine that gave up.
struct RetryExhaustedError : Error {
    std::string subroutine;
    RetryExhaustedError(std::string sub, const std::string& message)
        : Error(message), subroutine(std::move(sub)) {}
};

/// The instance falls outside the assumptions the method needs (for example
/// every interpolated form passes through a node); retrying cannot help.
struct AssumptionViolatedError : Error {
    using Error::Error;
};

/// The interpolated form vanishes at infinity on the curve, so its divisor
/// cannot be represented in the affine chart.  Callers redraw the form.
struct ZerosAtInfinityError : Error {
    using Error::Error;
};

/// The base field has fewer usable evaluation points than an
/// evaluation/interpolation scheme requires.
struct InsufficientFieldError : Error {
    using Error::Error;
};

}  // namespace rr
