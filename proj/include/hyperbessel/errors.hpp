#pragma once

#include <stdexcept>
#include <string>

namespace hb {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument: index out of range, mismatched vector indices, bad config.
struct ArgumentError : Error {
    using Error::Error;
};

/// Requested tolerance is below what floating-point evaluation can certify.
struct PrecisionError : Error {
    using Error::Error;
};

/// A series or special-function evaluation overflowed; message carries the
/// offending term index.
struct OverflowError : Error {
    OverflowError(const std::string& what, long term_index)
        : Error(what), term(term_index) {}
    long term;
};

/// Pairing of a functional with a series needs moments beyond the stored
/// range and no growth certificate is available.
struct IncompletePairingError : Error {
    using Error::Error;
};

/// Coefficients grow faster than any geometric envelope; the series does not
/// admit an exponential-type certificate.
struct NotExponentialTypeError : Error {
    using Error::Error;
};

/// Successive quadrature orders disagree beyond tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

/// A grid scan exhausted its enlargement budget without finding what it
/// was asked for (never silently passes).
struct GridSearchError : Error {
    using Error::Error;
};

/// Transitivity witness construction could not reach the requested residual
/// after node escalation; carries the best residual pair found.
struct WitnessFailureError : Error {
    WitnessFailureError(const std::string& what, double start, double end)
        : Error(what), best_residual_start(start), best_residual_end(end) {}
    double best_residual_start;
    double best_residual_end;
};

} // namespace hb
