#pragma once

#include <stdexcept>

namespace netcorr {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input: edge lists, CSV files, bad argument values.
struct InputError : Error {
    using Error::Error;
};

/// A distance computation was requested on a graph with more than one component.
struct DisconnectedError : Error {
    using Error::Error;
};

/// A weight matrix failed certification and was used without an override.
struct CertificateError : Error {
    using Error::Error;
};

/// A network variance came out negative for an uncertified weight matrix,
/// the failure mode that makes the correlation imaginary.
struct NegativeVarianceError : Error {
    using Error::Error;
};

/// An internal contract was violated: a certified-valid matrix produced a
/// negative quadratic form, centering lost the all-ones kernel, and so on.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace netcorr
