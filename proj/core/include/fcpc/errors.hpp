#ifndef FCPC_ERRORS_HPP
#define FCPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fcpc {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPrimePower : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SpaceTooLarge : Error {
    using Error::Error;
};

struct InvalidGroups : Error {
    using Error::Error;
};

struct BadBlockId : Error {
    using Error::Error;
};

struct NotConsecutive : Error {
    using Error::Error;
};

struct InvalidArgs : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct NotFullSize : Error {
    using Error::Error;
};

struct CertificateMismatch : Error {
    using Error::Error;
};

struct NotLocallyBounded : Error {
    using Error::Error;
};

struct BadFormat : Error {
    using Error::Error;
};

}  // namespace fcpc

#endif
