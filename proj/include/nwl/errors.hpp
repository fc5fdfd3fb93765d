#pragma once

#include <stdexcept>
#include <string>

namespace nwl {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible or unsupported dimensions.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A qubit or element index is out of range (or duplicated where forbidden).
struct InvalidIndex : Error {
    using Error::Error;
};

/// A matrix that must be Hermitian is not, beyond tolerance.
struct NotHermitian : Error {
    using Error::Error;
};

/// A scalar parameter lies outside its admissible interval.
struct OutOfRange : Error {
    using Error::Error;
};

/// A matrix fails the density-matrix checks (Hermitian, unit trace, PSD).
struct InvalidState : Error {
    using Error::Error;
};

/// An amplitude or probability vector does not sum to one.
struct NotNormalized : Error {
    using Error::Error;
};

/// Coefficient vector length does not match the selected family.
struct LengthMismatch : Error {
    using Error::Error;
};

/// A measurement setting is not a valid two-outcome observable.
struct InvalidObservable : Error {
    using Error::Error;
};

/// A correlation value exceeds the quantum-mechanical ceiling.
struct OutOfPhysicalRange : Error {
    using Error::Error;
};

/// An outcome histogram is empty where data is required.
struct EmptyCounts : Error {
    using Error::Error;
};

} // namespace nwl
