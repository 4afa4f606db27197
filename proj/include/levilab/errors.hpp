#pragma once

#include <stdexcept>
#include <string>

namespace levilab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A radical exponent ended up outside the allowed lattice (half-integers for
/// expressions, integers for cleared numerators).
class PairingError : public Error {
public:
    using Error::Error;
};

/// A radical was evaluated on its branch cut or at a pole.
class BranchCutError : public Error {
public:
    using Error::Error;
};

class UnassignedParameter : public Error {
public:
    using Error::Error;
};

/// The Levi form is undefined because the gradient vanishes.
class DegenerateGradient : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace levilab
