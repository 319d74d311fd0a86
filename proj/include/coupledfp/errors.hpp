#pragma once

#include <stdexcept>
#include <string>

namespace coupledfp {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
class DimensionMismatch final : public Error {
public:
    using Error::Error;
};

/// Malformed input: non-finite entries, bad parameters, unparseable config.
class InvalidInput final : public Error {
public:
    using Error::Error;
};

/// A hypothesis the caller must guarantee is not satisfied
/// (incomparable tuple, initial pair satisfying neither admissible
/// condition, failed integral-equation assumptions).
class HypothesisError final : public Error {
public:
    using Error::Error;
};

/// Iteration produced a non-finite or diverging value.
class NumericalError final : public Error {
public:
    using Error::Error;
};

}  // namespace coupledfp
