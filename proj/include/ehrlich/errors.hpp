#pragma once

#include <stdexcept>
#include <string>

namespace ehrlich {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact division by zero (real or complex denominator equals 0).
struct DivisionByZero : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation
/// (negative radicand, gauge argument past its radius, degree too small, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A result left the representable range (infinity or NaN would escape).
struct OverflowError : Error {
    using Error::Error;
};

/// Malformed decimal string or malformed input file.
struct ParseError : Error {
    using Error::Error;
};

/// A vector ratio was requested against a denominator entry equal to zero
/// (typically a point with duplicate components, where min distances vanish).
struct DegenerateDenominator : Error {
    using Error::Error;
};

/// An a posteriori bound was requested at a point that does not satisfy
/// the certification inequality.
struct NotCertified : Error {
    using Error::Error;
};

/// Not enough usable iterates in a trace to carry out the computation.
struct InsufficientTrace : Error {
    using Error::Error;
};

/// A file could not be opened, read or written.
struct IoError : Error {
    using Error::Error;
};

} // namespace ehrlich
