#ifndef FAIRLINE_ERRORS_HPP
#define FAIRLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fairline {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller-supplied value violates a documented precondition.
/// The message names the violated constraint.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A document could not be parsed; the message carries the location
/// (row/column for utility matrices) of the offending token.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A request exceeds a configured resource limit (search-space budget,
/// ordering-search cap). The message quotes the exact bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Seeing this indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace fairline

#endif
