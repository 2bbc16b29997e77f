#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cycubic {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal invariant violations. These indicate a bug, not bad input.
class LogicError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NegativeInput : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class DivisionByZeroPoly : public Error {
public:
    using Error::Error;
};

class WrongDegree : public Error {
public:
    using Error::Error;
};

class DegenerateAffine : public Error {
public:
    using Error::Error;
};

class RepeatedRoots : public Error {
public:
    using Error::Error;
};

class InconsistentPair : public Error {
public:
    using Error::Error;
};

/// An exact polynomial division left a nonzero remainder where the
/// construction requires exactness (e.g. shared roots in degenerate input).
class InexactDivision : public Error {
public:
    using Error::Error;
};

class NotGalois : public Error {
public:
    using Error::Error;
};

class NotASquare : public Error {
public:
    using Error::Error;
};

class NonPositiveK : public Error {
public:
    using Error::Error;
};

class NegativeIteration : public Error {
public:
    using Error::Error;
};

class NotThreeRealRoots : public Error {
public:
    using Error::Error;
};

class PoleOfFamily : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed. Carries the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

} // namespace cycubic
