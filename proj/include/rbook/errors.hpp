#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbook {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

class InvalidColour : public Error {
public:
    using Error::Error;
};

class InvalidBook : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class EmptySet : public Error {
public:
    using Error::Error;
};

/// Some p_i(X, Y_i) is zero, so the embedding normalisation is undefined.
class DegenerateDensity : public Error {
public:
    using Error::Error;
};

/// A proven inequality failed to hold. Always a bug in the caller or the library.
class LemmaViolation : public Error {
public:
    using Error::Error;
};

class TensorTooLarge : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ScaleError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace rbook
