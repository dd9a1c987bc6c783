#pragma once

#include <stdexcept>
#include <string>

namespace halin {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// An exhaustive procedure was asked to run above its configured size bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

// Rejection sampling ran out of attempts.
class RetryExhausted : public Error {
public:
    using Error::Error;
};

// An invariant the library maintains internally was found violated.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace halin
