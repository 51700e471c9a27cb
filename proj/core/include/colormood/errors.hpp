#pragma once

#include <stdexcept>
#include <string>

namespace colormood {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Semantic problem with an argument or input value (bad sample size,
/// duplicate palette entry, probabilities that do not sum to one, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line)
        : Error(message), line_(line) {}
    explicit ParseError(const std::string& message) : Error(message) {}

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

/// Failure to read or decode an image or index file.
class DecodeError : public Error {
public:
    using Error::Error;
};

} // namespace colormood
