#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sccsem {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input framework (duplicate label, unknown endpoint, invalid index).
class InvalidFramework : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A configured size, cap, or search budget was exceeded. Never silently truncated.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// Caller broke an operation's precondition (e.g. U attacked from outside).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace sccsem
