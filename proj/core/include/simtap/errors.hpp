#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simtap {

// Base type for every error the library raises on bad input or misuse.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when no line applies.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : Error(line ? msg + " (line " + std::to_string(line) + ")" : msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Sequence lengths disagree (slot-count mismatch).
class ArityError : public Error {
public:
    using Error::Error;
};

// A value fell outside its permitted range.
class RangeError : public Error {
public:
    using Error::Error;
};

class EmptyItemsetError : public Error {
public:
    using Error::Error;
};

class EmptyDatabaseError : public Error {
public:
    using Error::Error;
};

// An item id that is not present in the database registry.
class UnknownItemError : public Error {
public:
    using Error::Error;
};

// Exhaustive enumeration refused: the instance is too large.
class CapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace simtap
