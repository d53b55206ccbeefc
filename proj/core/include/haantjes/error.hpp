/** \file    error.hpp
    \brief   Exception types shared by all modules
*/
#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace haantjes {

/// base class of every error raised by the library
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// malformed expression or definition text; offset is a byte position in the input
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }
private:
    std::size_t offset_;
};

/// evaluation outside the real domain of a function, division by zero, or a nonfinite result
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// unknown system, chart, operator or field name
class LookupError : public Error {
public:
    explicit LookupError(const std::string& msg) : Error(msg) {}
};

/// violated precondition of an operation (degenerate spectrum, singular map, rank deficiency, ...)
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

}  // namespace haantjes
