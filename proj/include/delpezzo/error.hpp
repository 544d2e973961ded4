#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delpezzo {

enum class ErrorKind {
    SurfaceMismatch,
    UnsupportedSurface,
    PreconditionViolated,
    NotApplicable,
    NotFound,
    InternalError,
    Overflow,
    Parse,
    Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Divisor / surface text that does not parse. position is a 0-based offset
// into the input string.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorKind::Parse, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace delpezzo
