#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratdyn {

enum class ErrorKind {
    DivisionByZero,
    OrderMismatch,
    NotRational,
    ZeroDenominator,
    CoercionFailure,
    NotWithinBound,
    InvalidParts,
    NotFixed,
    OutOfRange,
    BoundExceeded,
    WrongGcd,
    NotInBackwardOrbit,
    NotOnCycle,
    ResidueOutOfRange,
    PolesNotRootsOfUnity,
    MultiplePoles,
    SyntaxError,
    ExponentNotInteger,
    InvalidArgument,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Internal invariant violations: a correct build never raises these.
constexpr bool is_internal(ErrorKind kind) noexcept
{
    return kind == ErrorKind::CoercionFailure || kind == ErrorKind::BoundExceeded ||
           kind == ErrorKind::Internal;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failures carry the byte offset into the input and what was expected there.
class SyntaxError : public Error {
public:
    SyntaxError(ErrorKind kind, std::size_t position, std::string expected)
        : Error(kind, "at offset " + std::to_string(position) + ": expected " + expected),
          position_(position), expected_(std::move(expected))
    {
    }

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace ratdyn
