#include "ratdyn/error.hpp"

namespace ratdyn {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::CoercionFailure: return "CoercionFailure";
    case ErrorKind::NotWithinBound: return "NotWithinBound";
    case ErrorKind::InvalidParts: return "InvalidParts";
    case ErrorKind::NotFixed: return "NotFixed";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::WrongGcd: return "WrongGcd";
    case ErrorKind::NotInBackwardOrbit: return "NotInBackwardOrbit";
    case ErrorKind::NotOnCycle: return "NotOnCycle";
    case ErrorKind::ResidueOutOfRange: return "ResidueOutOfRange";
    case ErrorKind::PolesNotRootsOfUnity: return "PolesNotRootsOfUnity";
    case ErrorKind::MultiplePoles: return "MultiplePoles";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ExponentNotInteger: return "ExponentNotInteger";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace ratdyn
