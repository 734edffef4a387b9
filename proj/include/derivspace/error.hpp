#ifndef DERIVSPACE_ERROR_HPP
#define DERIVSPACE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace derivspace {

enum class ErrorKind {
    LengthMismatch,
    NotDominated,
    SyntaxError,
    NotHomogeneous,
    WrongVariable,
    DegreeMismatch,
    VariableMismatch,
    DimensionMismatch,
    AmbientMismatch,
    OrderOutOfRange,
    NotContained,
    DegenerateBasis,
    SymmetryViolated,
    ZeroPolynomial,
    ConfigInvalid,
    FormatError,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotDominated: return "NotDominated";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::WrongVariable: return "WrongVariable";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::SymmetryViolated: return "SymmetryViolated";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::FormatError: return "FormatError";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported through this type; the
/// CLI maps it to exit code 1 and prints `error_name(kind())` verbatim.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace derivspace

#endif // DERIVSPACE_ERROR_HPP
