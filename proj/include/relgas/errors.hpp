#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relgas {

enum class ErrorKind {
    SuperluminalState,
    ZeroEpsilon,
    SingularDenominator,
    NegativeRadicand,
    ZeroA1,
    DegenerateJacobian,
    OrbitLeftDomain,
    ToleranceNotMet,
    UnphysicalManufacture,
    NonClosedForm,
    NonMonotoneCoordinates,
    InsufficientResolutions,
    InvalidGrid,
};

std::string_view to_string(ErrorKind kind);

/// Raised when an operation is evaluated outside its mathematical domain.
/// Every numerical failure in the library is reported through this type;
/// the kind identifies which precondition broke.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace relgas
