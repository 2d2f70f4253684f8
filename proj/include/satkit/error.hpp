#pragma once

#include <stdexcept>
#include <string>

namespace satkit {

// Root of every error the library raises. `kind()` is the stable error name
// used in reports and CLI messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SATKIT_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    };

// exactpoly
SATKIT_DEFINE_ERROR(ParseError)
SATKIT_DEFINE_ERROR(NotASquare)
SATKIT_DEFINE_ERROR(DomainError)
// rootsys
SATKIT_DEFINE_ERROR(UnsupportedType)
SATKIT_DEFINE_ERROR(InternalDivisibility)
SATKIT_DEFINE_ERROR(BadLevi)
// latcone
SATKIT_DEFINE_ERROR(DimensionMismatch)
SATKIT_DEFINE_ERROR(NotInCone)
SATKIT_DEFINE_ERROR(NotWonderful)
SATKIT_DEFINE_ERROR(InvalidCone)
// sphdata
SATKIT_DEFINE_ERROR(InconsistentColor)
SATKIT_DEFINE_ERROR(BadSubset)
SATKIT_DEFINE_ERROR(DegenerateCone)
SATKIT_DEFINE_ERROR(InvalidDatum)
// poincare
SATKIT_DEFINE_ERROR(NotPolynomialInInverse)
SATKIT_DEFINE_ERROR(MissingData)
// arcjets
SATKIT_DEFINE_ERROR(TruncationExhausted)
SATKIT_DEFINE_ERROR(PoleAtZero)
// catalog
SATKIT_DEFINE_ERROR(SchemaError)
SATKIT_DEFINE_ERROR(InvariantViolation)
SATKIT_DEFINE_ERROR(MissingParameter)
SATKIT_DEFINE_ERROR(OutOfRange)

#undef SATKIT_DEFINE_ERROR

}  // namespace satkit
