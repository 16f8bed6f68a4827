#pragma once

#include <stdexcept>
#include <string>

namespace bq {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    DegreeTooLarge,
    PoleEncountered,
    InsufficientSamples,
    UnsupportedCoefficientField,
    UnknownLabel,
    NotAnInvolution,
    NotInvariant,
    AxisOnCurve,
    InadmissibleParameters,
    SingularInstance,
    WrongShape,
    DegenerateQuartic,
    NoRationalPointAvailable,
    SingularCurve,
    PointNotOnCurve,
    TorsionPoint,
    NotSquareFree,
    UnknownSuite,
    ParseError,
    LimitExceeded,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bq
