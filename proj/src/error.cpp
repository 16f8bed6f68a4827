#include "bq/error.hpp"

namespace bq {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::PoleEncountered: return "PoleEncountered";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::UnsupportedCoefficientField: return "UnsupportedCoefficientField";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotAnInvolution: return "NotAnInvolution";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::AxisOnCurve: return "AxisOnCurve";
    case ErrorKind::InadmissibleParameters: return "InadmissibleParameters";
    case ErrorKind::SingularInstance: return "SingularInstance";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::DegenerateQuartic: return "DegenerateQuartic";
    case ErrorKind::NoRationalPointAvailable: return "NoRationalPointAvailable";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::TorsionPoint: return "TorsionPoint";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    }
    return "Unknown";
}

}  // namespace bq
