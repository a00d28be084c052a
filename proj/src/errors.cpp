#include "iwknot/errors.hpp"

namespace iwknot {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::WrongDomain: return "WrongDomain";
    case ErrorKind::NonInvertibleEvaluationPoint: return "NonInvertibleEvaluationPoint";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::MNotCoprime: return "MNotCoprime";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::DeficiencyMismatch: return "DeficiencyMismatch";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::PrecondFailed: return "PrecondFailed";
    case ErrorKind::NoSquareRoot: return "NoSquareRoot";
    case ErrorKind::ReduciblePoint: return "ReduciblePoint";
    case ErrorKind::EmptyReports: return "EmptyReports";
    case ErrorKind::ConfigParse: return "ConfigParse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace iwknot
