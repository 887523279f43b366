#include "isokit/error.hpp"

namespace isokit {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonAdmissible: return "NonAdmissible";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::SingularityEncountered: return "SingularityEncountered";
    case ErrorCode::StepFailure: return "StepFailure";
    case ErrorCode::NonContraction: return "NonContraction";
    case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

}  // namespace isokit
