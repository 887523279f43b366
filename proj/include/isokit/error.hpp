#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isokit {

enum class ErrorCode {
    NonAdmissible,
    InvalidInterval,
    DomainError,
    SingularDenominator,
    NoConvergence,
    InvalidSpec,
    InvalidRadius,
    SingularityEncountered,
    StepFailure,
    NonContraction,
    MaxIterExceeded,
    DivisionByZero,
};

std::string_view to_string(ErrorCode code);

/// Failure raised by every isokit operation. The code identifies the
/// precondition or solver condition that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace isokit
