#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace globdyn {

enum class Errc {
    Parse,
    Empty,
    NotABijection,
    ParityViolation,
    ArchCrossing,
    NotDissipative,
    BoundExceeded,
    SumMismatch,
    Unsupported,
    MalformedDomain,
    InvalidMatching,
    IndexOutOfRange,
    SizeMismatch,
    InvalidArgument,
    Escaped,
    NonHyperbolicSuspected,
    TieAtBoundary,
    StepSizeUnderflow,
    Nonfinite,
    TangencyPoint,
    MultiValued,
    EmptyInput,
};

std::string_view to_string(Errc code) noexcept;

// Input-validation failures (bad user data) as opposed to numerical failures
// at run time. The CLI maps these to exit codes 2 and 1 respectively.
constexpr bool is_validation_error(Errc code) noexcept {
    switch (code) {
    case Errc::Escaped:
    case Errc::NonHyperbolicSuspected:
    case Errc::TieAtBoundary:
    case Errc::StepSizeUnderflow:
    case Errc::Nonfinite:
    case Errc::TangencyPoint:
    case Errc::MultiValued:
        return false;
    default:
        return true;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace globdyn
