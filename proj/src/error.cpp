#include "globdyn/error.hpp"

namespace globdyn {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::Parse: return "Parse";
    case Errc::Empty: return "Empty";
    case Errc::NotABijection: return "NotABijection";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::ArchCrossing: return "ArchCrossing";
    case Errc::NotDissipative: return "NotDissipative";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::Unsupported: return "Unsupported";
    case Errc::MalformedDomain: return "MalformedDomain";
    case Errc::InvalidMatching: return "InvalidMatching";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Escaped: return "Escaped";
    case Errc::NonHyperbolicSuspected: return "NonHyperbolicSuspected";
    case Errc::TieAtBoundary: return "TieAtBoundary";
    case Errc::StepSizeUnderflow: return "StepSizeUnderflow";
    case Errc::Nonfinite: return "Nonfinite";
    case Errc::TangencyPoint: return "TangencyPoint";
    case Errc::MultiValued: return "MultiValued";
    case Errc::EmptyInput: return "EmptyInput";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace globdyn
