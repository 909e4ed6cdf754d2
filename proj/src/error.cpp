#include "modfol/error.hpp"

namespace modfol {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::LeadingZero: return "LeadingZero";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::OddWeight: return "OddWeight";
    case ErrorKind::Inhomogeneous: return "Inhomogeneous";
    case ErrorKind::LowImaginaryPart: return "LowImaginaryPart";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorKind::OnDiscriminant: return "OnDiscriminant";
    case ErrorKind::StepFailure: return "StepFailure";
    case ErrorKind::RootSeparationFailure: return "RootSeparationFailure";
    case ErrorKind::SingularApproach: return "SingularApproach";
    case ErrorKind::DiscriminantApproach: return "DiscriminantApproach";
    case ErrorKind::DegenerateScale: return "DegenerateScale";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace modfol
