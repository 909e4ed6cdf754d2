#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modfol {

enum class ErrorKind {
    LeadingZero,
    Singular,
    Inconsistent,
    OddWeight,
    Inhomogeneous,
    LowImaginaryPart,
    ReconstructionFailed,
    OnDiscriminant,
    StepFailure,
    RootSeparationFailure,
    SingularApproach,
    DiscriminantApproach,
    DegenerateScale,
    ZeroScale,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the library is reported through this type; the
/// kind lets callers (and the CLI) distinguish the cases without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures additionally carry the 0-based character offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace modfol
