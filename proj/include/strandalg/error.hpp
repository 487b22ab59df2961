#ifndef STRANDALG_ERROR_HPP
#define STRANDALG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace strandalg {

enum class ErrorCode {
    BadSize,
    NotTwoToOne,
    SurgeryDisconnected,
    InvalidDiagram,
    AmbientMismatch,
    InvalidChord,
    InconsistentChords,
    InconsistentResult,
    ZeroGenerator,
    EpsilonViolation,
    NonIntegral,
    InvalidDomain,
    BoundaryMismatch,
    NonIntegralIndex,
    BoundaryNonzero,
    NotAResolution,
    Parse,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library are reported with this type; the
// code identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace strandalg

#endif
