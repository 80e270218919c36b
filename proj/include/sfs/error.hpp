#pragma once

#include <stdexcept>
#include <string>

namespace sfs {

/// Category of a rejected input. Each category maps to a distinct CLI
/// exit code and a stable machine-readable string.
enum class ErrorCode {
    Parse,            // malformed notation / family / JSON input
    Normalization,    // loose Seifert data violating gcd or alpha constraints
    BoundedManifold,  // operation requires a closed manifold
    FinitePi1,        // operation requires infinite fundamental group
    Precondition,     // other violated operation precondition
    FamilyMismatch,   // family variant incompatible with the base manifold
    CoverValidation,  // cover descriptor failing a covering invariant
    Io,               // file not readable / not writable
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace sfs
