#include "sfs/error.hpp"

namespace sfs {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return "parse";
        case ErrorCode::Normalization: return "normalization";
        case ErrorCode::BoundedManifold: return "bounded-manifold";
        case ErrorCode::FinitePi1: return "finite-pi1";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::FamilyMismatch: return "family-mismatch";
        case ErrorCode::CoverValidation: return "cover-validation";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

} // namespace sfs
