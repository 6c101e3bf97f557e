#pragma once

#include <stdexcept>
#include <string>

namespace cqf {

enum class ErrorKind {
    DimensionMismatch,
    NotFinite,
    NotHurwitz,
    SingularSystem,
    ConvergenceFailure,
    OddDimension,
    InvalidSpec,
    GenerationFailed,
    StepCollapse,
    NotHurwitzAfterShrink,
    StationarityViolated,
    AllStartsFailed,
};

// Single exception type carrying a machine-readable kind; the CLI maps
// kinds onto exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotFinite: return "NotFinite";
        case ErrorKind::NotHurwitz: return "NotHurwitz";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::GenerationFailed: return "GenerationFailed";
        case ErrorKind::StepCollapse: return "StepCollapse";
        case ErrorKind::NotHurwitzAfterShrink: return "NotHurwitzAfterShrink";
        case ErrorKind::StationarityViolated: return "StationarityViolated";
        case ErrorKind::AllStartsFailed: return "AllStartsFailed";
    }
    return "Unknown";
}

}  // namespace cqf
