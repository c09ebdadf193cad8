#pragma once

#include <stdexcept>
#include <string>

namespace liectl {

enum class ErrorKind {
  InvalidInput,       // non-finite entries, malformed arguments
  DimensionMismatch,  // operands of incompatible shapes
  Precondition,       // a documented precondition does not hold
  Degenerate,         // numerical degeneracy the algorithm cannot resolve
  Diagnostics,        // iteration caps, non-convergence
  Parse,              // malformed input files
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Diagnostics: return "diagnostics";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liectl
