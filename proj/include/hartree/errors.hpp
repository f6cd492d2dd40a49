#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace hartree {

enum class ErrorKind {
  DegenerateInput,
  NonConvergence,
  Accuracy,
  Range,
  Domain,
  Singularity,
  OutsideRegime,
  Parity,
  ExponentBlowUp,
  ContractViolation,
  Geometry,
  Validation,
  Checksum,
  Numeric,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `value()` carries the diagnostic
/// number attached to the failure (last residual, offending distance, ...)
/// or NaN when there is none.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double value = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  double value_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "degenerate input";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::Range: return "range";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::OutsideRegime: return "outside regime";
    case ErrorKind::Parity: return "parity";
    case ErrorKind::ExponentBlowUp: return "exponent blow-up";
    case ErrorKind::ContractViolation: return "contract violation";
    case ErrorKind::Geometry: return "geometry";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Checksum: return "checksum";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace hartree
