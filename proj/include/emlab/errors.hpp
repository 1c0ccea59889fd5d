#pragma once

#include <stdexcept>
#include <string>

namespace emlab {

enum class ErrorKind {
  Domain,                  // bad parameters / violated precondition
  PoleShift,               // shift a lies in -N0 for a pole model
  InsufficientTaylorData,  // fewer Taylor coefficients than the requested order
  InsufficientPole,        // pole expansion requested for a model without a pole
  Unsupported,             // lattice dimension beyond what is implemented
  DegenerateFit,           // remainder below the noise floor everywhere
  SlowConvergence,         // summation would exceed PrecisionContext::max_terms
  PrecisionRefused,        // required precision above the configured ceiling or above --prec
  Range                    // log-domain value cannot be materialized
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::PoleShift: return "PoleShift";
    case ErrorKind::InsufficientTaylorData: return "InsufficientTaylorData";
    case ErrorKind::InsufficientPole: return "InsufficientPole";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::SlowConvergence: return "SlowConvergence";
    case ErrorKind::PrecisionRefused: return "PrecisionRefused";
    case ErrorKind::Range: return "RangeError";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  /// Resource refusals (as opposed to bad input).
  [[nodiscard]] bool is_resource() const noexcept {
    return kind_ == ErrorKind::SlowConvergence || kind_ == ErrorKind::PrecisionRefused;
  }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace emlab
