#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace coherence_cost {

// Error categories map onto CLI exit codes: config -> 2, numerical -> 3,
// verification -> 4. io shares 2 (operational failure, not a math one).
enum class ErrorKind { config, numerical, io, verification };

class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorKind kind, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)), kind_(kind) {}

  const std::string& name() const noexcept { return name_; }
  ErrorKind kind() const noexcept { return kind_; }

  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::config: return 2;
      case ErrorKind::numerical: return 3;
      case ErrorKind::io: return 2;
      case ErrorKind::verification: return 4;
    }
    return 1;
  }

 private:
  std::string name_;
  ErrorKind kind_;
};

namespace detail {
inline std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}
}  // namespace detail

struct NotHermitian : Error {
  explicit NotHermitian(double defect)
      : Error("NotHermitian", ErrorKind::numerical,
              "matrix is not Hermitian: max |m - m^dag| = " + detail::fmt_double(defect)) {}
};

struct TraceNotOne : Error {
  explicit TraceNotOne(double measured)
      : Error("TraceNotOne", ErrorKind::numerical,
              "density matrix trace is " + detail::fmt_double(measured) + ", expected 1") {}
};

struct NotPSD : Error {
  explicit NotPSD(double min_eigenvalue)
      : Error("NotPSD", ErrorKind::numerical,
              "density matrix is not positive semidefinite: min eigenvalue = " +
                  detail::fmt_double(min_eigenvalue)) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& message)
      : Error("DimensionMismatch", ErrorKind::numerical, message) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(double min_eigenvalue)
      : Error("RankDeficient", ErrorKind::numerical,
              "operator is rank deficient: min eigenvalue = " + detail::fmt_double(min_eigenvalue) +
                  " (use --regularize to mix in identity before inversion)") {}
};

struct SupportViolation : Error {
  explicit SupportViolation(double residual)
      : Error("SupportViolation", ErrorKind::numerical,
              "support of first state is not contained in support of second: projector residual = " +
                  detail::fmt_double(residual) + " (relative entropy is infinite)") {}
};

struct CoherentTarget : Error {
  explicit CoherentTarget(const std::string& message)
      : Error("CoherentTarget", ErrorKind::numerical, message) {}
};

struct ZeroCoherenceInput : Error {
  explicit ZeroCoherenceInput(double measured)
      : Error("ZeroCoherenceInput", ErrorKind::numerical,
              "contraction ratio undefined: input coherence = " + detail::fmt_double(measured)) {}
};

struct MaxStepsExceeded : Error {
  explicit MaxStepsExceeded(std::uint64_t limit)
      : Error("MaxStepsExceeded", ErrorKind::numerical,
              "equilibrium not reached within " + std::to_string(limit) + " steps") {}
};

struct ToleranceExceeded : Error {
  explicit ToleranceExceeded(const std::string& message)
      : Error("ToleranceExceeded", ErrorKind::numerical, message) {}
};

struct ConfigInvalid : Error {
  explicit ConfigInvalid(const std::string& message)
      : Error("ConfigInvalid", ErrorKind::config, message) {}
};

struct FixtureUnreadable : Error {
  explicit FixtureUnreadable(const std::string& message)
      : Error("FixtureUnreadable", ErrorKind::config, message) {}
};

struct IoError : Error {
  explicit IoError(const std::string& message) : Error("IoError", ErrorKind::io, message) {}
};

struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& message)
      : Error("VerificationFailed", ErrorKind::verification, message) {}
};

}  // namespace coherence_cost
