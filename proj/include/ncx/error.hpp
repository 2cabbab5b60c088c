#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncx {

// Base for all structured errors. `name()` is a stable machine-readable
// identifier (the CLI prints it on the error stream).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& message)
      : Error("DimensionMismatch", message) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("DomainError", message) {}
};

// Raised when a number lies on (or too close to) a nodal hypersurface.
// Carries the names of the vanishing spectral coordinates, e.g. {"v_minus",
// "rho_2"}.
class NonInvertible : public Error {
 public:
  explicit NonInvertible(std::vector<std::string> vanishing)
      : Error("NonInvertible", describe(vanishing)),
        vanishing_(std::move(vanishing)) {}

  const std::vector<std::string>& vanishing() const noexcept {
    return vanishing_;
  }

 private:
  static std::string describe(const std::vector<std::string>& v) {
    std::string s = "vanishing spectral coordinates:";
    for (const auto& c : v) s += " " + c;
    return s;
  }

  std::vector<std::string> vanishing_;
};

// An angular variable is undefined or sits on a log-tangent singularity.
// `k` is the offending pair index (0 when no single pair is responsible).
class DegenerateAngle : public Error {
 public:
  DegenerateAngle(int k, const std::string& message)
      : Error("DegenerateAngle", message), k_(k) {}

  int pair_index() const noexcept { return k_; }

 private:
  int k_;
};

class AmplitudeUndefined : public Error {
 public:
  explicit AmplitudeUndefined(const std::string& message)
      : Error("AmplitudeUndefined", message) {}
};

class NotConverged : public Error {
 public:
  explicit NotConverged(const std::string& message)
      : Error("NotConverged", message) {}
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& message)
      : Error("InsufficientData", message) {}
};

class OnCurve : public Error {
 public:
  explicit OnCurve(const std::string& message)
      : Error("OnCurve", message) {}
};

class SingularPath : public Error {
 public:
  explicit SingularPath(const std::string& message)
      : Error("SingularPath", message) {}
};

class Overflow : public Error {
 public:
  explicit Overflow(const std::string& message)
      : Error("Overflow", message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error("ParseError", message) {}
};

}  // namespace ncx
