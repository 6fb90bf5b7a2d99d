#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace vdwx {

// Field-level input rejection. `code` names the violated constraint so callers
// (and the CLI) can report it without string matching.
class ValidationError : public std::invalid_argument {
 public:
  enum class Code {
    non_positive_frequency,
    negative_width,
    non_positive_dipole,
    negative_density,
    empty_medium,
    non_positive_temperature,
    non_positive_density,
    non_positive_distance,
  };

  ValidationError(Code code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Propagator evaluated at coincident points.
class ZeroSeparation : public std::domain_error {
 public:
  ZeroSeparation() : std::domain_error("propagator separation is zero") {}
};

// A response function was evaluated on the real axis at an undamped resonance.
class PoleOnAxis : public std::domain_error {
 public:
  explicit PoleOnAxis(double omega)
      : std::domain_error("response pole on the real axis at omega = " +
                          std::to_string(omega)),
        omega_(omega) {}
  double omega() const { return omega_; }

 private:
  double omega_;
};

// Coherent responses are not analytic continuations along the imaginary axis;
// only the conventional kind may be rotated there.
class CoherentOnImaginaryAxis : public std::domain_error {
 public:
  CoherentOnImaginaryAxis()
      : std::domain_error(
            "coherent response has no imaginary-axis representation") {}
};

// Regulated spectral integral asked for a regulator too coarse for the
// resonance structure it has to preserve.
class RegulatorTooLarge : public std::domain_error {
 public:
  RegulatorTooLarge(double eta, double limit)
      : std::domain_error("regulator eta = " + std::to_string(eta) +
                          " exceeds allowed " + std::to_string(limit)),
        eta_(eta), limit_(limit) {}
  double eta() const { return eta_; }
  double limit() const { return limit_; }

 private:
  double eta_, limit_;
};

// The requested closed form does not cover the supplied physical regime.
class NotApplicable : public std::domain_error {
 public:
  explicit NotApplicable(const std::string& what) : std::domain_error(what) {}
};

// Integrand returned NaN or Inf somewhere inside the integration domain.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  explicit NonFiniteIntegrand(double abscissa)
      : std::runtime_error("non-finite integrand value at t = " +
                           std::to_string(abscissa)),
        abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

// An adaptive quadrature failed to reach its tolerance within budget. Carries
// the partial result so callers can decide whether to flag or abort.
class QuadratureNonConvergent : public std::runtime_error {
 public:
  QuadratureNonConvergent(std::complex<double> partial, double error_estimate,
                          long evaluations)
      : std::runtime_error("quadrature did not converge (error estimate " +
                           std::to_string(error_estimate) + " after " +
                           std::to_string(evaluations) + " evaluations)"),
        partial_(partial),
        error_estimate_(error_estimate),
        evaluations_(evaluations) {}
  std::complex<double> partial() const { return partial_; }
  double error_estimate() const { return error_estimate_; }
  long evaluations() const { return evaluations_; }

 private:
  std::complex<double> partial_;
  double error_estimate_;
  long evaluations_;
};

// Configuration file problems. ParseError is malformed JSON; SchemaError is
// well-formed JSON that violates the schema, with the offending key path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public ConfigError {
 public:
  explicit ParseError(const std::string& what) : ConfigError(what) {}
};

class SchemaError : public ConfigError {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : ConfigError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Figure identifier outside the published set.
class UnknownFigure : public ConfigError {
 public:
  explicit UnknownFigure(const std::string& which)
      : ConfigError("unknown figure '" + which + "'") {}
};

}  // namespace vdwx
