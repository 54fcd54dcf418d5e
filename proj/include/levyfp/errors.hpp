#pragma once

#include <stdexcept>
#include <string>

namespace levyfp {

/// An argument left the analyticity strip of the driver's cumulant.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A model parameter violates a structural invariant.
class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required grid pillar is absent from an input curve file.
class MissingPillarError : public CurveError {
 public:
  using CurveError::CurveError;
};

class NonPositiveDiscountError : public CurveError {
 public:
  using CurveError::CurveError;
};

class MalformedFileError : public CurveError {
 public:
  using CurveError::CurveError;
};

class DateNotOnGridError : public CurveError {
 public:
  using CurveError::CurveError;
};

/// Variant (b) requires every initial multiplicative spread to exceed one.
class SpreadNotAboveOneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VariantMismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// All payoff exponents vanish; the Fourier representation degenerates and
/// the caller must use the deterministic closed form instead.
class DegenerateVolatilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The transform was requested outside its strip of integrability.
class StripViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureNotConvergedError : public std::runtime_error {
 public:
  QuadratureNotConvergedError(const std::string& what, double achieved_error,
                              double u_max)
      : std::runtime_error(what + " (achieved error " +
                           std::to_string(achieved_error) + ", u_max " +
                           std::to_string(u_max) + ")"),
        achieved_error(achieved_error),
        u_max(u_max) {}

  double achieved_error;
  double u_max;
};

/// A quoted price lies below intrinsic value; no implied volatility exists.
class PriceOutOfBoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Consecutive cap prices decreased: the forward cap slice has negative value.
class NegativeForwardCapSliceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoFeasibleStartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levyfp
