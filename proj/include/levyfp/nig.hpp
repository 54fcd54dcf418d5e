#pragma once

#include <complex>

#include "levyfp/errors.hpp"

namespace levyfp {

/// Parameters of the normal inverse Gaussian driver together with the
/// exponential-moment bound that every volatility loading has to respect.
///
/// The location mu is pinned by the zero-mean rule
///   mu = -delta * beta / sqrt(alpha^2 - beta^2)
/// so the driver is centred under the terminal forward measure.
struct NigParams {
  double alpha;       ///< tail heaviness, > 0
  double beta;        ///< asymmetry, |beta| < alpha
  double delta;       ///< scale, > 0
  double mu;          ///< location (zero-mean rule)
  double em_bound_m;  ///< exponential-moment bound M
  double em_eps;      ///< admissibility margin epsilon

  /// Builds a parameter set with mu chosen by the zero-mean rule and
  /// validates all invariants.
  static NigParams zero_mean(double alpha, double beta, double delta,
                             double em_bound_m, double em_eps);

  /// Throws InvalidParameterError when an invariant is violated:
  /// 0 <= |beta| < alpha, delta > 0, the zero-mean rule (1e-12 relative) and
  /// the admissibility condition (1 + eps) * M < alpha - |beta|.
  void validate() const;

  double strip_lower() const { return -(alpha + beta); }
  double strip_upper() const { return alpha - beta; }
  bool inside_strip(double re) const {
    return re > strip_lower() && re < strip_upper();
  }

  double variance() const;         ///< theta''(0)
  double third_cumulant() const;   ///< theta'''(0)
  double fourth_cumulant() const;  ///< theta''''(0)
};

/// Analyticity strip of the cumulant, (-(alpha+beta), alpha-beta).
struct CumulantStrip {
  double lower;
  double upper;
};

CumulantStrip cumulant_strip(const NigParams& p);

/// Cumulant theta(z) = mu z + delta (sqrt(alpha^2-beta^2) -
/// sqrt(alpha^2-(beta+z)^2)) for Re(z) strictly inside the strip.
double cumulant(double z, const NigParams& p);
std::complex<double> cumulant(std::complex<double> z, const NigParams& p);

/// theta'(z) = mu + delta (beta+z) / sqrt(alpha^2-(beta+z)^2).
double cumulant_deriv(double z, const NigParams& p);
std::complex<double> cumulant_deriv(std::complex<double> z,
                                    const NigParams& p);

/// psi(u; h): the compensated exponential integral against the h-tilted Levy
/// measure, evaluated through the identity
///   psi(u; h) = theta(u+h) - theta(h) - u theta'(h).
/// Nonnegative for real u; drift terms of the model are -psi.
double tilted_exponent(double u, double h, const NigParams& p);

/// Extended characteristic function of X_T = int_0^T lambda(s) dL_s with
/// lambda(s) = exp(a s):  phi(z) = exp( int_0^T theta(i z lambda(s)) ds ).
/// Throws DomainError when the argument path leaves the strip.
std::complex<double> phi_xt(std::complex<double> z, double maturity,
                            double vol_decay_a, const NigParams& p,
                            double rel_tol = 1e-10);

}  // namespace levyfp
