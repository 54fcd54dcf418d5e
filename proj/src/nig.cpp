#include "levyfp/nig.hpp"

#include <cmath>
#include <string>

#include "levyfp/quadrature.hpp"

namespace levyfp {

namespace {

void check_strip(double re, const NigParams& p, const char* where) {
  if (!p.inside_strip(re)) {
    throw DomainError(std::string(where) + ": Re(z)=" + std::to_string(re) +
                      " outside cumulant strip (" +
                      std::to_string(p.strip_lower()) + ", " +
                      std::to_string(p.strip_upper()) + ")");
  }
}

}  // namespace

NigParams NigParams::zero_mean(double alpha, double beta, double delta,
                               double em_bound_m, double em_eps) {
  NigParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.delta = delta;
  p.mu = -delta * beta / std::sqrt(alpha * alpha - beta * beta);
  p.em_bound_m = em_bound_m;
  p.em_eps = em_eps;
  p.validate();
  return p;
}

void NigParams::validate() const {
  if (!(alpha > 0.0) || !(std::abs(beta) < alpha)) {
    throw InvalidParameterError("NigParams: need 0 <= |beta| < alpha");
  }
  if (!(delta > 0.0)) {
    throw InvalidParameterError("NigParams: need delta > 0");
  }
  const double mu_target = -delta * beta / std::sqrt(alpha * alpha - beta * beta);
  const double scale = std::max(std::abs(mu_target), 1.0);
  if (std::abs(mu - mu_target) > 1e-12 * scale) {
    throw InvalidParameterError("NigParams: mu violates the zero-mean rule");
  }
  if (!(em_bound_m > 0.0) || !(em_eps > 0.0)) {
    throw InvalidParameterError("NigParams: need em_bound_M > 0 and em_eps > 0");
  }
  if (!((1.0 + em_eps) * em_bound_m < alpha - std::abs(beta))) {
    throw InvalidParameterError(
        "NigParams: exponential-moment bound violated, need "
        "(1+eps) M < alpha - |beta|");
  }
}

double NigParams::variance() const {
  const double g2 = alpha * alpha - beta * beta;
  return delta * alpha * alpha / (g2 * std::sqrt(g2));
}

double NigParams::third_cumulant() const {
  const double g2 = alpha * alpha - beta * beta;
  return 3.0 * delta * alpha * alpha * beta / (g2 * g2 * std::sqrt(g2));
}

double NigParams::fourth_cumulant() const {
  const double g2 = alpha * alpha - beta * beta;
  return 3.0 * delta * alpha * alpha * (alpha * alpha + 4.0 * beta * beta) /
         (g2 * g2 * g2 * std::sqrt(g2));
}

CumulantStrip cumulant_strip(const NigParams& p) {
  return {p.strip_lower(), p.strip_upper()};
}

double cumulant(double z, const NigParams& p) {
  check_strip(z, p, "cumulant");
  const double g = std::sqrt(p.alpha * p.alpha - p.beta * p.beta);
  const double s = p.beta + z;
  return p.mu * z + p.delta * (g - std::sqrt(p.alpha * p.alpha - s * s));
}

std::complex<double> cumulant(std::complex<double> z, const NigParams& p) {
  check_strip(z.real(), p, "cumulant");
  const double g = std::sqrt(p.alpha * p.alpha - p.beta * p.beta);
  const std::complex<double> s = p.beta + z;
  // Re(alpha^2 - s^2) > 0 inside the strip, so the principal square root is
  // the analytic branch with theta(0) = 0.
  return p.mu * z + p.delta * (g - std::sqrt(p.alpha * p.alpha - s * s));
}

double cumulant_deriv(double z, const NigParams& p) {
  check_strip(z, p, "cumulant_deriv");
  const double s = p.beta + z;
  return p.mu + p.delta * s / std::sqrt(p.alpha * p.alpha - s * s);
}

std::complex<double> cumulant_deriv(std::complex<double> z,
                                    const NigParams& p) {
  check_strip(z.real(), p, "cumulant_deriv");
  const std::complex<double> s = p.beta + z;
  return p.mu + p.delta * s / std::sqrt(p.alpha * p.alpha - s * s);
}

double tilted_exponent(double u, double h, const NigParams& p) {
  check_strip(h, p, "tilted_exponent");
  check_strip(u + h, p, "tilted_exponent");
  if (u == 0.0) return 0.0;
  return cumulant(u + h, p) - cumulant(h, p) - u * cumulant_deriv(h, p);
}

std::complex<double> phi_xt(std::complex<double> z, double maturity,
                            double vol_decay_a, const NigParams& p,
                            double rel_tol) {
  if (maturity < 0.0) throw InvalidParameterError("phi_xt: negative maturity");
  if (z == std::complex<double>(0.0, 0.0) || maturity == 0.0) return {1.0, 0.0};

  // lambda(s) = exp(a s) is monotone, so it suffices to check the strip at
  // the endpoints of [0, T].
  const std::complex<double> iz(-z.imag(), z.real());
  check_strip((iz * std::exp(vol_decay_a * 0.0)).real(), p, "phi_xt");
  check_strip((iz * std::exp(vol_decay_a * maturity)).real(), p, "phi_xt");

  if (vol_decay_a == 0.0) {
    return std::exp(maturity * cumulant(iz, p));
  }
  auto integrand = [&](double s) {
    return cumulant(iz * std::exp(vol_decay_a * s), p);
  };
  const std::complex<double> expo =
      integrate_refined(integrand, 0.0, maturity, rel_tol);
  return std::exp(expo);
}

}  // namespace levyfp
