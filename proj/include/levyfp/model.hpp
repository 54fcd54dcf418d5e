#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "levyfp/curves.hpp"
#include "levyfp/nig.hpp"

namespace levyfp {

enum class Variant { A, B };

/// Factorized volatility specification: every volatility function is a
/// maturity loading times the common time factor lambda(t) = exp(a t).
struct VolStructure {
  double a = 0.0;        ///< decay rate of lambda(t)
  double a_d = 0.0;      ///< basic loading, lambda1(T) = sqrt(|a_d| T)
  double a_l = 0.0;      ///< variant (a) spread loading
  double a_l_bar = 0.0;  ///< variant (b) spread loading
  Variant variant = Variant::A;

  double lambda(double t) const;
  double lambda1(double maturity) const;
  /// Spread loading of the active variant.
  double gamma1(double maturity) const;
  /// Bound M' on lambda over [0, horizon].
  double m_prime(double horizon) const;
};

/// A fully assembled model: driver parameters, volatility structure, curves
/// and the risky curve the pricing operations refer to. All deterministic
/// drift, measure-change and payoff factors are precomputed per coarse
/// period at construction; instances are immutable afterwards and safe for
/// concurrent use.
class ModelInstance {
 public:
  /// Assembles and validates a model. With enforce_bounds the boundedness
  /// restrictions on the volatility loadings are checked (sum bounds against
  /// M, the payoff-exponent bound against R = M/M', spreads above one for
  /// variant (b)); without it only strip safety guards evaluation, which is
  /// what the calibration search needs while it wanders. drift_scale
  /// multiplies the basic drift b^d and exists so statistical tests can
  /// detect a deliberately corrupted drift.
  ModelInstance(const NigParams& params, const VolStructure& vol,
                CurveSet curves, std::size_t risky_curve = 0,
                bool enforce_bounds = true, double drift_scale = 1.0);

  const NigParams& params() const { return params_; }
  const VolStructure& vol() const { return vol_; }
  const CurveSet& curves() const { return curves_; }
  const TenorGrid& grid() const { return curves_.grid(); }
  std::size_t risky_curve() const { return risky_; }
  double accrual() const;  ///< delta_l of the risky curve
  double horizon() const { return grid().horizon(); }
  double drift_scale() const { return drift_scale_; }

  /// Sum of basic loadings over the periods of (t_from, t_to].
  double sum_lambda1(double t_from, double t_to) const;

  /// Esscher tilt h_T(t) relating F^T to F^{T*}; volatility contributions
  /// are cut off after their maturity.
  double tilt_exponent_h(double t, double maturity) const;

  /// Basic drift b^d(t, T_{j-1}, T_j) for fine period j (1-based).
  double drift_bd(double t, std::size_t period) const;

  /// Drift correction w(s, T, S) between the driving processes L^T and L^S,
  /// for s <= T <= S on the grid.
  double w_term(double s, double t_low, double t_high) const;

  /// Spread drift b^l(t, T) (variant (a)) or bbar^l(t, T) (variant (b)).
  double spread_drift(double t, double maturity) const;

  /// Deterministic part of ln F^d(t, T_{k-1}^l, T_k^l) / F^d(0, ...) for
  /// coarse period k of the risky curve, accumulated over [0, t].
  double log_forward_price_deterministic(std::size_t coarse_period,
                                         double t) const;

  struct FactorsA {
    double d_hat;     // carries 1 + delta_l L^l(0) and the accumulated drifts
    double a_factor;  // deterministic part of Z
    double c_hat;     // coupling to w(., T_k, T*)
    double d_bar;     // d_hat * a_factor * c_hat
  };
  struct FactorsB {
    double d_d;
    double d_l;
    double a_factor;
    double c_d;
    double c_l;
  };
  /// Deterministic payoff factors for the caplet over (T, T_k) on the risky
  /// curve; T_k = T + delta_l. VariantMismatchError when the model variant
  /// does not match.
  FactorsA spread_factors_a(double maturity, double pay_date) const;
  FactorsB spread_factors_b(double maturity, double pay_date) const;

  /// Per coarse period, the affine-in-X_T representation of the simulated
  /// state: each quantity is det + coef * X_T in the appropriate log space.
  /// The deterministic parts are assembled period by period (the product
  /// form), independently of the combined factor integrals above.
  struct PeriodCoefs {
    double maturity = 0.0;
    double pay_date = 0.0;
    double fwd_coef = 0.0, fwd_det = 0.0;  // ln F^d(T,T,T_k), stochastic/det
    double z_coef = 0.0, z_det = 0.0;      // ln Z_T^k
    double spr_coef = 0.0, spr_det = 0.0;  // ln(S/S0) (a), ln((S-1)/(S0-1)) (b)
    double f0 = 1.0;                       // F^d(0,T,T_k)
    double s0 = 1.0;                       // S^l(0,T,T_k)
    double one_plus_dl0 = 1.0;             // 1 + delta_l L^l(0,T,T_k)
  };
  const PeriodCoefs& period_coefs(std::size_t coarse_period) const;
  std::size_t coarse_periods() const { return period_cache_.size(); }
  /// Coarse period index (1-based) whose caplet maturity is `maturity`.
  std::size_t coarse_period_of(double maturity) const;

  struct PeriodState {
    double x_t;
    double ln_z;
    double fwd;
    double spread;
  };
  /// Simulates the per-path state (X_T, ln Z_T^k, F^d, S^l) for the coarse
  /// period (T, T_k), all built from one shared driver path. Reproducible
  /// per seed; path blocks use independent substreams.
  std::vector<PeriodState> simulate_period_state(double maturity,
                                                 double pay_date,
                                                 std::size_t paths,
                                                 std::uint64_t seed,
                                                 int steps_per_year = 250,
                                                 bool antithetic = false) const;

  /// Simulates X_T alone.
  std::vector<double> simulate_x(double maturity, std::size_t paths,
                                 std::uint64_t seed, int steps_per_year = 250,
                                 bool antithetic = false) const;

  /// Maximum payoff exponent Lambda(T, T_n) over grid dates (variant bound).
  double max_payoff_exponent() const;
  /// Structural damping bound R = M / M'.
  double damping_bound() const { return params_.em_bound_m / m_prime_; }

  double integration_tol() const { return int_tol_; }

 private:
  struct PeriodCache;

  double lam1_at(std::size_t date_index) const;
  double suffix_sum(std::size_t date_index) const {
    return suffix_[date_index];
  }
  double int_drift_bd(std::size_t period, double upto) const;
  double int_lambda_w(std::size_t idx_low, std::size_t idx_high,
                      double upto) const;
  PeriodCache build_period(std::size_t coarse_period) const;
  void check_bounds() const;

  NigParams params_;
  VolStructure vol_;
  CurveSet curves_;
  std::size_t risky_;
  double drift_scale_;
  double int_tol_ = 1e-10;
  double m_prime_ = 1.0;

  std::vector<double> lam1_;    // lambda1 at every grid date
  std::vector<double> suffix_;  // suffix_[k] = sum_{q >= k} lam1_[q], q < n

  struct PeriodCache {
    PeriodCoefs coefs;
    FactorsA fa;
    FactorsB fb;
  };
  std::vector<PeriodCache> period_cache_;
};

}  // namespace levyfp
