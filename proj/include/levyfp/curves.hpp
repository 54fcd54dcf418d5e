#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "levyfp/errors.hpp"

namespace levyfp {

/// Equidistant fine tenor structure T_0 < ... < T_n together with the nested
/// coarse sub-structures of the risky curves. Each sub-grid shares the first
/// and last date of the fine grid and its year fraction is an integer
/// multiple of the fine one.
struct TenorGrid {
  std::vector<double> dates;
  double delta = 0.0;

  struct SubGrid {
    std::string label;
    std::vector<std::size_t> indices;  // positions into dates
    double delta = 0.0;

    std::size_t periods() const { return indices.size() - 1; }
  };
  std::vector<SubGrid> subs;

  /// Fine grid {t0, t0+delta, ...} with `periods` steps plus one sub-grid per
  /// (label, multiple) entry, coarsening by the given integer multiple.
  static TenorGrid regular(
      double t0, std::size_t periods, double delta,
      const std::vector<std::pair<std::string, std::size_t>>& tenors);

  void validate() const;

  std::size_t periods() const { return dates.size() - 1; }
  double horizon() const { return dates.back(); }

  /// Index of a date on the fine grid; DateNotOnGridError when absent.
  std::size_t index_of(double date) const;
  bool contains(double date) const;
};

/// Initial discount factors on the fine grid plus one FRA curve per risky
/// sub-grid. Immutable after construction.
class CurveSet {
 public:
  CurveSet(TenorGrid grid, std::vector<double> discounts,
           std::vector<std::vector<double>> fra_rates);

  const TenorGrid& grid() const { return grid_; }

  /// Discount factor; log-linear interpolation between pillars off-grid.
  double discount(double maturity) const;
  double discount_at(std::size_t index) const { return discounts_[index]; }

  /// Initial forward price F^d(0, T_a, T_b) as the product of fine-period
  /// bond-price ratios over (T_a, T_b].
  double forward_price(double t_a, double t_b) const;

  /// Basic forward rate L^d(0, T_a, T_b) = (F - 1) / (T_b - T_a).
  double basic_rate(double t_a, double t_b) const;

  /// FRA rate L^i(0, ...) of coarse period k (1-based) on curve i.
  double fra_rate(std::size_t curve, std::size_t period) const;

  /// Multiplicative spread S^i(0) = (1 + delta_i L^i(0)) / F^d(0).
  double multiplicative_spread(std::size_t curve, std::size_t period) const;

  /// Additive spread s^i(0) = L^i(0) - L^d(0) (derived, read-only).
  double additive_spread(std::size_t curve, std::size_t period) const;

  std::size_t curve_count() const { return fra_.size(); }

 private:
  TenorGrid grid_;
  std::vector<double> discounts_;            // per fine grid date
  std::vector<std::vector<double>> fra_;     // [curve][coarse period - 1]
};

/// Reads the bootstrapped curves from CSV files.
///
/// Discount CSV: header `maturity_years,discount_factor`, rows sorted by
/// maturity. FRA CSV per tenor: header `start_years,end_years,fra_rate`,
/// rates as decimals. Unknown columns are rejected; every grid pillar must be
/// covered.
CurveSet load_curves(
    const std::string& discount_csv,
    const std::vector<std::pair<std::string, std::string>>& fra_csvs,
    const TenorGrid& grid);

}  // namespace levyfp
