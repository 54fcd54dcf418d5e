#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <cstddef>
#include <type_traits>

#include "levyfp/errors.hpp"

namespace levyfp {

/// 32-node Gauss-Legendre rule on [a, b]. Works for real- and complex-valued
/// integrands.
template <typename F>
auto gauss_legendre_panel(F&& f, double a, double b)
    -> std::decay_t<decltype(f(a))> {
  using rule = boost::math::quadrature::gauss<double, 32>;
  const auto& xs = rule::abscissa();  // positive half of the nodes
  const auto& ws = rule::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::decay_t<decltype(f(a))> acc{};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    acc += ws[i] * (f(mid + half * xs[i]) + f(mid - half * xs[i]));
  }
  return acc * half;
}

/// Fixed-order Gauss-Legendre with panel doubling until two successive
/// refinements agree to rel_tol. Suitable for smooth integrands.
template <typename F>
auto integrate_refined(F&& f, double a, double b, double rel_tol = 1e-10,
                       double abs_tol = 1e-18, int max_doublings = 16)
    -> std::decay_t<decltype(f(a))> {
  using value_type = std::decay_t<decltype(f(a))>;
  if (a == b) return value_type{};

  auto eval = [&](int panels) {
    value_type total{};
    const double step = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      total += gauss_legendre_panel(f, a + p * step, a + (p + 1) * step);
    }
    return total;
  };

  value_type prev = eval(1);
  int panels = 2;
  for (int k = 0; k < max_doublings; ++k, panels *= 2) {
    value_type cur = eval(panels);
    const double diff = std::abs(cur - prev);
    const double scale = std::max(std::abs(cur), std::abs(prev));
    if (diff <= rel_tol * scale || diff <= abs_tol) return cur;
    prev = cur;
  }
  throw QuadratureNotConvergedError("integrate_refined: panel doubling limit",
                                    std::abs(prev), b);
}

}  // namespace levyfp
