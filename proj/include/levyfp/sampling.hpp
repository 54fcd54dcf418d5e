#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "levyfp/nig.hpp"

namespace levyfp {

/// Deterministic derivation of independent substream seeds (splitmix64).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

/// One inverse Gaussian draw with the given mean and shape
/// (Michael/Schucany/Haas).
double sample_inverse_gaussian(std::mt19937_64& eng, double mean, double shape);

/// Increment sampler for the NIG driver. An increment over a step of length
/// dt is NIG(alpha, beta, delta*dt, mu*dt), generated by subordinating a
/// Gaussian to an inverse Gaussian clock.
class NigSampler {
 public:
  NigSampler(const NigParams& p, std::uint64_t seed);

  /// Raw components of one increment, kept separate so antithetic paths can
  /// reuse the subordinator with a flipped Gaussian.
  struct Draw {
    double subordinator;
    double gauss;
  };

  Draw components(double dt);
  double value(double dt, const Draw& d) const {
    return mu_ * dt + beta_ * d.subordinator +
           std::sqrt(d.subordinator) * d.gauss;
  }
  double draw(double dt) { return value(dt, components(dt)); }

 private:
  double beta_;
  double mu_;
  double delta_;
  double gamma_;  // sqrt(alpha^2 - beta^2)
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> unif_;
};

/// Path of driver increments over a strictly increasing grid starting at 0.
/// Element i is the increment over (grid[i-1], grid[i]]; reproducible per
/// seed.
std::vector<double> sample_increments(std::span<const double> grid,
                                      const NigParams& p, std::uint64_t seed);

}  // namespace levyfp
