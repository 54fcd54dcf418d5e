#include "levyfp/sampling.hpp"

#include <cmath>

namespace levyfp {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined state
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Michael/Schucany/Haas smaller root, written without cancellation:
// x = mean * 4 c y / (s + y)^2 with c = shape/mean and s = sqrt(y (y + 4c)).
double ig_root(double mean, double c, double y) {
  const double s = std::sqrt(y * (y + 4.0 * c));
  const double sy = s + y;
  return mean * 4.0 * c * y / (sy * sy);
}

}  // namespace

double sample_inverse_gaussian(std::mt19937_64& eng, double mean,
                               double shape) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif;
  const double n = normal(eng);
  const double x = ig_root(mean, shape / mean, n * n);
  if (unif(eng) <= mean / (mean + x)) return x;
  return mean * mean / x;
}

NigSampler::NigSampler(const NigParams& p, std::uint64_t seed)
    : beta_(p.beta),
      mu_(p.mu),
      delta_(p.delta),
      gamma_(std::sqrt(p.alpha * p.alpha - p.beta * p.beta)),
      eng_(seed) {}

NigSampler::Draw NigSampler::components(double dt) {
  const double d = delta_ * dt;  // IG(mean = d/gamma, shape = d^2)
  const double mean = d / gamma_;
  const double n = normal_(eng_);
  const double x = ig_root(mean, d * gamma_, n * n);
  const double u = unif_(eng_);
  Draw out;
  out.subordinator = (u <= mean / (mean + x)) ? x : mean * mean / x;
  out.gauss = normal_(eng_);
  return out;
}

std::vector<double> sample_increments(std::span<const double> grid,
                                      const NigParams& p, std::uint64_t seed) {
  if (grid.empty() || grid.front() != 0.0) {
    throw InvalidParameterError("sample_increments: grid must start at 0");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw InvalidParameterError(
          "sample_increments: grid must be strictly increasing");
    }
  }
  NigSampler sampler(p, seed);
  std::vector<double> out;
  out.reserve(grid.size() - 1);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    out.push_back(sampler.draw(grid[i] - grid[i - 1]));
  }
  return out;
}

}  // namespace levyfp
