#include "specdecay/util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specdecay {

double pairwise_sum(std::span<const double> xs) {
  return pairwise_sum_n(xs.size(), [&](std::size_t i) { return xs[i]; });
}

std::vector<double> log_grid(double lo, double hi, double per_decade) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("log_grid: requires 0 < lo < hi");
  if (!(per_decade > 0.0)) throw std::invalid_argument("log_grid: requires per_decade > 0");
  const double decades = std::log10(hi / lo);
  const auto steps = static_cast<std::size_t>(std::ceil(per_decade * decades - 1e-12));
  return log_grid_n(lo, hi, std::max<std::size_t>(steps, 1) + 1);
}

std::vector<double> log_grid_n(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("log_grid_n: requires 0 < lo < hi");
  if (n < 2) throw std::invalid_argument("log_grid_n: requires n >= 2");
  std::vector<double> out(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

double Rng::uniform01() {
  // Top 53 bits -> [0, 1) with full double resolution.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; reject u = 0 to keep log finite.
  double u = 0.0;
  do {
    u = uniform01();
  } while (u == 0.0);
  const double v = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

std::vector<std::complex<double>> Rng::unit_vector(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("Rng::unit_vector: dim must be positive");
  std::vector<std::complex<double>> x(dim);
  double norm2 = 0.0;
  for (auto& c : x) {
    c = {normal(), normal()};
    norm2 += std::norm(c);
  }
  if (norm2 == 0.0) {
    x[0] = 1.0;  // astronomically unlikely, but keep the contract
    return x;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : x) c *= inv;
  return x;
}

}  // namespace specdecay
