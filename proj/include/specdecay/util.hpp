// util.hpp — deterministic numeric helpers shared across the library.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace specdecay {

// Pairwise (cascade) summation: O(log n) error growth and a reduction order
// that does not depend on threading or platform, so reports stay reproducible.
double pairwise_sum(std::span<const double> xs);

template <class F>
double pairwise_sum_n(std::size_t n, F&& f) {
  // Recursive splitting without materializing the terms.
  struct Rec {
    F& f;
    double operator()(std::size_t lo, std::size_t hi) {
      const std::size_t len = hi - lo;
      if (len == 0) return 0.0;
      if (len <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += f(i);
        return s;
      }
      const std::size_t mid = lo + len / 2;
      return (*this)(lo, mid) + (*this)(mid, hi);
    }
  } rec{f};
  return rec(0, n);
}

// Geometric grid from lo to hi inclusive, ceil(per_decade · decades) equal
// log-steps (at least one). Requires 0 < lo < hi.
std::vector<double> log_grid(double lo, double hi, double per_decade);

// Geometric grid with exactly n points (n ≥ 2), endpoints included.
std::vector<double> log_grid_n(double lo, double hi, std::size_t n);

// Deterministic random source. The mt19937_64 bit stream is pinned by the
// standard; the library distributions are not. Uniform/normal values are
// derived from raw bits (53-bit mantissa, Box-Muller) so --seed runs are
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01();  // in [0, 1)
  double normal();     // standard normal

  // Complex Gaussian vector normalized to unit l2 norm.
  std::vector<std::complex<double>> unit_vector(std::size_t dim);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace specdecay
