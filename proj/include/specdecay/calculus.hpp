// calculus.hpp — closed-form operator norms for diagonal semigroups and
// resolvents, plus the Weiss constant (per-mode formula and grid oracle).
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specdecay/spectra.hpp"

namespace specdecay {

// Result of a supremum over modes, reported at the full truncation and at the
// first tenth of the modes (tail-convergence diagnostic). Argmax indices are
// 1-based; ties break to the smallest index.
struct SupOverModes {
  double value = 0.0;
  std::size_t argmax = 0;
  double value_tenth = 0.0;
  std::size_t argmax_tenth = 0;
};

// Global divergence policy: the full-truncation value exceeds the tenth-
// truncation value by more than 1%.
bool divergent_by_truncation(const SupOverModes& s);

std::size_t tenth_count(std::size_t n);  // max(1, n/10)

template <class F>
SupOverModes sup_over_modes(std::size_t n, F&& value_of) {
  SupOverModes out;
  const std::size_t tenth = tenth_count(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = value_of(i);
    if (out.argmax == 0 || v > out.value) {
      out.value = v;
      out.argmax = i + 1;
    }
    if (i < tenth && (out.argmax_tenth == 0 || v > out.value_tenth)) {
      out.value_tenth = v;
      out.argmax_tenth = i + 1;
    }
  }
  return out;
}

// Precomputed per-mode data for one (spectrum, weight) pair: |d(lambda_n)|,
// Re/Im parts, and an imaginary-part index that lets resolvent suprema skip
// modes that provably cannot attain the max.
class ModeTable {
 public:
  ModeTable(const Spectrum& spec, const OperatorSymbol& sym);
  // Per-mode magnitudes |C e_n| supplied directly (diagonal observers that
  // are not expressible as an OperatorSymbol).
  ModeTable(const Spectrum& spec, std::span<const double> abs_weights);
  // Same, truncated to the first `count` modes.
  ModeTable(const Spectrum& spec, const OperatorSymbol& sym, std::size_t count);
  ModeTable(const Spectrum& spec, std::span<const double> abs_weights, std::size_t count);

  std::size_t size() const { return re_.size(); }
  double re(std::size_t i) const { return re_[i]; }
  double im(std::size_t i) const { return im_[i]; }
  double abs_lambda(std::size_t i) const { return absl_[i]; }
  double weight(std::size_t i) const { return w_[i]; }

  // sup_n |d| e^{t Re lambda_n}
  SupOverModes semigroup_sup(double t) const;
  // sup_n |d| / (xi + |Re lambda_n|)  (eta already optimized out)
  SupOverModes profile_sup(double xi) const;
  // sup_n |d| / |lambda - lambda_n| over the first `limit` modes; exact, with
  // pruning by imaginary-part distance. argmax_out (1-based) optional.
  double resolvent_sup(std::complex<double> lambda, std::size_t* argmax_out = nullptr) const;

 private:
  void build(const Spectrum& spec, std::size_t count);
  void build_index();

  std::vector<double> re_, im_, absl_, w_;
  std::vector<std::size_t> by_im_;       // mode order sorted by Im
  std::vector<double> im_sorted_;
  std::vector<double> wmax_prefix_, wmax_suffix_;  // running max of w_ in sorted order
};

double s_p(double p, double c);  // sup_{xi>0} xi^{1-1/p} / (xi + c)

// sup_n |d(lambda_n)| e^{t Re lambda_n} with attaining index.
SupOverModes semigroup_norm(const Spectrum& spec, const OperatorSymbol& sym, double t);

// Pointwise semigroup_norm over an increasing positive grid.
std::vector<std::pair<double, double>> decay_curve(const Spectrum& spec,
                                                   const OperatorSymbol& sym,
                                                   std::span<const double> t_grid);

// sup_n |d(lambda_n)| / |lambda - lambda_n|, Re lambda > 0.
SupOverModes resolvent_norm(const Spectrum& spec, const OperatorSymbol& sym,
                            std::complex<double> lambda);

// g(xi) = sup_eta ||D R(xi + i eta, A)||; for diagonal operators the sup over
// eta sits at eta = Im lambda_n, so g(xi) = sup_n |d| / (xi + |Re lambda_n|).
std::vector<std::pair<double, double>> resolvent_profile(const Spectrum& spec,
                                                         const OperatorSymbol& sym,
                                                         std::span<const double> xi_grid);

struct HalfPlaneGrid {
  std::vector<double> xi;   // > 0, increasing
  std::vector<double> eta;  // increasing
  // xi log-spaced over [1e-6, 1e2] (60 points); eta covers +/- 2 max|Im| and
  // hits every mode's imaginary part exactly.
  static HalfPlaneGrid defaults(const Spectrum& spec);
};

struct WeissReport {
  double p = 2.0;
  SupOverModes k_exact;      // closed-form constant sup_n |d| s_p(|Re lambda_n|)
  double k_grid = 0.0;       // grid oracle max of (Re)^{1-1/p} * resolvent norm
  double k_grid_tenth = 0.0;
  std::size_t n_max = 0;
  bool p1_boundary = false;  // p = 1: per-mode sup attained only as xi -> 0
  std::string family;
};

WeissReport weiss_constant(const Spectrum& spec, const OperatorSymbol& sym, double p);
WeissReport weiss_constant(const Spectrum& spec, const OperatorSymbol& sym, double p,
                           const HalfPlaneGrid& grid);
// Diagonal observers given by per-mode magnitudes.
WeissReport weiss_constant(const Spectrum& spec, std::span<const double> abs_weights,
                           double p);
WeissReport weiss_constant(const Spectrum& spec, std::span<const double> abs_weights,
                           double p, const HalfPlaneGrid& grid);

}  // namespace specdecay
