// rates.hpp — decay-law fitting, the slowly-varying comparison function F_γ,
// integral-bound constants with quadrature verification, and the two-sided
// boundedness check linking decay weights to resolvent-profile weights.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specdecay/quadrature.hpp"
#include "specdecay/spectra.hpp"

namespace specdecay {

enum class FitKind { poly, polylog };

// Fitted decay law: norm(t) ≈ C t^{−β} (log t)^{−γ}, or pure power t^{−1/α}.
struct RateModel {
  FitKind kind = FitKind::polylog;
  double beta = 0.0;   // clamped to [0, 1]
  double gamma = 0.0;  // clamped to >= 0
  std::optional<double> alt_inv_alpha;  // 1/α for FitKind::poly
  double t_lo = 0.0, t_hi = 0.0;        // window actually used
  double residual = 0.0;                // RMS of log-residuals over the window
};

// Least squares on log-transformed regressors. Points with t < 10 are
// ignored; the window defaults to the last two decades of the curve and
// widens to all eligible points when that leaves fewer than 10.
RateModel fit_rate(std::span<const std::pair<double, double>> curve, FitKind kind);

// Slowly varying comparison function on 0 < ξ < e^{−1}:
//   |log ξ|^{1−γ} (γ < 1),  log|log ξ| (γ = 1),  1 (γ > 1).
double F_gamma(double xi, double gamma);

// Constants for the bound ∫_{t0}^∞ e^{−ξt} t^{−β} (log t)^{−γ} dt ≤ M·RHS(ξ),
// RHS(ξ) = ξ^{β−1}|log ξ|^{−γ} for β < 1 and F_γ(ξ) for the β = 1 boundary.
struct Lemma43Constants {
  double m = 0.0;       // the constant M in the bound
  double m0 = 0.0;      // leading term (β < 1 case)
  double r = 0.0;       // log-correction ratio γ/((1−β) log t0), in [0, 1)
  bool boundary = false;  // β = 1 case
  std::string note;
};

// β in [0, 1]; γ ≥ 0; requires t0 > e^{γ/(1−β)} (strict), or t0 > e when β = 1.
Lemma43Constants lemma43_constant(double beta, double gamma, double t0);

// Worst quadrature(LHS)/bound(RHS) over the ξ-grid; every ξ must lie in
// (0, 1/t0). A sound constant keeps the ratio ≤ 1.
double verify_lemma43(double beta, double gamma, double t0, std::span<const double> xi_grid,
                      const QuadratureSpec& quad = {});

// Shape-level decay prediction from a resolvent profile: (t, g(1/t)/t) with g
// interpolated log-log. Every 1/t must lie inside the profile's ξ-range.
std::vector<std::pair<double, double>> predict_decay_from_resolvent(
    std::span<const std::pair<double, double>> profile, std::span<const double> t_grid);

// Sup over a grid, at the full window and with the most extreme decade
// dropped; the relative growth between the two is the boundedness signal.
struct WindowedSup {
  double full = 0.0;
  double inner = 0.0;
};

struct Thm44Report {
  double beta = 0.0, gamma = 0.0;
  double threshold = 0.02;      // growth below this counts as bounded
  WindowedSup resolvent;        // sup of g(ξ)·ξ^{1−β}|log ξ|^γ over the ξ-grid
  WindowedSup decay;            // sup of norm(t)·t^β(log t)^γ over the t-grid
  double growth_resolvent = 0.0;  // full/inner − 1
  double growth_decay = 0.0;
  bool bounded_resolvent = true;
  bool bounded_decay = true;
  bool consistent = true;  // both bounded or both divergent
  std::size_t n_max = 0;
  std::string family;
};

// Two-sided check that norm(t)·t^β(log t)^γ and g(ξ)·ξ^{1−β}|log ξ|^γ are
// simultaneously bounded or simultaneously divergent. Requires 0 ≤ β < 1,
// γ ≥ 0, every ξ in (0, 1), every t > 1.
Thm44Report check_thm44(const Spectrum& spec, const OperatorSymbol& sym, double beta,
                        double gamma, std::span<const double> xi_grid,
                        std::span<const double> t_grid, double threshold = 0.02);
// Default grids: t log-spaced [10², 10¹⁰], ξ log-spaced [10⁻¹⁰, 0.5], both at
// 40 points per decade; the inner window drops the last t-decade / first ξ-decade.
Thm44Report check_thm44(const Spectrum& spec, const OperatorSymbol& sym, double beta,
                        double gamma, double threshold = 0.02);

}  // namespace specdecay
