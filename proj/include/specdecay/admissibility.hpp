// admissibility.hpp — exact and quadrature-based output admissibility
// constants for diagonal semigroups, plus a Plancherel consistency check.
#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>

#include "specdecay/calculus.hpp"
#include "specdecay/quadrature.hpp"
#include "specdecay/spectra.hpp"

namespace specdecay {

// Constant M in  ∫₀^{t1} ‖D T(t) x‖^p dt ≤ M ‖x‖^p.
struct AdmissibilityReport {
  double p = 2.0;
  double q = 2.0;      // exponent of the underlying sequence space
  double alpha = 0.0;  // smoothing order when the weight is (−λ)^{−α/p}
  SupOverModes m;      // the constant, with attaining index and tenth-truncation twin
  std::optional<double> m_oracle;  // quadrature estimate when one was run
  double t1 = 0.0;                 // horizon (infinity for the improper integral)
  std::size_t n_max = 0;
  bool divergent = false;  // truncation growth exceeded the 1% policy
  bool exact = true;       // false when the value is only an upper bound (p > q)
  std::string family;
};

// Best constant for p = 2, infinite horizon: sup_n |d(λ_n)|² / (2|Re λ_n|).
AdmissibilityReport l2_admissibility_constant(const Spectrum& spec, const OperatorSymbol& sym);
// Same for a diagonal observer given by per-mode magnitudes ‖C e_n‖.
AdmissibilityReport l2_admissibility_constant(const Spectrum& spec,
                                              std::span<const double> abs_weights);

// Jensen-chain bound for the weight (−λ)^{−α/p} on an ℓ^q space:
//   B = sup_n (1 − e^{p t1 Re λ_n}) / (p |Re λ_n| |λ_n|^α),
// the exact best constant when p = q, an upper bound when p > q.
AdmissibilityReport lp_admissibility(const Spectrum& spec, const WeightedIndexSpace& space,
                                     double alpha, double p,
                                     double t1 = std::numeric_limits<double>::infinity());

// Finite-horizon constant: sup_n |d(λ_n)|^p (1 − e^{p t1 Re λ_n}) / (p |Re λ_n|).
AdmissibilityReport finite_time_constant(const Spectrum& spec, const OperatorSymbol& sym,
                                         double p, double t1);
AdmissibilityReport finite_time_constant(const Spectrum& spec,
                                         std::span<const double> abs_weights, double p,
                                         double t1);

// Quadrature estimate of ∫₀^∞ ‖D T(t) x‖_q^p dt for one coefficient vector:
// adaptive on [0, T], then an exact per-mode tail when p = q or a certified
// exponential-envelope continuation otherwise.
double admissibility_oracle(const Spectrum& spec, const OperatorSymbol& sym, double p,
                            std::span<const std::complex<double>> x, double T,
                            double q = 2.0, const QuadratureSpec& quad = {});

struct PlancherelReport {
  double lhs = 0.0;          // time side: ∫₀^∞ e^{−2ξt} ‖T(t)x‖² dt by quadrature
  double rhs = 0.0;          // frequency side: (1/2π) ∫ ‖R(ξ+iη)x‖² dη by quadrature
  double gap = 0.0;          // |lhs − rhs|
  double closed_form = 0.0;  // Σ |x_n|² / (2(ξ − Re λ_n)), the value both sides target
};

// Both sides of the Plancherel identity for the shifted trajectory e^{−ξt}T(t)x.
PlancherelReport plancherel_check(const Spectrum& spec, std::span<const std::complex<double>> x,
                                  double xi, const QuadratureSpec& quad = {});

}  // namespace specdecay
