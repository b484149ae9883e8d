// certificates.hpp — explicit constant chains for sufficient admissibility and
// decay conditions, with measured inputs and diagonal calibration oracles.
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "specdecay/spectra.hpp"

namespace specdecay {

// The two roots of τ e^{−τ} = 1/(2e): τ₁ ∈ (0, 1), τ₂ ∈ (1, ∞), each to 1e−12.
struct TauPair {
  double tau1 = 0.0;
  double tau2 = 0.0;
};
TauPair solve_tau_pair();

// Measured hypotheses of the log-decay admissibility certificate:
//   ‖T(t)(−A)^{−α}‖ ≤ m0 / (log t)^β for t > t0   (β > 1/2, t0 > e^{2β}),
//   c  = sup_t ‖T(t)(−A)^{−α}‖,
//   k  = 2-Weiss constant of C(−A)^α:  ‖C(−A)^α R(λ)‖ ≤ k/√(Re λ),
//   m_ft(τ) = finite-horizon admissibility constant of C at horizon τ.
struct CertificateInputs {
  double alpha = 0.0;
  double beta = 0.0;
  double m0 = 0.0;
  double t0 = 0.0;
  double c = 0.0;
  double k = 0.0;
  std::function<double(double)> m_ft;
};

struct Certificate {
  CertificateInputs inputs;
  double m1 = 0.0;  // ∫_{t0}^∞ e^{−ξt}(log t)^{−2β} dt ≤ m1/(ξ|log ξ|^{2β})
  double m2 = 0.0;  // ∫ ‖ξ t e^{−ξt} C T(t) x‖² dt ≤ m2 |log 2ξ|^{−2β} ‖x‖²
  double tau1 = 0.0, tau2 = 0.0;
  std::vector<double> mu;    // μ_n = (τ₁/τ₂)^{n−1}, first few terms
  std::size_t m_index = 0;   // minimal m with μ_m < 1/(2 t0), 1-based
  double tau_m = 0.0;        // τ₁ / μ_m
  double series = 0.0;       // Σ_{n≥m} |log 2μ_n|^{−2β} (upper bound, tail integral added)
  double m3 = 0.0;           // (2e)² m2 · series
  double m_ft_at_tau_m = 0.0;
  double m_adm = 0.0;        // m_ft(τ_m) + m3
};

// Runs the constant chain. Throws when β ≤ 1/2 (the series diverges) or
// t0 ≤ e^{2β}, the hypotheses' validity gates.
Certificate theorem54_certificate(const CertificateInputs& inputs);

// Decay constant from the split C T(t) = [C(−A)^α T(t/2)] [T(t/2)(−A)^{−α}]:
// with ‖C(−A)^α T(t)‖ ≤ m1/√t and ‖T(t)(−A)^{−α}‖ ≤ m2/√(t^β), the product
// obeys ‖C T(t)‖ ≤ M/√(t^{1+β}) with M = √(2^{1+β}) m1 m2.
double prop56_constant(double m1, double m2, double beta);

struct Prop57Result {
  double gamma = 0.0;    // αβ/(1+β)
  double m3 = 0.0;       // c_moment · m1^{γ/α} · m2^{1−γ/α}
  double k_weiss = 0.0;  // m3 · √π
};

// Interpolated 2-Weiss constant for C(−A)^γ from a uniform bound
// ‖C(−A)^α T(t)‖ ≤ m1 and a decay bound ‖C T(t)‖ ≤ m2/√(t^{1+β}), via the
// moment inequality with constant c_moment.
Prop57Result prop57_constants(double m1, double m2, double alpha, double beta,
                              double c_moment);

// Smallest valid c_moment on a diagonal instance: maximizes
// ‖(−A)^γ x‖ / (‖(−A)^α x‖^{γ/α} ‖x‖^{1−γ/α}) over basis vectors and
// `trials` random unit vectors. Equals 1 for diagonal operators.
double calibrate_moment_constant(const Spectrum& spec, double alpha, double gamma,
                                 std::size_t trials, std::uint64_t seed);

// Diagonal observer ‖C e_n‖ = |λ_n|^{−α} √|Re λ_n|: its per-mode 2-Weiss
// constants are identically 1/2, so C(−A)^α satisfies the 2-Weiss condition
// with k = 1/2 even when the plain symbol weights do not.
std::vector<double> tempered_observer(const Spectrum& spec, double alpha);

// Measures every certificate input on a diagonal instance: c and k by closed
// form, m0 as the sup of ‖T(t)(−A)^{−α}‖ (log t)^β over a log grid
// (t0, t_hi], m_ft wired to the finite-horizon constant of the observer.
CertificateInputs measure_certificate_inputs(const Spectrum& spec,
                                             std::span<const double> observer_weights,
                                             double alpha, double beta, double t0,
                                             double t_hi = 1e8);

}  // namespace specdecay
