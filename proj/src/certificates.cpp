#include "specdecay/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "specdecay/admissibility.hpp"
#include "specdecay/calculus.hpp"
#include "specdecay/rates.hpp"
#include "specdecay/util.hpp"

namespace specdecay {

namespace {

// Root of τe^{−τ} = 1/(2e) inside [lo, hi] by bisection; f is monotone there.
double bisect_tau(double lo, double hi) {
  constexpr double kTarget = 0.18393972058572117;  // 1/(2e)
  auto f = [&](double tau) { return tau * std::exp(-tau) - kTarget; };
  const bool rising = f(lo) < 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TauPair solve_tau_pair() {
  // τe^{−τ} rises on (0,1) and falls on (1,∞), peaking at e^{−1} > 1/(2e).
  return {bisect_tau(1e-6, 1.0), bisect_tau(1.0, 10.0)};
}

Certificate theorem54_certificate(const CertificateInputs& inputs) {
  if (!(inputs.beta > 0.5)) {
    throw std::invalid_argument("theorem54_certificate: beta must exceed 1/2 (hypothesis gate)");
  }
  if (!(inputs.t0 > std::exp(2.0 * inputs.beta))) {
    throw std::invalid_argument("theorem54_certificate: requires t0 > e^(2 beta)");
  }
  if (!(inputs.alpha > 0.0 && inputs.m0 > 0.0 && inputs.c > 0.0 && inputs.k > 0.0)) {
    throw std::invalid_argument("theorem54_certificate: inputs must be positive");
  }
  if (!inputs.m_ft) {
    throw std::invalid_argument("theorem54_certificate: missing finite-horizon constant");
  }

  Certificate cert;
  cert.inputs = inputs;
  const double beta2 = 2.0 * inputs.beta;

  cert.m1 = lemma43_constant(0.0, beta2, inputs.t0).m;
  // ξ c² t0 ≤ c²(log t0)^{2β} / (2 |log 2ξ|^{2β}) for ξ < 1/(2t0) since
  // ξ|log 2ξ|^{2β} increases up to ξ = 1/(2t0) when t0 > e^{2β}.
  cert.m2 = inputs.k * inputs.k *
            (inputs.c * inputs.c * std::pow(std::log(inputs.t0), beta2) +
             inputs.m0 * inputs.m0 * cert.m1) /
            2.0;

  const TauPair tau = solve_tau_pair();
  cert.tau1 = tau.tau1;
  cert.tau2 = tau.tau2;
  const double rho = tau.tau1 / tau.tau2;
  const double cutoff = 1.0 / (2.0 * inputs.t0);
  double mu = 1.0;
  std::size_t m = 1;
  cert.mu.push_back(mu);
  while (mu >= cutoff) {
    mu *= rho;
    ++m;
    cert.mu.push_back(mu);
    if (m > 10000) throw std::logic_error("theorem54_certificate: mu sequence did not cross");
  }
  cert.m_index = m;
  cert.tau_m = tau.tau1 / mu;

  // S = Σ_{n≥m} ((n−1)Δ − log 2)^{−2β}, Δ = log(τ₂/τ₁): one million terms,
  // then the integral tail keeps the total an upper bound.
  const double delta = std::log(tau.tau2 / tau.tau1);
  const double log2 = std::log(2.0);
  constexpr std::size_t kTerms = 1000000;
  const double partial = pairwise_sum_n(kTerms, [&](std::size_t i) {
    const double n = static_cast<double>(m + i);
    return std::pow((n - 1.0) * delta - log2, -beta2);
  });
  const double n_last = static_cast<double>(m + kTerms - 1);
  const double tail =
      std::pow((n_last - 1.0) * delta - log2, 1.0 - beta2) / (delta * (beta2 - 1.0));
  cert.series = partial + tail;

  cert.m3 = (2.0 * std::numbers::e) * (2.0 * std::numbers::e) * cert.m2 * cert.series;
  cert.m_ft_at_tau_m = inputs.m_ft(cert.tau_m);
  if (!(cert.m_ft_at_tau_m >= 0.0) || !std::isfinite(cert.m_ft_at_tau_m)) {
    throw std::invalid_argument("theorem54_certificate: finite-horizon constant is not finite");
  }
  cert.m_adm = cert.m_ft_at_tau_m + cert.m3;
  return cert;
}

double prop56_constant(double m1, double m2, double beta) {
  if (!(m1 > 0.0 && m2 > 0.0)) {
    throw std::invalid_argument("prop56_constant: requires m1, m2 > 0");
  }
  if (!(beta >= 0.0)) throw std::invalid_argument("prop56_constant: requires beta >= 0");
  return std::pow(2.0, 0.5 * (1.0 + beta)) * m1 * m2;
}

Prop57Result prop57_constants(double m1, double m2, double alpha, double beta,
                              double c_moment) {
  if (!(m1 > 0.0 && m2 > 0.0 && alpha > 0.0 && beta > 0.0 && c_moment > 0.0)) {
    throw std::invalid_argument("prop57_constants: requires positive inputs");
  }
  Prop57Result out;
  out.gamma = alpha * beta / (1.0 + beta);
  const double frac = out.gamma / alpha;  // = β/(1+β)
  // The decay exponent (1+β)/2 · (1−γ/α) must collapse to 1/2 exactly; this
  // is what turns the interpolated bound into a 2-Weiss constant.
  if (std::abs(0.5 * (1.0 + beta) * (1.0 - frac) - 0.5) > 1e-12) {
    throw std::logic_error("prop57_constants: exponent identity violated");
  }
  out.m3 = c_moment * std::pow(m1, frac) * std::pow(m2, 1.0 - frac);
  out.k_weiss = out.m3 * std::sqrt(std::numbers::pi);
  return out;
}

double calibrate_moment_constant(const Spectrum& spec, double alpha, double gamma,
                                 std::size_t trials, std::uint64_t seed) {
  if (!(gamma > 0.0 && gamma < alpha)) {
    throw std::invalid_argument("calibrate_moment_constant: requires 0 < gamma < alpha");
  }
  const std::size_t dim = std::min<std::size_t>(spec.n_max(), 512);
  std::vector<double> abs_l(dim);
  for (std::size_t i = 0; i < dim; ++i) abs_l[i] = std::abs(spec.modes[i]);

  const double frac = gamma / alpha;
  const auto ratio = [&](std::span<const std::complex<double>> x) {
    double n_gamma = 0.0, n_alpha = 0.0, n_plain = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double m2 = std::norm(x[i]);
      if (m2 == 0.0) continue;
      n_gamma += std::pow(abs_l[i], 2.0 * gamma) * m2;
      n_alpha += std::pow(abs_l[i], 2.0 * alpha) * m2;
      n_plain += m2;
    }
    if (n_plain == 0.0) return 0.0;
    return std::sqrt(n_gamma) /
           (std::pow(std::sqrt(n_alpha), frac) * std::pow(std::sqrt(n_plain), 1.0 - frac));
  };

  double best = 0.0;
  std::vector<std::complex<double>> basis(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    basis[i] = 1.0;
    best = std::max(best, ratio(basis));
    basis[i] = 0.0;
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = rng.unit_vector(dim);
    best = std::max(best, ratio(x));
  }
  return best;
}

std::vector<double> tempered_observer(const Spectrum& spec, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("tempered_observer: requires alpha > 0");
  std::vector<double> w(spec.n_max());
  for (std::size_t n = 0; n < w.size(); ++n) {
    w[n] = std::pow(std::abs(spec.modes[n]), -alpha) * std::sqrt(-spec.modes[n].real());
  }
  return w;
}

CertificateInputs measure_certificate_inputs(const Spectrum& spec,
                                             std::span<const double> observer_weights,
                                             double alpha, double beta, double t0,
                                             double t_hi) {
  if (!(alpha > 0.0)) throw std::invalid_argument("measure_certificate_inputs: alpha > 0");
  if (!(beta > 0.0)) throw std::invalid_argument("measure_certificate_inputs: beta > 0");
  if (!(t0 > 1.0 && t_hi > t0)) {
    throw std::invalid_argument("measure_certificate_inputs: requires 1 < t0 < t_hi");
  }
  if (observer_weights.size() < spec.n_max()) {
    throw std::invalid_argument("measure_certificate_inputs: need one weight per mode");
  }

  CertificateInputs in;
  in.alpha = alpha;
  in.beta = beta;
  in.t0 = t0;

  // c = sup_t ‖T(t)(−A)^{−α}‖, attained at t = 0 for contraction spectra.
  const OperatorSymbol smoothing{alpha, 0.0};
  const ModeTable table(spec, smoothing);
  in.c = table.semigroup_sup(0.0).value;

  // m0 = sup over (t0, t_hi] of ‖T(t)(−A)^{−α}‖ (log t)^β.
  double m0 = 0.0;
  for (const double t : log_grid(t0 * 1.01, t_hi, 40.0)) {
    m0 = std::max(m0, table.semigroup_sup(t).value * std::pow(std::log(t), beta));
  }
  in.m0 = m0;

  // k: per-mode 2-Weiss constant of the observer boosted by (−A)^α.
  std::vector<double> boosted(spec.n_max());
  for (std::size_t n = 0; n < boosted.size(); ++n) {
    boosted[n] = observer_weights[n] * std::pow(std::abs(spec.modes[n]), alpha);
  }
  const ModeTable boosted_table(spec, boosted);
  in.k = sup_over_modes(boosted_table.size(), [&](std::size_t i) {
           return boosted_table.weight(i) * s_p(2.0, -boosted_table.re(i));
         }).value;

  std::vector<double> w(observer_weights.begin(), observer_weights.end());
  in.m_ft = [spec, w](double tau) {
    return finite_time_constant(spec, std::span<const double>(w), 2.0, tau).m.value;
  };
  return in;
}

}  // namespace specdecay
