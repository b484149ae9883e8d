#include "specdecay/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "specdecay/util.hpp"

namespace specdecay {

namespace {

AdmissibilityReport report_from(const Spectrum& spec, double p, double t1, SupOverModes m) {
  AdmissibilityReport out;
  out.p = p;
  out.t1 = t1;
  out.n_max = spec.n_max();
  out.family = spec.family;
  out.m = m;
  out.divergent = divergent_by_truncation(m);
  return out;
}

// 1 - e^{p t Re}, the finite-horizon factor; 1 for the improper integral.
double horizon_factor(double p, double t1, double re) {
  if (std::isinf(t1)) return 1.0;
  return -std::expm1(p * t1 * re);
}

}  // namespace

AdmissibilityReport l2_admissibility_constant(const Spectrum& spec, const OperatorSymbol& sym) {
  const ModeTable table(spec, sym);
  auto m = sup_over_modes(table.size(), [&](std::size_t i) {
    const double w = table.weight(i);
    return w * w / (2.0 * -table.re(i));
  });
  return report_from(spec, 2.0, std::numeric_limits<double>::infinity(), m);
}

AdmissibilityReport l2_admissibility_constant(const Spectrum& spec,
                                              std::span<const double> abs_weights) {
  const ModeTable table(spec, abs_weights);
  auto m = sup_over_modes(table.size(), [&](std::size_t i) {
    const double w = table.weight(i);
    return w * w / (2.0 * -table.re(i));
  });
  return report_from(spec, 2.0, std::numeric_limits<double>::infinity(), m);
}

AdmissibilityReport lp_admissibility(const Spectrum& spec, const WeightedIndexSpace& space,
                                     double alpha, double p, double t1) {
  if (!(space.q >= 1.0)) throw std::invalid_argument("lp_admissibility: requires q >= 1");
  if (!(p >= space.q)) throw std::invalid_argument("lp_admissibility: requires p >= q");
  if (!(alpha > 0.0)) throw std::invalid_argument("lp_admissibility: requires alpha > 0");
  if (!(t1 > 0.0)) throw std::invalid_argument("lp_admissibility: requires t1 > 0");
  const ModeTable table(spec, OperatorSymbol{0.0, 0.0});
  auto m = sup_over_modes(table.size(), [&](std::size_t i) {
    return horizon_factor(p, t1, table.re(i)) /
           (p * -table.re(i) * std::pow(table.abs_lambda(i), alpha));
  });
  AdmissibilityReport out = report_from(spec, p, t1, m);
  out.q = space.q;
  out.alpha = alpha;
  out.exact = (p == space.q);
  return out;
}

namespace {

AdmissibilityReport finite_time_from(const Spectrum& spec, const ModeTable& table, double p,
                                     double t1) {
  if (!(p >= 1.0)) throw std::invalid_argument("finite_time_constant: requires p >= 1");
  if (!(t1 > 0.0)) throw std::invalid_argument("finite_time_constant: requires t1 > 0");
  auto m = sup_over_modes(table.size(), [&](std::size_t i) {
    return std::pow(table.weight(i), p) * horizon_factor(p, t1, table.re(i)) /
           (p * -table.re(i));
  });
  AdmissibilityReport out = report_from(spec, p, t1, m);
  out.q = p;
  return out;
}

}  // namespace

AdmissibilityReport finite_time_constant(const Spectrum& spec, const OperatorSymbol& sym,
                                         double p, double t1) {
  return finite_time_from(spec, ModeTable(spec, sym), p, t1);
}

AdmissibilityReport finite_time_constant(const Spectrum& spec,
                                         std::span<const double> abs_weights, double p,
                                         double t1) {
  return finite_time_from(spec, ModeTable(spec, abs_weights), p, t1);
}

double admissibility_oracle(const Spectrum& spec, const OperatorSymbol& sym, double p,
                            std::span<const std::complex<double>> x, double T, double q,
                            const QuadratureSpec& quad) {
  if (!(p >= 1.0)) throw std::invalid_argument("admissibility_oracle: requires p >= 1");
  if (!(q >= 1.0)) throw std::invalid_argument("admissibility_oracle: requires q >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("admissibility_oracle: requires T > 0");
  if (x.size() > spec.n_max()) {
    throw std::invalid_argument("admissibility_oracle: coefficient vector longer than spectrum");
  }

  // Support of x: per-mode magnitudes |d(λ_n) x_n| and decay rates.
  std::vector<double> a, re;
  a.reserve(x.size());
  re.reserve(x.size());
  double max_re = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = std::abs(x[i]);
    if (m == 0.0) continue;
    a.push_back(m * abs_weight(sym, spec.modes[i]));
    re.push_back(spec.modes[i].real());
    max_re = std::max(max_re, spec.modes[i].real());
  }
  if (a.empty()) throw std::invalid_argument("admissibility_oracle: zero coefficient vector");
  if (!(max_re <= -1e-12)) {
    throw std::domain_error("admissibility_oracle: nonconvergent tail");
  }

  const auto integrand = [&](double t) {
    const double s = pairwise_sum_n(a.size(), [&](std::size_t i) {
      return std::pow(a[i] * std::exp(t * re[i]), q);
    });
    return std::pow(s, p / q);
  };

  double value = integrate(integrand, 0.0, T, quad).value;
  if (p == q) {
    // Exact tail: ∫_T^∞ Σ (a_i e^{t re_i})^p dt.
    value += pairwise_sum_n(a.size(), [&](std::size_t i) {
      return std::pow(a[i], p) * std::exp(p * T * re[i]) / (p * -re[i]);
    });
  } else {
    const double f_T = integrand(T);
    if (f_T > 0.0) {
      const ExpEnvelope env{f_T * (1.0 + 1e-12), p * -max_re, T};
      value += integrate_decaying(integrand, T, env, quad).value;
    }
  }
  return value;
}

PlancherelReport plancherel_check(const Spectrum& spec, std::span<const std::complex<double>> x,
                                  double xi, const QuadratureSpec& quad) {
  if (!(xi > 0.0)) throw std::invalid_argument("plancherel_check: requires xi > 0");
  if (x.size() > spec.n_max()) {
    throw std::invalid_argument("plancherel_check: coefficient vector longer than spectrum");
  }

  std::vector<double> m2, re, im;  // |x_n|², mode parts, over the support
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = std::norm(x[i]);
    if (m == 0.0) continue;
    m2.push_back(m);
    re.push_back(spec.modes[i].real());
    im.push_back(spec.modes[i].imag());
  }

  PlancherelReport out;
  if (m2.empty()) return out;

  out.closed_form = pairwise_sum_n(
      m2.size(), [&](std::size_t i) { return m2[i] / (2.0 * (xi - re[i])); });

  // Time side: integrand Σ |x_n|² e^{2t(Re λ_n − ξ)}; truncate where the
  // slowest mode has decayed by e^{-20}, then add the exact remainder.
  double max_re = re[0];
  for (const double r : re) max_re = std::max(max_re, r);
  const double T = 10.0 / (xi - max_re);
  const auto time_integrand = [&](double t) {
    return pairwise_sum_n(m2.size(), [&](std::size_t i) {
      return m2[i] * std::exp(2.0 * t * (re[i] - xi));
    });
  };
  out.lhs = integrate(time_integrand, 0.0, T, quad).value +
            pairwise_sum_n(m2.size(), [&](std::size_t i) {
              return m2[i] * std::exp(2.0 * T * (re[i] - xi)) / (2.0 * (xi - re[i]));
            });

  // Frequency side: Σ Lorentzians centered at Im λ_n with half-width ξ − Re λ_n.
  // Quadrature over a window split at the centers; arctan tails are exact.
  const auto freq_integrand = [&](double eta) {
    return pairwise_sum_n(m2.size(), [&](std::size_t i) {
      const double hw = xi - re[i];
      const double d = eta - im[i];
      return m2[i] / (hw * hw + d * d);
    });
  };
  std::vector<double> cuts(im);
  double max_hw = 0.0;
  for (const double r : re) max_hw = std::max(max_hw, xi - r);
  const double lo = *std::min_element(im.begin(), im.end()) - 8.0 * max_hw;
  const double hi = *std::max_element(im.begin(), im.end()) + 8.0 * max_hw;
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double freq = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k + 1] > cuts[k]) freq += integrate(freq_integrand, cuts[k], cuts[k + 1], quad).value;
  }
  constexpr double kHalfPi = 1.5707963267948966;
  freq += pairwise_sum_n(m2.size(), [&](std::size_t i) {
    const double hw = xi - re[i];
    return m2[i] / hw *
           ((kHalfPi - std::atan((hi - im[i]) / hw)) + (kHalfPi - std::atan((im[i] - lo) / hw)));
  });
  out.rhs = freq / (2.0 * 3.141592653589793238462643383279502884);

  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace specdecay
