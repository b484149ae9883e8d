#include "specdecay/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specdecay/calculus.hpp"
#include "specdecay/util.hpp"

namespace specdecay {

namespace {

struct FitPoint {
  double u, v, y;  // log t, log log t, log norm
};

// Simple regression y = c + b·x over one centered regressor.
double slope_1d(const std::vector<FitPoint>& pts, double FitPoint::* x) {
  double xm = 0.0, ym = 0.0;
  for (const auto& p : pts) {
    xm += p.*x;
    ym += p.y;
  }
  xm /= static_cast<double>(pts.size());
  ym /= static_cast<double>(pts.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : pts) {
    sxx += (p.*x - xm) * (p.*x - xm);
    sxy += (p.*x - xm) * (p.y - ym);
  }
  if (sxx == 0.0) return 0.0;
  return sxy / sxx;
}

double rms_residual(const std::vector<FitPoint>& pts, double beta, double gamma) {
  // Intercept chosen optimally for the given (beta, gamma).
  double c = 0.0;
  for (const auto& p : pts) c += p.y + beta * p.u + gamma * p.v;
  c /= static_cast<double>(pts.size());
  double ss = 0.0;
  for (const auto& p : pts) {
    const double r = p.y - (c - beta * p.u - gamma * p.v);
    ss += r * r;
  }
  return std::sqrt(ss / static_cast<double>(pts.size()));
}

}  // namespace

RateModel fit_rate(std::span<const std::pair<double, double>> curve, FitKind kind) {
  std::vector<std::pair<double, double>> eligible;
  for (const auto& [t, v] : curve) {
    if (t < 10.0) continue;
    if (!(v > 0.0)) throw std::invalid_argument("fit_rate: nonpositive norm at eligible t");
    eligible.emplace_back(t, v);
  }
  if (eligible.size() < 10) {
    throw std::invalid_argument("fit_rate: needs at least 10 points with t >= 10");
  }
  double t_hi = 0.0;
  for (const auto& [t, v] : eligible) t_hi = std::max(t_hi, t);
  // Asymptotic statements: keep the last two decades when enough points remain.
  std::vector<std::pair<double, double>> window;
  for (const auto& [t, v] : eligible) {
    if (t >= t_hi / 100.0) window.emplace_back(t, v);
  }
  if (window.size() < 10) window = eligible;

  std::vector<FitPoint> pts;
  pts.reserve(window.size());
  double t_lo = window.front().first;
  t_hi = window.front().first;
  for (const auto& [t, v] : window) {
    const double u = std::log(t);
    pts.push_back({u, std::log(u), std::log(v)});
    t_lo = std::min(t_lo, t);
    t_hi = std::max(t_hi, t);
  }

  RateModel model;
  model.kind = kind;
  model.t_lo = t_lo;
  model.t_hi = t_hi;

  if (kind == FitKind::poly) {
    model.alt_inv_alpha = -slope_1d(pts, &FitPoint::u);
    const double b = *model.alt_inv_alpha;
    model.residual = rms_residual(pts, b, 0.0);
    return model;
  }

  // Two-regressor least squares on centered (u, v) against y.
  const auto n = static_cast<double>(pts.size());
  double um = 0.0, vm = 0.0, ym = 0.0;
  for (const auto& p : pts) {
    um += p.u;
    vm += p.v;
    ym += p.y;
  }
  um /= n;
  vm /= n;
  ym /= n;
  double suu = 0.0, svv = 0.0, suv = 0.0, suy = 0.0, svy = 0.0;
  for (const auto& p : pts) {
    const double du = p.u - um, dv = p.v - vm, dy = p.y - ym;
    suu += du * du;
    svv += dv * dv;
    suv += du * dv;
    suy += du * dy;
    svy += dv * dy;
  }
  const double det = suu * svv - suv * suv;
  double beta, gamma;
  if (std::abs(det) > 1e-12 * std::max(suu * svv, 1e-300)) {
    beta = -(svv * suy - suv * svy) / det;
    gamma = -(suu * svy - suv * suy) / det;
  } else {
    beta = -slope_1d(pts, &FitPoint::u);
    gamma = 0.0;
  }
  // Clamp-and-refit to the admissible region gamma >= 0, 0 <= beta <= 1.
  if (gamma < 0.0) {
    gamma = 0.0;
    beta = (suu > 0.0) ? -suy / suu : 0.0;
  }
  if (beta < 0.0) {
    beta = 0.0;
    gamma = (svv > 0.0) ? -svy / svv : 0.0;
    gamma = std::max(gamma, 0.0);
  } else if (beta > 1.0) {
    beta = 1.0;
    gamma = (svv > 0.0) ? -(svy + suv) / svv : 0.0;
    gamma = std::max(gamma, 0.0);
  }
  model.beta = beta;
  model.gamma = gamma;
  model.residual = rms_residual(pts, beta, gamma);
  return model;
}

double F_gamma(double xi, double gamma) {
  constexpr double kInvE = 0.36787944117144233;
  if (!(xi > 0.0 && xi < kInvE)) {
    throw std::invalid_argument("F_gamma: requires 0 < xi < 1/e");
  }
  if (!(gamma >= 0.0)) throw std::invalid_argument("F_gamma: requires gamma >= 0");
  const double l = -std::log(xi);  // > 1 on the domain
  if (gamma < 1.0) return std::pow(l, 1.0 - gamma);
  if (gamma == 1.0) return std::log(l);
  return 1.0;
}

Lemma43Constants lemma43_constant(double beta, double gamma, double t0) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("lemma43_constant: requires beta in [0, 1]");
  }
  if (!(gamma >= 0.0)) throw std::invalid_argument("lemma43_constant: requires gamma >= 0");
  constexpr double kInvE = 0.36787944117144233;
  Lemma43Constants out;
  if (beta == 1.0) {
    // Boundary case: bound M·F_gamma(xi).
    if (!(t0 > std::exp(1.0))) {
      throw std::invalid_argument("lemma43_constant: requires t0 > e for beta = 1");
    }
    out.boundary = true;
    const double lt = std::log(t0);
    double ratio_g, inf_f;
    if (gamma < 1.0) {
      ratio_g = 1.0 / (1.0 - gamma);
      inf_f = std::pow(lt, 1.0 - gamma);
    } else if (gamma == 1.0) {
      ratio_g = 1.0;
      inf_f = std::log(lt);
    } else {
      ratio_g = std::pow(lt, 1.0 - gamma) / (gamma - 1.0);
      inf_f = 1.0;
    }
    out.m0 = ratio_g;
    out.m = ratio_g + kInvE / (std::pow(lt, gamma) * inf_f);
    return out;
  }
  const double threshold = std::exp(gamma / (1.0 - beta));
  if (!(t0 > threshold)) {
    throw std::invalid_argument("lemma43_constant: requires t0 > e^(gamma/(1-beta))");
  }
  out.r = gamma / ((1.0 - beta) * std::log(t0));
  out.m0 = 1.0 / ((1.0 - beta) * (1.0 - out.r));
  out.m = out.m0 + kInvE;
  out.note =
      "leading constant taken as 1/((1-beta)(1-r)); the transposed form "
      "(1-r)/(1-beta) does not bound the integral";
  return out;
}

double verify_lemma43(double beta, double gamma, double t0, std::span<const double> xi_grid,
                      const QuadratureSpec& quad) {
  const Lemma43Constants consts = lemma43_constant(beta, gamma, t0);
  const double lt0 = std::log(t0);
  double worst = 0.0;
  for (const double xi : xi_grid) {
    if (!(xi > 0.0 && xi < 1.0 / t0)) {
      throw std::invalid_argument("verify_lemma43: xi must lie in (0, 1/t0)");
    }
    const auto integrand = [&](double t) {
      return std::exp(-xi * t) / (std::pow(t, beta) * std::pow(std::log(t), gamma));
    };
    // t^beta (log t)^gamma is nondecreasing past t0 > max(1, e^{gamma/(1-beta)}),
    // so the integrand is dominated by its t0 prefactor times e^{-xi t}.
    const ExpEnvelope env{std::exp(-xi * t0) / (std::pow(t0, beta) * std::pow(lt0, gamma)), xi,
                          t0};
    const double lhs = integrate_decaying(integrand, t0, env, quad).value;
    const double rhs = consts.boundary
                           ? consts.m * F_gamma(xi, gamma)
                           : consts.m / (std::pow(xi, 1.0 - beta) * std::pow(-std::log(xi), gamma));
    worst = std::max(worst, lhs / rhs);
  }
  return worst;
}

std::vector<std::pair<double, double>> predict_decay_from_resolvent(
    std::span<const std::pair<double, double>> profile, std::span<const double> t_grid) {
  if (profile.size() < 2) {
    throw std::invalid_argument("predict_decay_from_resolvent: needs at least 2 profile points");
  }
  std::vector<std::pair<double, double>> prof(profile.begin(), profile.end());
  std::sort(prof.begin(), prof.end());
  for (const auto& [xi, g] : prof) {
    if (!(xi > 0.0 && g > 0.0)) {
      throw std::invalid_argument("predict_decay_from_resolvent: profile must be positive");
    }
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) {
    const double xi = 1.0 / t;
    if (!(xi >= prof.front().first && xi <= prof.back().first)) {
      throw std::invalid_argument("predict_decay_from_resolvent: t outside profile range");
    }
    const auto it = std::lower_bound(prof.begin(), prof.end(), std::make_pair(xi, 0.0));
    double g;
    if (it->first == xi) {
      g = it->second;
    } else {
      const auto& [x1, g1] = *(it - 1);
      const auto& [x2, g2] = *it;
      const double w = (std::log(xi) - std::log(x1)) / (std::log(x2) - std::log(x1));
      g = std::exp((1.0 - w) * std::log(g1) + w * std::log(g2));
    }
    out.emplace_back(t, g * xi);  // g(1/t) / t
  }
  return out;
}

namespace {

double windowed_growth(const WindowedSup& w) {
  if (w.inner == 0.0) return (w.full == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
  return w.full / w.inner - 1.0;
}

}  // namespace

Thm44Report check_thm44(const Spectrum& spec, const OperatorSymbol& sym, double beta,
                        double gamma, std::span<const double> xi_grid,
                        std::span<const double> t_grid, double threshold) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("check_thm44: requires beta in [0, 1)");
  }
  if (!(gamma >= 0.0)) throw std::invalid_argument("check_thm44: requires gamma >= 0");
  if (xi_grid.empty() || t_grid.empty()) {
    throw std::invalid_argument("check_thm44: empty grid");
  }
  double xi_min = xi_grid[0], t_max = t_grid[0];
  for (const double xi : xi_grid) {
    if (!(xi > 0.0 && xi < 1.0)) throw std::invalid_argument("check_thm44: requires xi in (0, 1)");
    xi_min = std::min(xi_min, xi);
  }
  for (const double t : t_grid) {
    if (!(t > 1.0)) throw std::invalid_argument("check_thm44: requires t > 1");
    t_max = std::max(t_max, t);
  }

  Thm44Report rep;
  rep.beta = beta;
  rep.gamma = gamma;
  rep.threshold = threshold;
  rep.n_max = spec.n_max();
  rep.family = spec.family;

  const ModeTable table(spec, sym);
  for (const double xi : xi_grid) {
    const double weight = std::pow(xi, 1.0 - beta) * std::pow(-std::log(xi), gamma);
    const double v = weight * table.profile_sup(xi).value;
    rep.resolvent.full = std::max(rep.resolvent.full, v);
    if (xi >= 10.0 * xi_min) rep.resolvent.inner = std::max(rep.resolvent.inner, v);
  }
  for (const double t : t_grid) {
    const double weight = std::pow(t, beta) * std::pow(std::log(t), gamma);
    const double v = weight * table.semigroup_sup(t).value;
    rep.decay.full = std::max(rep.decay.full, v);
    if (t <= t_max / 10.0) rep.decay.inner = std::max(rep.decay.inner, v);
  }
  if (rep.resolvent.inner == 0.0) rep.resolvent.inner = rep.resolvent.full;
  if (rep.decay.inner == 0.0) rep.decay.inner = rep.decay.full;

  rep.growth_resolvent = windowed_growth(rep.resolvent);
  rep.growth_decay = windowed_growth(rep.decay);
  rep.bounded_resolvent = rep.growth_resolvent <= threshold;
  rep.bounded_decay = rep.growth_decay <= threshold;
  rep.consistent = (rep.bounded_resolvent == rep.bounded_decay);
  return rep;
}

Thm44Report check_thm44(const Spectrum& spec, const OperatorSymbol& sym, double beta,
                        double gamma, double threshold) {
  const std::vector<double> xi = log_grid(1e-10, 0.5, 40.0);
  const std::vector<double> t = log_grid(1e2, 1e10, 40.0);
  return check_thm44(spec, sym, beta, gamma, xi, t, threshold);
}

}  // namespace specdecay
