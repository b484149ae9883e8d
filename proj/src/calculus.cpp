#include "specdecay/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace specdecay {

std::size_t tenth_count(std::size_t n) { return std::max<std::size_t>(1, n / 10); }

bool divergent_by_truncation(const SupOverModes& s) {
  if (s.value_tenth == 0.0) return s.value > 0.0;
  return s.value > 1.01 * s.value_tenth;
}

// ------------------------------------------------------------- ModeTable ---

ModeTable::ModeTable(const Spectrum& spec, const OperatorSymbol& sym)
    : ModeTable(spec, sym, spec.n_max()) {}

ModeTable::ModeTable(const Spectrum& spec, std::span<const double> abs_weights)
    : ModeTable(spec, abs_weights, spec.n_max()) {}

ModeTable::ModeTable(const Spectrum& spec, const OperatorSymbol& sym, std::size_t count) {
  build(spec, count);
  for (std::size_t i = 0; i < size(); ++i) w_[i] = abs_weight(sym, spec.modes[i]);
  build_index();
}

ModeTable::ModeTable(const Spectrum& spec, std::span<const double> abs_weights,
                     std::size_t count) {
  if (abs_weights.size() < std::min(count, spec.n_max())) {
    throw std::invalid_argument("ModeTable: need one weight per mode");
  }
  build(spec, count);
  for (std::size_t i = 0; i < size(); ++i) {
    if (!(abs_weights[i] >= 0.0)) {
      throw std::invalid_argument("ModeTable: weights must be nonnegative");
    }
    w_[i] = abs_weights[i];
  }
  build_index();
}

void ModeTable::build(const Spectrum& spec, std::size_t count) {
  const std::size_t n = std::min(count, spec.n_max());
  if (n == 0) throw std::invalid_argument("ModeTable: empty spectrum");
  re_.resize(n);
  im_.resize(n);
  absl_.resize(n);
  w_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    re_[i] = spec.modes[i].real();
    im_[i] = spec.modes[i].imag();
    absl_[i] = std::abs(spec.modes[i]);
  }
}

void ModeTable::build_index() {
  const std::size_t n = size();
  by_im_.resize(n);
  std::iota(by_im_.begin(), by_im_.end(), std::size_t{0});
  std::stable_sort(by_im_.begin(), by_im_.end(),
                   [&](std::size_t a, std::size_t b) { return im_[a] < im_[b]; });
  im_sorted_.resize(n);
  wmax_prefix_.resize(n);
  wmax_suffix_.resize(n);
  for (std::size_t k = 0; k < n; ++k) im_sorted_[k] = im_[by_im_[k]];
  double run = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    run = std::max(run, w_[by_im_[k]]);
    wmax_prefix_[k] = run;
  }
  run = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    run = std::max(run, w_[by_im_[k]]);
    wmax_suffix_[k] = run;
  }
}

SupOverModes ModeTable::semigroup_sup(double t) const {
  return sup_over_modes(size(), [&](std::size_t i) { return w_[i] * std::exp(t * re_[i]); });
}

SupOverModes ModeTable::profile_sup(double xi) const {
  return sup_over_modes(size(), [&](std::size_t i) { return w_[i] / (xi - re_[i]); });
}

double ModeTable::resolvent_sup(std::complex<double> lambda, std::size_t* argmax_out) const {
  const double xi = lambda.real();
  const double eta = lambda.imag();
  const std::size_t n = size();
  auto value_at = [&](std::size_t i) {
    const double dx = xi - re_[i];
    const double dy = eta - im_[i];
    return w_[i] / std::sqrt(dx * dx + dy * dy);
  };

  // Walk outward from the eta-nearest mode; |lambda - lambda_k| >= |eta - Im|,
  // so once max-remaining-weight / eta-gap drops below the incumbent, the rest
  // of that direction cannot win.
  double best = 0.0;
  std::size_t best_idx = 0;  // 1-based

  const auto lo_it = std::lower_bound(im_sorted_.begin(), im_sorted_.end(), eta);
  std::size_t right = static_cast<std::size_t>(lo_it - im_sorted_.begin());
  std::size_t left = right;  // left scans [0, right), right scans [right, n)

  auto scan = [&](std::size_t k) {
    const std::size_t i = by_im_[k];
    const double v = value_at(i);
    if (v > best || (v == best && (best_idx == 0 || i + 1 < best_idx))) {
      best = v;
      best_idx = i + 1;
    }
  };

  while (true) {
    const bool can_left = left > 0;
    const bool can_right = right < n;
    if (!can_left && !can_right) break;
    // Prune each side by its achievable bound.
    double left_bound = -1.0, right_bound = -1.0;
    if (can_left) {
      const double gap = std::abs(eta - im_sorted_[left - 1]);
      left_bound = (gap > 0.0) ? wmax_prefix_[left - 1] / gap : HUGE_VAL;
    }
    if (can_right) {
      const double gap = std::abs(im_sorted_[right] - eta);
      right_bound = (gap > 0.0) ? wmax_suffix_[right] / gap : HUGE_VAL;
    }
    if (left_bound < best && right_bound < best && best_idx != 0) break;
    if (left_bound >= right_bound) {
      scan(--left);
    } else {
      scan(right++);
    }
  }
  if (argmax_out) *argmax_out = best_idx;
  return best;
}

// ---------------------------------------------------------------- norms ----

double s_p(double p, double c) {
  if (!(p >= 1.0)) throw std::invalid_argument("s_p: requires p >= 1");
  if (!(c > 0.0)) throw std::invalid_argument("s_p: requires c > 0");
  if (p == 1.0) return 1.0 / c;  // supremum as xi -> 0 (boundary, not attained)
  // Stationary point xi = (p-1) c.
  return std::pow(p - 1.0, 1.0 - 1.0 / p) / (p * std::pow(c, 1.0 / p));
}

SupOverModes semigroup_norm(const Spectrum& spec, const OperatorSymbol& sym, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("semigroup_norm: requires t >= 0");
  return ModeTable(spec, sym).semigroup_sup(t);
}

std::vector<std::pair<double, double>> decay_curve(const Spectrum& spec,
                                                   const OperatorSymbol& sym,
                                                   std::span<const double> t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("decay_curve: empty t grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
      throw std::invalid_argument("decay_curve: t grid must be nonnegative and increasing");
    }
  }
  const ModeTable table(spec, sym);
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) out.emplace_back(t, table.semigroup_sup(t).value);
  return out;
}

SupOverModes resolvent_norm(const Spectrum& spec, const OperatorSymbol& sym,
                            std::complex<double> lambda) {
  if (!(lambda.real() > 0.0)) {
    throw std::invalid_argument("resolvent_norm: requires Re lambda > 0");
  }
  const ModeTable full(spec, sym);
  SupOverModes out;
  std::size_t arg = 0;
  out.value = full.resolvent_sup(lambda, &arg);
  out.argmax = arg;
  const ModeTable tenth(spec, sym, tenth_count(spec.n_max()));
  out.value_tenth = tenth.resolvent_sup(lambda, &arg);
  out.argmax_tenth = arg;
  return out;
}

std::vector<std::pair<double, double>> resolvent_profile(const Spectrum& spec,
                                                         const OperatorSymbol& sym,
                                                         std::span<const double> xi_grid) {
  if (xi_grid.empty()) throw std::invalid_argument("resolvent_profile: empty xi grid");
  for (const double xi : xi_grid) {
    if (!(xi > 0.0)) throw std::invalid_argument("resolvent_profile: requires xi > 0");
  }
  const ModeTable table(spec, sym);
  std::vector<std::pair<double, double>> out;
  out.reserve(xi_grid.size());
  for (const double xi : xi_grid) out.emplace_back(xi, table.profile_sup(xi).value);
  return out;
}

// ----------------------------------------------------------------- Weiss ---

HalfPlaneGrid HalfPlaneGrid::defaults(const Spectrum& spec) {
  HalfPlaneGrid grid;
  constexpr std::size_t kXiPoints = 60;
  const double lo = std::log(1e-6), hi = std::log(1e2);
  grid.xi.reserve(kXiPoints);
  for (std::size_t i = 0; i < kXiPoints; ++i) {
    grid.xi.push_back(std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                        static_cast<double>(kXiPoints - 1)));
  }
  double max_im = 0.0;
  for (const auto& lam : spec.modes) max_im = std::max(max_im, std::abs(lam.imag()));
  if (max_im == 0.0) max_im = 1.0;
  constexpr std::size_t kEtaBase = 61;
  grid.eta.reserve(kEtaBase + spec.n_max());
  for (std::size_t i = 0; i < kEtaBase; ++i) {
    grid.eta.push_back(-2.0 * max_im +
                       4.0 * max_im * static_cast<double>(i) / static_cast<double>(kEtaBase - 1));
  }
  for (const auto& lam : spec.modes) grid.eta.push_back(lam.imag());
  std::sort(grid.eta.begin(), grid.eta.end());
  grid.eta.erase(std::unique(grid.eta.begin(), grid.eta.end()), grid.eta.end());
  return grid;
}

namespace {

WeissReport weiss_from_tables(const ModeTable& full, const ModeTable& tenth, double p,
                              const HalfPlaneGrid& grid, const Spectrum& spec) {
  if (!(p >= 1.0)) throw std::invalid_argument("weiss_constant: requires p >= 1");
  WeissReport report;
  report.p = p;
  report.n_max = spec.n_max();
  report.family = spec.family;
  report.p1_boundary = (p == 1.0);
  report.k_exact =
      sup_over_modes(full.size(), [&](std::size_t i) { return full.weight(i) * s_p(p, -full.re(i)); });
  const double expo = 1.0 - 1.0 / p;
  for (const double xi : grid.xi) {
    const double scale = std::pow(xi, expo);
    for (const double eta : grid.eta) {
      const std::complex<double> lambda{xi, eta};
      report.k_grid = std::max(report.k_grid, scale * full.resolvent_sup(lambda));
      report.k_grid_tenth = std::max(report.k_grid_tenth, scale * tenth.resolvent_sup(lambda));
    }
  }
  return report;
}

}  // namespace

WeissReport weiss_constant(const Spectrum& spec, const OperatorSymbol& sym, double p,
                           const HalfPlaneGrid& grid) {
  const ModeTable full(spec, sym);
  const ModeTable tenth(spec, sym, tenth_count(spec.n_max()));
  return weiss_from_tables(full, tenth, p, grid, spec);
}

WeissReport weiss_constant(const Spectrum& spec, const OperatorSymbol& sym, double p) {
  return weiss_constant(spec, sym, p, HalfPlaneGrid::defaults(spec));
}

WeissReport weiss_constant(const Spectrum& spec, std::span<const double> abs_weights,
                           double p, const HalfPlaneGrid& grid) {
  const ModeTable full(spec, abs_weights);
  const ModeTable tenth(spec, abs_weights, tenth_count(spec.n_max()));
  return weiss_from_tables(full, tenth, p, grid, spec);
}

WeissReport weiss_constant(const Spectrum& spec, std::span<const double> abs_weights,
                           double p) {
  return weiss_constant(spec, abs_weights, p, HalfPlaneGrid::defaults(spec));
}

}  // namespace specdecay
