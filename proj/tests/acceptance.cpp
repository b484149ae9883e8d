// acceptance.cpp — the ten release criteria, one self-contained check per
// criterion. Each prints exactly one line:
//   criterion N: PASS — <measured values>
//   criterion N: FAIL — <measured values and the violated clause>
// and the process exits nonzero when any selected criterion fails.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "specdecay/admissibility.hpp"
#include "specdecay/calculus.hpp"
#include "specdecay/carleson.hpp"
#include "specdecay/certificates.hpp"
#include "specdecay/rates.hpp"
#include "specdecay/search.hpp"
#include "specdecay/spectra.hpp"
#include "specdecay/util.hpp"

namespace {

using namespace specdecay;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string verdict(bool divergent) { return divergent ? "divergent" : "bounded"; }

// Criterion 1: on the 1/n-decay family at n_max = 10^4, the inverse-weighted
// norm obeys sup_t t*norm(t) <= 1/e (+1e-9), and integer times approach it.
Outcome criterion1() {
  const Spectrum spec = builtin_family("example33", {}, 10000);
  const ModeTable table(spec, OperatorSymbol{1.0, 0.0});
  const auto scaled = [&](double t) { return t * table.semigroup_sup(t).value; };
  GridPolicy grid;
  grid.points = 2048;
  const SupSearchResult sup = sup_search(scaled, 1e-3, 200.0, grid);
  double integer_best = 0.0;
  for (int t = 1; t <= 200; ++t) integer_best = std::max(integer_best, scaled(t));
  const double limit = std::exp(-1.0);
  const bool upper = sup.value <= limit + 1e-9;
  const bool lower = integer_best >= limit - 1e-3;
  return {upper && lower,
          "sup_t t*norm = " + fmt(sup.value) + " vs 1/e = " + fmt(limit) +
              " (upper clause " + (upper ? "holds" : "VIOLATED") +
              "), integer-t max = " + fmt(integer_best) + " >= 1/e - 1e-3 (" +
              (lower ? "holds" : "VIOLATED") + ")"};
}

// Criterion 2: Weiss constants across the exponent threshold. The 0.5-weight
// constant sits in [0.49, 0.5]; the 0.4-weight full/tenth ratio must match
// 10^0.2 within 5%; the 0.6-weight constant is truncation-stable within 1%.
Outcome criterion2() {
  const Spectrum spec = builtin_family("example33", {}, 10000);
  const WeissReport k05 = weiss_constant(spec, OperatorSymbol{0.5, 0.0}, 2.0);
  const WeissReport k04 = weiss_constant(spec, OperatorSymbol{0.4, 0.0}, 2.0);
  const WeissReport k06 = weiss_constant(spec, OperatorSymbol{0.6, 0.0}, 2.0);

  // The value 0.5 is a real-number endpoint: the floating-point evaluation of
  // the per-mode maximum can land a few ulp above it, so the comparison
  // carries a 5e-16 guard. Genuine violations overshoot by orders of magnitude.
  const bool band = k05.k_exact.value >= 0.49 && k05.k_exact.value <= 0.5 + 5e-16;

  const double ratio = k04.k_exact.value / k04.k_exact.value_tenth;
  const double target = std::pow(10.0, 0.2);
  const bool ratio_ok = std::abs(ratio - target) <= 0.05 * target;

  const double gap06 =
      std::abs(k06.k_exact.value - k06.k_exact.value_tenth) / k06.k_exact.value;
  const bool stable = gap06 <= 0.01;

  return {band && ratio_ok && stable,
          "k(0.5) = " + fmt(k05.k_exact.value) + " in [0.49, 0.5] (" +
              (band ? "holds" : "VIOLATED") + "); k(0.4) full/tenth = " + fmt(ratio) +
              " vs required 10^0.2 = " + fmt(target) + " +/-5% (" +
              (ratio_ok ? "holds" : "VIOLATED") + "); k(0.6) truncation gap = " +
              fmt(100.0 * gap06) + "% <= 1% (" + (stable ? "holds" : "VIOLATED") + ")"};
}

// Criterion 3: the exact 2-admissibility constant across the same threshold.
Outcome criterion3() {
  const Spectrum spec = builtin_family("example33", {}, 10000);
  const AdmissibilityReport m05 = l2_admissibility_constant(spec, OperatorSymbol{0.5, 0.0});
  const AdmissibilityReport m04 = l2_admissibility_constant(spec, OperatorSymbol{0.4, 0.0});
  const AdmissibilityReport m06 = l2_admissibility_constant(spec, OperatorSymbol{0.6, 0.0});
  // Same few-ulp guard on the 0.5 endpoint as in criterion 2.
  const bool band = m05.m.value >= 0.49 && m05.m.value <= 0.5 + 5e-16;
  const bool diverges = m04.divergent;
  const bool converges = !m06.divergent;
  return {band && diverges && converges,
          "M(0.5) = " + fmt(m05.m.value) + " in [0.49, 0.5] (" +
              (band ? "holds" : "VIOLATED") + "); M(0.4) " + verdict(m04.divergent) +
              " (expected divergent); M(0.6) " + verdict(m06.divergent) +
              " (expected bounded)"};
}

// Criterion 4: the time-side and frequency-side energies of shifted
// trajectories agree to 1e-6 relative for random vectors across abscissae.
Outcome criterion4() {
  const Spectrum spec = builtin_family("example33", {}, 100);
  Rng rng(42);
  const auto xi_grid = log_grid(1e-3, 10.0, 4.0);
  double worst = 0.0;
  for (int v = 0; v < 10; ++v) {
    const auto x = rng.unit_vector(24);
    for (const double xi : xi_grid) {
      const PlancherelReport pr = plancherel_check(spec, x, xi);
      worst = std::max(worst, pr.gap / pr.lhs);
    }
  }
  return {worst < 1e-6, "worst relative gap over 10 vectors x " +
                            std::to_string(xi_grid.size()) + " abscissae = " + fmt(worst) +
                            " (tolerance 1e-6)"};
}

// Criterion 5: the integral-bound constant is sound: quadrature LHS never
// exceeds the certified RHS on any tested (beta, gamma) at t0 = 2x threshold.
Outcome criterion5() {
  double worst = -std::numeric_limits<double>::infinity();
  double worst_beta = 0.0, worst_gamma = 0.0;
  for (const double beta : {0.0, 0.5}) {
    for (const double gamma : {0.0, 1.0, 2.0}) {
      const double t0 = 2.0 * std::exp(gamma / (1.0 - beta));
      const auto grid = log_grid_n(1e-6 / t0, 0.99 / t0, 20);
      const double ratio = verify_lemma43(beta, gamma, t0, grid);
      if (ratio > worst) {
        worst = ratio;
        worst_beta = beta;
        worst_gamma = gamma;
      }
    }
  }
  return {worst <= 1.0, "worst quadrature/bound ratio = " + fmt(worst) + " at (beta, gamma) = (" +
                            fmt(worst_beta) + ", " + fmt(worst_gamma) +
                            "), 6 pairs x 20 abscissae (sound iff <= 1)"};
}

// Criterion 6: two-sided boundedness on the log-decay family: (0,1) weights
// are bounded on both sides within 2%, (0,2) weights diverge on both sides.
Outcome criterion6() {
  const Spectrum spec = builtin_family("logdecay", {}, 60);
  const OperatorSymbol sym{1.0, 0.0};
  const Thm44Report ok = check_thm44(spec, sym, 0.0, 1.0);
  const Thm44Report bad = check_thm44(spec, sym, 0.0, 2.0);
  const bool bounded_pair = ok.growth_decay <= 0.02 && ok.growth_resolvent <= 0.02;
  const bool divergent_pair = bad.growth_decay > 0.10 && bad.growth_resolvent > 0.10;
  return {bounded_pair && divergent_pair,
          "(0,1) growths decay/resolvent = " + fmt(100.0 * ok.growth_decay) + "%/" +
              fmt(100.0 * ok.growth_resolvent) + "% (<= 2% " +
              (bounded_pair ? "holds" : "VIOLATED") + "); (0,2) growths = " +
              fmt(100.0 * bad.growth_decay) + "%/" + fmt(100.0 * bad.growth_resolvent) +
              "% (> 10% " + (divergent_pair ? "holds" : "VIOLATED") + ")"};
}

// Criterion 7: the measured certificate chain on the log-decay family is
// finite and dominates the exact constant at beta = 0.75, and the beta = 0.4
// run is rejected at the hypothesis gate.
Outcome criterion7() {
  const Spectrum spec = builtin_family("logdecay", {}, 60);
  const double alpha = 0.75;
  const auto w = tempered_observer(spec, alpha);
  const CertificateInputs in = measure_certificate_inputs(spec, w, alpha, 0.75, 10.0);
  const Certificate cert = theorem54_certificate(in);
  const double exact = l2_admissibility_constant(spec, w).m.value;
  const bool sound = std::isfinite(cert.m_adm) && cert.m_adm >= exact;

  bool rejected = false;
  try {
    theorem54_certificate(measure_certificate_inputs(spec, w, alpha, 0.4, 10.0));
  } catch (const std::invalid_argument& e) {
    rejected = std::string(e.what()).find("beta must exceed 1/2") != std::string::npos;
  }
  return {sound && rejected, "beta = 0.75: M_adm = " + fmt(cert.m_adm) +
                                 " >= exact M = " + fmt(exact) + " (" +
                                 (sound ? "holds" : "VIOLATED") + "); beta = 0.4 " +
                                 (rejected ? "rejected at the gate" : "NOT rejected")};
}

// Criterion 8: the split-product envelope built from two measured 1/sqrt(t)
// bounds dominates the directly computed decay curve on [1, 10^3].
Outcome criterion8() {
  const Spectrum spec = builtin_family("example33", {}, 10000);
  const ModeTable half(spec, OperatorSymbol{0.5, 0.0});
  const ModeTable full(spec, OperatorSymbol{1.0, 0.0});
  double m1 = 0.0;
  for (int j = 1; j <= 5000; ++j) {
    const double t = 0.5 * j;
    m1 = std::max(m1, std::sqrt(t) * half.semigroup_sup(t).value);
  }
  const double m2 = m1;  // both split factors are the same measured curve
  const double coeff = prop56_constant(m1, m2, 1.0);
  double min_ratio = std::numeric_limits<double>::infinity();
  double at_t = 0.0;
  for (const double t : log_grid(1.0, 1e3, 40.0)) {
    const double envelope = coeff / std::sqrt(t * t);
    const double measured = full.semigroup_sup(t).value;
    const double ratio = envelope / measured;
    if (ratio < min_ratio) {
      min_ratio = ratio;
      at_t = t;
    }
  }
  return {min_ratio >= 1.0, "M1 = M2 = " + fmt(m1) + ", envelope coefficient = " + fmt(coeff) +
                                ", min envelope/measured = " + fmt(min_ratio) + " at t = " +
                                fmt(at_t) + " (dominates iff >= 1)"};
}

// Criterion 9: the box-ratio scan and the Weiss truncation verdict agree on
// both sides of the threshold, at both scan depths.
Outcome criterion9() {
  const Spectrum spec = builtin_family("example33", {}, 2000);
  bool all_agree = true;
  std::string detail;
  for (const double a : {0.4, 0.5, 0.6}) {
    const WeissReport wr = weiss_constant(spec, OperatorSymbol{a, 0.0}, 2.0);
    const bool weiss_div = divergent_by_truncation(wr.k_exact);
    const ColumnFamily cols = weiss_matched_columns(spec, a);
    SamplerPolicy p10, p20;
    p10.j_max = 10;
    p20.j_max = 20;
    const CarlesonScan s10 = carleson_constant(spec, cols, 0.5, p10);
    const CarlesonScan s20 = carleson_constant(spec, cols, 0.5, p20);
    const bool agree = s10.divergent == weiss_div && s20.divergent == weiss_div;
    all_agree = all_agree && agree;
    if (!detail.empty()) detail += "; ";
    detail += "a=" + fmt(a) + ": weiss " + verdict(weiss_div) + ", scan J=10 " +
              verdict(s10.divergent) + ", J=20 " + verdict(s20.divergent) +
              (agree ? "" : " (DISAGREE)");
  }
  return {all_agree, detail};
}

// Criterion 10: cross-validation invariants. The quadrature oracle matches
// the mode sum on random vectors; the grid Weiss oracle never exceeds the
// closed form; synthetic decay laws are recovered by the fitter.
Outcome criterion10() {
  const Spectrum spec = builtin_family("example33", {}, 100);
  const OperatorSymbol sym{0.5, 0.0};
  const ModeTable table(spec, sym);
  Rng rng(1234);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.unit_vector(16);
    const double oracle = admissibility_oracle(spec, sym, 2.0, x, 10.0);
    double direct = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
      direct += std::norm(x[n]) * table.weight(n) * table.weight(n) /
                (2.0 * std::abs(table.re(n)));
    }
    worst = std::max(worst, std::abs(oracle - direct) / direct);
  }
  const bool oracle_ok = worst < 1e-6;

  const Spectrum spec2k = builtin_family("example33", {}, 2000);
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (const double a : {0.4, 0.5, 0.6}) {
    const WeissReport wr = weiss_constant(spec2k, OperatorSymbol{a, 0.0}, 2.0);
    worst_excess = std::max(worst_excess, wr.k_grid - wr.k_exact.value);
  }
  const bool grid_ok = worst_excess <= 1e-9;

  std::vector<std::pair<double, double>> curve, pure;
  for (const double t : log_grid(10.0, 1e5, 10.0)) {
    curve.emplace_back(t, 2.0 * std::pow(t, -0.75) * std::pow(std::log(t), -1.25));
    pure.emplace_back(t, std::pow(t, -2.0));
  }
  const RateModel logfit = fit_rate(curve, FitKind::polylog);
  const RateModel powfit = fit_rate(pure, FitKind::poly);
  const bool fit_ok = std::abs(logfit.beta - 0.75) < 1e-3 &&
                      std::abs(logfit.gamma - 1.25) < 1e-3 && powfit.alt_inv_alpha &&
                      std::abs(*powfit.alt_inv_alpha - 2.0) < 1e-3;

  return {oracle_ok && grid_ok && fit_ok,
          "oracle vs mode sum worst relative gap = " + fmt(worst) + " (< 1e-6 " +
              (oracle_ok ? "holds" : "VIOLATED") + "); max k_grid - k_exact = " +
              fmt(worst_excess) + " (<= 1e-9 " + (grid_ok ? "holds" : "VIOLATED") +
              "); recovered (beta, gamma, inv_alpha) = (" + fmt(logfit.beta) + ", " +
              fmt(logfit.gamma) + ", " +
              fmt(powfit.alt_inv_alpha ? *powfit.alt_inv_alpha : 0.0) + ") vs (0.75, 1.25, 2) (" +
              (fit_ok ? "holds" : "VIOLATED") + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  int which = 0;  // 0 runs all ten
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      which = std::atoi(argv[++i]);
      if (which < 1 || which > 10) {
        std::cerr << "acceptance: --criterion expects 1..10\n";
        return 2;
      }
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  const std::function<Outcome()> checks[] = {criterion1, criterion2, criterion3, criterion4,
                                             criterion5, criterion6, criterion7, criterion8,
                                             criterion9, criterion10};
  bool all_pass = true;
  for (int n = 1; n <= 10; ++n) {
    if (which != 0 && which != n) continue;
    Outcome out;
    try {
      out = checks[n - 1]();
    } catch (const std::exception& e) {
      out = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": " << (out.pass ? "PASS" : "FAIL") << " — "
              << out.detail << std::endl;
    if (!out.pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
