// test_calculus.cpp — semigroup/resolvent norms and the Weiss constant.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "specdecay/calculus.hpp"
#include "specdecay/rates.hpp"
#include "specdecay/search.hpp"
#include "specdecay/spectra.hpp"
#include "specdecay/util.hpp"

using namespace specdecay;
using cplx = std::complex<double>;

namespace {
Spectrum ex33(std::size_t n = 10000) { return builtin_family("example33", {}, n); }
}  // namespace

TEST_CASE("semigroup_norm: frozen value at t = 1 for the inverse weight") {
  // value_n = e^{-1/n} / sqrt(1/n^2 + n^2); the max sits at n = 2.
  const auto s = semigroup_norm(ex33(100), OperatorSymbol{1.0, 0.0}, 1.0);
  const double expected = std::exp(-0.5) / std::sqrt(0.25 + 4.0);
  CHECK(s.value == doctest::Approx(expected).epsilon(1e-14));
  CHECK(s.value == doctest::Approx(0.29421).epsilon(1e-4));
  CHECK(s.argmax == 2);
}

TEST_CASE("semigroup_norm: t = 0 reduces to the weight supremum, identity to slowest mode") {
  const Spectrum spec = ex33(50);
  const auto at0 = semigroup_norm(spec, OperatorSymbol{}, 0.0);
  CHECK(at0.value == doctest::Approx(1.0));
  CHECK(at0.argmax == 1);  // all modes tie at 1; smallest index wins

  // Identity weight at t > 0: the mode with the largest Re (slowest) wins.
  const auto at2 = semigroup_norm(spec, OperatorSymbol{}, 2.0);
  CHECK(at2.value == doctest::Approx(std::exp(-2.0 / 50.0)).epsilon(1e-14));
  CHECK(at2.argmax == 50);

  CHECK_THROWS_AS(semigroup_norm(spec, OperatorSymbol{}, -1.0), std::invalid_argument);
}

TEST_CASE("semigroup_norm: t * norm stays below 1/e for the inverse weight") {
  // t e^{t Re} / |lambda_n| <= (t/n) e^{-t/n} <= 1/e per mode.
  const ModeTable table(ex33(), OperatorSymbol{1.0, 0.0});
  for (const double t : log_grid(1e-3, 200.0, 20.0)) {
    CHECK(t * table.semigroup_sup(t).value <= std::exp(-1.0) + 1e-12);
  }
  // And the bound is nearly attained at integer times t = n.
  const auto near = semigroup_norm(ex33(), OperatorSymbol{1.0, 0.0}, 100.0);
  CHECK(100.0 * near.value >= std::exp(-1.0) - 1e-4);
}

TEST_CASE("decay_curve: matches pointwise norms on an increasing grid") {
  const Spectrum spec = ex33(200);
  const OperatorSymbol sym{1.0, 0.0};
  const auto grid = log_grid(1.0, 100.0, 5.0);
  const auto curve = decay_curve(spec, sym, grid);
  REQUIRE(curve.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(curve[i].first == grid[i]);
    CHECK(curve[i].second ==
          doctest::Approx(semigroup_norm(spec, sym, grid[i]).value).epsilon(1e-14));
  }
  const std::vector<double> bad = {1.0, 0.5};
  CHECK_THROWS_AS(decay_curve(spec, sym, bad), std::invalid_argument);
}

TEST_CASE("resolvent_norm: frozen value at lambda = 1/2 + 2i for the half weight") {
  // Nearest mode is lambda_2 = -1/2 + 2i at distance 1; |d| = (17/4)^{-1/4}.
  const auto r = resolvent_norm(ex33(100), OperatorSymbol{0.5, 0.0}, cplx(0.5, 2.0));
  CHECK(r.value == doctest::Approx(std::pow(17.0 / 4.0, -0.25)).epsilon(1e-12));
  CHECK(r.value == doctest::Approx(0.69645).epsilon(1e-4));
  CHECK(r.argmax == 2);
  CHECK_THROWS_AS(resolvent_norm(ex33(10), OperatorSymbol{}, cplx(-0.1, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("resolvent_sup: exact over all modes, ties break to the smallest index") {
  Spectrum spec;
  spec.modes = {cplx(-1.0, 1.0), cplx(-1.0, -1.0)};  // mirror pair
  const ModeTable table(spec, OperatorSymbol{});
  std::size_t argmax = 0;
  const double v = table.resolvent_sup(cplx(1.0, 0.0), &argmax);
  CHECK(v == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
  CHECK(argmax == 1);
}

TEST_CASE("resolvent_sup: pruning agrees with the brute-force scan") {
  const Spectrum spec = ex33(2000);
  const OperatorSymbol sym{0.5, 0.0};
  const ModeTable table(spec, sym);
  for (const cplx lam : {cplx(0.3, 17.2), cplx(1e-3, 1500.0), cplx(10.0, -3.0),
                         cplx(0.5, 2.0), cplx(2.0, 2000.5)}) {
    double brute = 0.0;
    for (std::size_t i = 0; i < spec.n_max(); ++i) {
      brute = std::max(brute, abs_weight(sym, spec.modes[i]) / std::abs(lam - spec.modes[i]));
    }
    CHECK(table.resolvent_sup(lam) == doctest::Approx(brute).epsilon(1e-14));
  }
}

TEST_CASE("resolvent_profile: identity weight approaches 1/xi as modes accumulate") {
  // g(xi) = sup_n 1/(xi + 1/n); with 100 modes, g(0.01) = 1/(0.01 + 0.01) = 50.
  const std::vector<double> xis = {0.01, 0.1, 1.0};
  const auto prof = resolvent_profile(ex33(100), OperatorSymbol{}, xis);
  REQUIRE(prof.size() == 3);
  CHECK(prof[0].second == doctest::Approx(50.0).epsilon(1e-14));
  CHECK(prof[1].second == doctest::Approx(1.0 / 0.11).epsilon(1e-14));
  CHECK(prof[2].second == doctest::Approx(1.0 / 1.01).epsilon(1e-14));
  const std::vector<double> bad = {0.0, 1.0};
  CHECK_THROWS_AS(resolvent_profile(ex33(10), OperatorSymbol{}, bad), std::invalid_argument);
}

TEST_CASE("s_p: closed form equals a direct maximization") {
  CHECK(s_p(2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s_p(2.0, 0.25) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s_p(1.0, 4.0) == doctest::Approx(0.25).epsilon(1e-14));
  for (const double p : {1.5, 2.0, 3.0}) {
    for (const double c : {0.1, 1.0, 7.0}) {
      GridPolicy log_policy;
      log_policy.log_spaced = true;
      const auto direct = sup_search(
          [&](double xi) { return std::pow(xi, 1.0 - 1.0 / p) / (xi + c); }, 1e-8, 1e8,
          log_policy);
      CHECK(s_p(p, c) == doctest::Approx(direct.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("weiss_constant: exponent 1/2 gives K just under 1/2, attained in the tail") {
  const WeissReport wr = weiss_constant(ex33(), OperatorSymbol{0.5, 0.0}, 2.0);
  // Per-mode value 1/(2 (1 + n^{-4})^{1/4}) increases to 1/2. The computed
  // max can land one ulp above 0.5, hence the rounding guard.
  CHECK(wr.k_exact.value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(wr.k_exact.value <= 0.5 + 5e-16);
  CHECK(wr.k_exact.argmax >= 1000);
  CHECK_FALSE(divergent_by_truncation(wr.k_exact));
  CHECK_FALSE(wr.p1_boundary);
}

TEST_CASE("weiss_constant: frozen value for exponent 0.6 and growth for 0.4") {
  const Spectrum spec = ex33();
  const WeissReport heavy = weiss_constant(spec, OperatorSymbol{0.6, 0.0}, 2.0);
  // value_n = sqrt(n) / (2 |lambda_n|^{0.6}); the max sits at n = 2.
  const double expected = std::sqrt(2.0) / (2.0 * std::pow(17.0 / 4.0, 0.3));
  CHECK(heavy.k_exact.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(heavy.k_exact.value == doctest::Approx(0.458108).epsilon(1e-5));
  CHECK(heavy.k_exact.argmax == 2);
  CHECK_FALSE(divergent_by_truncation(heavy.k_exact));

  // Exponent below the threshold: values grow like n^{0.1}/2, so the
  // full-truncation sup exceeds the tenth-truncation sup by 10^{0.1}.
  const WeissReport light = weiss_constant(spec, OperatorSymbol{0.4, 0.0}, 2.0);
  CHECK(divergent_by_truncation(light.k_exact));
  CHECK(light.k_exact.value / light.k_exact.value_tenth ==
        doctest::Approx(std::pow(10.0, 0.1)).epsilon(1e-6));
}

TEST_CASE("weiss_constant: grid oracle never exceeds the closed form and nearly attains it") {
  const Spectrum spec = ex33();
  for (const double a : {0.4, 0.5, 0.6}) {
    const WeissReport wr = weiss_constant(spec, OperatorSymbol{a, 0.0}, 2.0);
    CHECK(wr.k_grid <= wr.k_exact.value + 1e-9);
    CHECK(wr.k_grid_tenth <= wr.k_exact.value_tenth + 1e-9);
  }
  const WeissReport half = weiss_constant(spec, OperatorSymbol{0.5, 0.0}, 2.0);
  CHECK(half.k_grid >= (1.0 - 1e-3) * half.k_exact.value);
}

TEST_CASE("weiss_constant: p = 1 on a single mode reduces to |d|/c with boundary flag") {
  const Spectrum spec = builtin_family("single", {4.0}, 1);
  const WeissReport wr = weiss_constant(spec, OperatorSymbol{}, 1.0);
  CHECK(wr.k_exact.value == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(wr.p1_boundary);
  // The grid oracle stays below: xi^0 * 1/(xi + c) < 1/c for xi > 0.
  CHECK(wr.k_grid <= wr.k_exact.value + 1e-9);
  CHECK_THROWS_AS(weiss_constant(spec, OperatorSymbol{}, 0.5), std::invalid_argument);
}

TEST_CASE("weiss_constant: per-mode magnitudes overload matches the symbol path") {
  const Spectrum spec = ex33(500);
  const OperatorSymbol sym{0.5, 0.25};
  std::vector<double> w(spec.n_max());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = abs_weight(sym, spec.modes[i]);
  const WeissReport via_sym = weiss_constant(spec, sym, 2.0);
  const WeissReport via_w = weiss_constant(spec, w, 2.0);
  CHECK(via_w.k_exact.value == doctest::Approx(via_sym.k_exact.value).epsilon(1e-14));
  CHECK(via_w.k_grid == doctest::Approx(via_sym.k_grid).epsilon(1e-12));
}

TEST_CASE("fractional weight sets the algebraic decay exponent") {
  // With weight (-lambda)^{-a} the norm decays like t^{-a} (up to constants);
  // the fitted exponent over [10, 1e3] recovers a within 5%.
  const Spectrum spec = builtin_family("example33", {}, 100000);
  for (const double a : {0.5, 1.0}) {
    const auto curve = decay_curve(spec, OperatorSymbol{a, 0.0}, log_grid(10.0, 1e3, 20.0));
    const RateModel model = fit_rate(curve, FitKind::poly);
    REQUIRE(model.alt_inv_alpha.has_value());
    CHECK(*model.alt_inv_alpha == doctest::Approx(a).epsilon(0.05));
  }
}

TEST_CASE("divergent_by_truncation: boundary behavior of the 1% rule") {
  SupOverModes s;
  s.value = 1.0;
  s.value_tenth = 1.0;
  CHECK_FALSE(divergent_by_truncation(s));
  s.value = 1.005;
  CHECK_FALSE(divergent_by_truncation(s));
  s.value = 1.02;
  CHECK(divergent_by_truncation(s));
  s.value_tenth = 0.0;
  s.value = 1e-9;
  CHECK(divergent_by_truncation(s));  // any growth from zero counts
  s.value = 0.0;
  CHECK_FALSE(divergent_by_truncation(s));
}

TEST_CASE("tenth_count and truncated tables") {
  CHECK(tenth_count(1) == 1);
  CHECK(tenth_count(9) == 1);
  CHECK(tenth_count(10) == 1);
  CHECK(tenth_count(100) == 10);
  const Spectrum spec = ex33(100);
  const ModeTable full(spec, OperatorSymbol{1.0, 0.0});
  const ModeTable head(spec, OperatorSymbol{1.0, 0.0}, 10);
  CHECK(full.size() == 100);
  CHECK(head.size() == 10);
  CHECK(head.semigroup_sup(1.0).value <= full.semigroup_sup(1.0).value);
}

TEST_CASE("HalfPlaneGrid::defaults hits every mode's imaginary part") {
  const Spectrum spec = ex33(64);
  const HalfPlaneGrid grid = HalfPlaneGrid::defaults(spec);
  REQUIRE(!grid.xi.empty());
  CHECK(grid.xi.front() > 0.0);
  for (std::size_t i = 1; i < grid.xi.size(); ++i) CHECK(grid.xi[i] > grid.xi[i - 1]);
  for (const auto& lam : spec.modes) {
    bool found = false;
    for (const double eta : grid.eta) {
      if (eta == lam.imag()) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}
