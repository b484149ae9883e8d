// test_spectra.cpp — builtin families, document parsing, and mode weights.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include <json.hpp>

#include "specdecay/spectra.hpp"

using namespace specdecay;
using nlohmann::json;
using cplx = std::complex<double>;

TEST_CASE("builtin_family: example33 modes are -1/n + i n") {
  const Spectrum spec = builtin_family("example33", {}, 5);
  REQUIRE(spec.n_max() == 5);
  CHECK(spec.modes[0] == cplx(-1.0, 1.0));
  CHECK(spec.modes[2].real() == doctest::Approx(-1.0 / 3.0));
  CHECK(spec.modes[2].imag() == doctest::Approx(3.0));
  CHECK(spec.modes[4] == cplx(-0.2, 5.0));
  CHECK(spec.invertible);
  CHECK(spec.family == "example33");
}

TEST_CASE("builtin_family: logdecay modes are -e^{-n} + i n, capped at 700") {
  const Spectrum spec = builtin_family("logdecay", {}, 2);
  REQUIRE(spec.n_max() == 2);
  CHECK(spec.modes[0].real() == doctest::Approx(-std::exp(-1.0)));
  CHECK(spec.modes[0].imag() == doctest::Approx(1.0));
  CHECK(spec.modes[1].real() == doctest::Approx(-std::exp(-2.0)));
  CHECK(spec.modes[1].imag() == doctest::Approx(2.0));

  CHECK_NOTHROW(builtin_family("logdecay", {}, 700));
  CHECK_THROWS_WITH_AS(builtin_family("logdecay", {}, 701),
                       doctest::Contains("n_max <= 700"), std::invalid_argument);
}

TEST_CASE("builtin_family: single ignores n_max and keeps one mode") {
  const Spectrum spec = builtin_family("single", {3.0}, 10000);
  REQUIRE(spec.n_max() == 1);
  CHECK(spec.modes[0] == cplx(-3.0, 0.0));
  CHECK_THROWS_AS(builtin_family("single", {0.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(builtin_family("single", {-1.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(builtin_family("single", {}, 1), std::invalid_argument);
}

TEST_CASE("builtin_family: powerlaw modes and parameter gates") {
  const Spectrum spec = builtin_family("powerlaw", {0.5, 2.0}, 4);
  REQUIRE(spec.n_max() == 4);
  CHECK(spec.modes[3].real() == doctest::Approx(-0.5));         // -4^{-1/2}
  CHECK(spec.modes[3].imag() == doctest::Approx(16.0));         // 4^2
  CHECK_THROWS_AS(builtin_family("powerlaw", {0.0, 1.0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(builtin_family("powerlaw", {1.0}, 4), std::invalid_argument);
}

TEST_CASE("builtin_family: unknown names and zero n_max are rejected") {
  CHECK_THROWS_AS(builtin_family("mystery", {}, 4), std::invalid_argument);
  CHECK_THROWS_AS(builtin_family("example33", {}, 0), std::invalid_argument);
}

TEST_CASE("validate_spectrum: names the offending 1-based mode") {
  Spectrum bad;
  bad.modes = {cplx(-1.0, 0.0), cplx(0.5, 1.0)};
  CHECK_THROWS_WITH_AS(validate_spectrum(bad), doctest::Contains("mode 2"),
                       std::invalid_argument);
  bad.modes = {cplx(-1.0, std::numeric_limits<double>::quiet_NaN())};
  CHECK_THROWS_WITH_AS(validate_spectrum(bad), doctest::Contains("mode 1"),
                       std::invalid_argument);
}

TEST_CASE("parse_spectrum: document round trip mirrors the builtin family") {
  const Spectrum built = builtin_family("example33", {}, 100);
  const Spectrum parsed = parse_spectrum(spectrum_to_json(built));
  REQUIRE(parsed.n_max() == built.n_max());
  for (std::size_t i = 0; i < built.n_max(); ++i) CHECK(parsed.modes[i] == built.modes[i]);
  CHECK(parsed.family == built.family);
  CHECK(parsed.invertible == built.invertible);
}

TEST_CASE("parse_spectrum: malformed documents") {
  CHECK_THROWS_WITH_AS(parse_spectrum(json{{"nodes", json::array()}}),
                       doctest::Contains("'modes'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_spectrum(json{{"modes", {{-1.0, 0.0}, {"x", 0.0}}}}),
                       doctest::Contains("mode 2"), std::invalid_argument);
  // Mode with Re >= 0 caught by validation, 1-based index in the message.
  CHECK_THROWS_WITH_AS(parse_spectrum(json{{"modes", {{-1.0, 0.0}, {0.25, 1.0}}}}),
                       doctest::Contains("mode 2"), std::invalid_argument);
  // Weight count mismatch.
  CHECK_THROWS_AS(parse_spectrum(json{{"modes", {{-1.0, 0.0}}}, {"weights", {1.0, 2.0}}}),
                  std::invalid_argument);
}

TEST_CASE("parse_weights: masses and exponent") {
  const json doc = {{"modes", {{-1.0, 0.0}, {-2.0, 1.0}}}, {"weights", {0.5, 2.0}}, {"q", 4.0}};
  const auto space = parse_weights(doc);
  REQUIRE(space.has_value());
  CHECK(space->weights == std::vector<double>{0.5, 2.0});
  CHECK(space->q == 4.0);

  CHECK_FALSE(parse_weights(json{{"modes", json::array()}}).has_value());
  CHECK_THROWS_WITH_AS(parse_weights(json{{"weights", {1.0, 0.0}}}),
                       doctest::Contains("mass 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weights(json{{"weights", {1.0}}, {"q", 0.5}}), std::invalid_argument);
}

TEST_CASE("load_spectrum: missing file and parse failure") {
  CHECK_THROWS_AS(load_spectrum("/nonexistent/path.json"), std::runtime_error);
}

TEST_CASE("eval_weight: frozen value at lambda = -1/2 + 2i for a = 1") {
  // (-lambda)^{-1} = 1/(1/2 - 2i) = (2 + 8i)/17.
  const cplx w = eval_weight(OperatorSymbol{1.0, 0.0}, cplx(-0.5, 2.0));
  CHECK(w.real() == doctest::Approx(2.0 / 17.0).epsilon(1e-14));
  CHECK(w.imag() == doctest::Approx(8.0 / 17.0).epsilon(1e-14));
  CHECK(std::abs(w) == doctest::Approx(2.0 / std::sqrt(17.0)).epsilon(1e-14));
  CHECK(abs_weight(OperatorSymbol{1.0, 0.0}, cplx(-0.5, 2.0)) ==
        doctest::Approx(2.0 / std::sqrt(17.0)).epsilon(1e-14));
}

TEST_CASE("eval_weight: identity symbol, inverse pairs, and the half-plane gate") {
  const cplx lam(-0.3, 4.0);
  CHECK(eval_weight(OperatorSymbol{}, lam) == cplx(1.0, 0.0));

  // Symbols with opposite exponents multiply to 1 (principal branch).
  const cplx prod = eval_weight(OperatorSymbol{0.7, -0.3}, lam) *
                    eval_weight(OperatorSymbol{-0.7, 0.3}, lam);
  CHECK(prod.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(prod.imag() == doctest::Approx(0.0).epsilon(1e-14));

  // abs_weight is the modulus of eval_weight.
  const OperatorSymbol sym{0.4, 1.3};
  CHECK(abs_weight(sym, lam) == doctest::Approx(std::abs(eval_weight(sym, lam))).epsilon(1e-14));

  CHECK_THROWS_AS(eval_weight(OperatorSymbol{1.0, 0.0}, cplx(0.0, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(abs_weight(OperatorSymbol{1.0, 0.0}, cplx(0.1, 1.0)), std::invalid_argument);
}
