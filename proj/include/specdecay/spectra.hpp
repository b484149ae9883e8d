// spectra.hpp — eigenvalue sequences and mode-wise symbols for diagonal
// semigroups T(t)x = (e^{lambda_n t} x_n)_n with Re lambda_n < 0.
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace specdecay {

// Mode indices are 0-based in code; reports and error messages use the
// 1-based convention of the underlying sequences.
struct Spectrum {
  std::vector<std::complex<double>> modes;  // all with Re < 0
  std::string family;                       // provenance tag, "" for custom
  std::vector<double> params;
  bool invertible = false;  // claims inf_n |lambda_n| > 0 over the truncation

  std::size_t n_max() const { return modes.size(); }
};

// Discrete-measure realization of a weighted l^q space: masses mu_n > 0.
struct WeightedIndexSpace {
  std::vector<double> weights;
  double q = 2.0;
};

// Scalar mode weight d(lambda) = (-lambda)^{-a} (1-lambda)^{-b}, principal
// branch; well defined on Re lambda < 0 where -lambda and 1-lambda lie in the
// open right half-plane. a = b = 0 is the identity symbol.
struct OperatorSymbol {
  double a = 0.0;
  double b = 0.0;
};

// Families: "example33"  lambda_n = -1/n + i n        (params: none)
//           "logdecay"   lambda_n = -e^{-n} + i n     (params: none; n_max <= 700)
//           "single"     one eigenvalue -c            (params: [c], c > 0)
//           "powerlaw"   lambda_n = -n^{-a} + i n^{b} (params: [a, b], a > 0)
// "single" always produces exactly one mode.
Spectrum builtin_family(const std::string& name, const std::vector<double>& params,
                        std::size_t n_max);

// Throws std::invalid_argument naming the offending 1-based mode on violation.
void validate_spectrum(const Spectrum& spec);

// Document format: { "modes": [[re, im], ...], optional "weights": [...],
// optional "q": number, optional "family"/"params", optional "invertible" }.
Spectrum parse_spectrum(const nlohmann::json& doc);
Spectrum load_spectrum(const std::string& path);
std::optional<WeightedIndexSpace> parse_weights(const nlohmann::json& doc);
nlohmann::json spectrum_to_json(const Spectrum& spec);

std::complex<double> eval_weight(const OperatorSymbol& sym, std::complex<double> lambda);
double abs_weight(const OperatorSymbol& sym, std::complex<double> lambda);

}  // namespace specdecay
