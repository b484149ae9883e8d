#include "specdecay/spectra.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace specdecay {
namespace {

void require_params(const std::string& name, const std::vector<double>& params,
                    std::size_t count) {
  if (params.size() != count) {
    throw std::invalid_argument("builtin_family: family '" + name + "' expects " +
                                std::to_string(count) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
}

}  // namespace

void validate_spectrum(const Spectrum& spec) {
  for (std::size_t i = 0; i < spec.modes.size(); ++i) {
    const auto lam = spec.modes[i];
    if (!std::isfinite(lam.real()) || !std::isfinite(lam.imag())) {
      throw std::invalid_argument("spectrum: mode " + std::to_string(i + 1) +
                                  " is not finite");
    }
    if (!(lam.real() < 0.0)) {
      throw std::invalid_argument("spectrum: mode " + std::to_string(i + 1) +
                                  " has nonnegative real part");
    }
  }
  if (spec.invertible) {
    for (std::size_t i = 0; i < spec.modes.size(); ++i) {
      if (!(std::abs(spec.modes[i]) > 0.0)) {
        throw std::invalid_argument("spectrum: invertible flag set but mode " +
                                    std::to_string(i + 1) + " has modulus 0");
      }
    }
  }
}

Spectrum builtin_family(const std::string& name, const std::vector<double>& params,
                        std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("builtin_family: n_max must be >= 1");
  Spectrum spec;
  spec.family = name;
  spec.params = params;
  spec.invertible = true;
  if (name == "example33") {
    require_params(name, params, 0);
    spec.modes.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double dn = static_cast<double>(n);
      spec.modes.emplace_back(-1.0 / dn, dn);
    }
  } else if (name == "logdecay") {
    require_params(name, params, 0);
    if (n_max > 700) {
      throw std::invalid_argument(
          "builtin_family: logdecay real parts underflow beyond n = 700; use n_max <= 700");
    }
    spec.modes.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double dn = static_cast<double>(n);
      spec.modes.emplace_back(-std::exp(-dn), dn);
    }
  } else if (name == "single") {
    require_params(name, params, 1);
    if (!(params[0] > 0.0))
      throw std::invalid_argument("builtin_family: single requires c > 0");
    spec.modes.emplace_back(-params[0], 0.0);  // exactly one mode
  } else if (name == "powerlaw") {
    require_params(name, params, 2);
    if (!(params[0] > 0.0))
      throw std::invalid_argument("builtin_family: powerlaw requires a > 0");
    spec.modes.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double dn = static_cast<double>(n);
      spec.modes.emplace_back(-std::pow(dn, -params[0]), std::pow(dn, params[1]));
    }
  } else {
    throw std::invalid_argument("builtin_family: unknown family '" + name + "'");
  }
  validate_spectrum(spec);
  return spec;
}

Spectrum parse_spectrum(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("modes") || !doc["modes"].is_array()) {
    throw std::invalid_argument("parse_spectrum: document needs a 'modes' array");
  }
  Spectrum spec;
  std::size_t i = 0;
  for (const auto& entry : doc["modes"]) {
    ++i;
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw std::invalid_argument("parse_spectrum: mode " + std::to_string(i) +
                                  " must be a [re, im] pair");
    }
    spec.modes.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  if (doc.contains("family")) spec.family = doc["family"].get<std::string>();
  if (doc.contains("params")) spec.params = doc["params"].get<std::vector<double>>();
  if (doc.contains("invertible")) spec.invertible = doc["invertible"].get<bool>();
  validate_spectrum(spec);
  if (doc.contains("weights")) {
    const auto& w = doc["weights"];
    if (!w.is_array() || w.size() != spec.modes.size()) {
      throw std::invalid_argument(
          "parse_spectrum: 'weights' must list one positive mass per mode");
    }
  }
  return spec;
}

std::optional<WeightedIndexSpace> parse_weights(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("weights")) return std::nullopt;
  WeightedIndexSpace space;
  space.weights = doc["weights"].get<std::vector<double>>();
  for (std::size_t i = 0; i < space.weights.size(); ++i) {
    if (!(space.weights[i] > 0.0)) {
      throw std::invalid_argument("parse_weights: mass " + std::to_string(i + 1) +
                                  " must be positive");
    }
  }
  if (doc.contains("q")) {
    space.q = doc["q"].get<double>();
    if (!(space.q >= 1.0)) throw std::invalid_argument("parse_weights: q must be >= 1");
  }
  return space;
}

Spectrum load_spectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_spectrum: cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("load_spectrum: parse failure in '" + path + "': " + e.what());
  }
  return parse_spectrum(doc);
}

nlohmann::json spectrum_to_json(const Spectrum& spec) {
  nlohmann::json doc;
  auto& modes = doc["modes"] = nlohmann::json::array();
  for (const auto& lam : spec.modes) modes.push_back({lam.real(), lam.imag()});
  if (!spec.family.empty()) {
    doc["family"] = spec.family;
    doc["params"] = spec.params;
  }
  doc["invertible"] = spec.invertible;
  return doc;
}

std::complex<double> eval_weight(const OperatorSymbol& sym, std::complex<double> lambda) {
  if (!(lambda.real() < 0.0)) {
    throw std::invalid_argument("eval_weight: requires Re lambda < 0");
  }
  std::complex<double> w = 1.0;
  if (sym.a != 0.0) w *= std::exp(-sym.a * std::log(-lambda));
  if (sym.b != 0.0) w *= std::exp(-sym.b * std::log(1.0 - lambda));
  return w;
}

double abs_weight(const OperatorSymbol& sym, std::complex<double> lambda) {
  if (!(lambda.real() < 0.0)) {
    throw std::invalid_argument("abs_weight: requires Re lambda < 0");
  }
  double w = 1.0;
  if (sym.a != 0.0) w *= std::exp(-sym.a * std::log(std::abs(lambda)));
  if (sym.b != 0.0) w *= std::exp(-sym.b * std::log(std::abs(1.0 - lambda)));
  return w;
}

}  // namespace specdecay
