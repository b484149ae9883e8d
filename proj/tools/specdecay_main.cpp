// specdecay_main.cpp — CLI mapping commands to the library's calculators and
// emitting deterministic JSON/CSV reports on stdout.
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specdecay/admissibility.hpp"
#include "specdecay/calculus.hpp"
#include "specdecay/carleson.hpp"
#include "specdecay/certificates.hpp"
#include "specdecay/rates.hpp"
#include "specdecay/report.hpp"
#include "specdecay/search.hpp"
#include "specdecay/spectra.hpp"
#include "specdecay/util.hpp"

namespace {

using nlohmann::json;
using namespace specdecay;

struct GlobalOptions {
  std::size_t nmax = 10000;
  double tol = 1e-10;
  std::string out = "json";
  std::uint64_t seed = 1;
};

struct SpectrumOptions {
  std::string family;
  std::string params;  // comma-separated
  std::string file;
};

std::vector<double> parse_csv_doubles(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("cli: malformed number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "--symbol a=1,b=0.5" -> OperatorSymbol{1, 0.5}.
OperatorSymbol parse_symbol(const std::string& s) {
  OperatorSymbol sym;
  if (s.empty()) return sym;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("cli: symbol expects a=<num>[,b=<num>], got '" + s + "'");
    }
    const std::string key = item.substr(0, eq);
    const double value = std::stod(item.substr(eq + 1));
    if (key == "a") {
      sym.a = value;
    } else if (key == "b") {
      sym.b = value;
    } else {
      throw std::invalid_argument("cli: unknown symbol parameter '" + key + "'");
    }
  }
  return sym;
}

Spectrum resolve_spectrum(const SpectrumOptions& so, const GlobalOptions& go) {
  if (!so.file.empty()) return load_spectrum(so.file);
  if (so.family.empty()) {
    throw std::invalid_argument("cli: provide --family or --spectrum FILE");
  }
  return builtin_family(so.family, parse_csv_doubles(so.params), go.nmax);
}

void add_spectrum_options(CLI::App* cmd, SpectrumOptions& so) {
  cmd->add_option("--family", so.family, "builtin family: example33|logdecay|single|powerlaw");
  cmd->add_option("--params", so.params, "family parameters, comma-separated");
  cmd->add_option("--spectrum", so.file, "spectrum document (JSON) path");
}

json spectrum_inputs(const Spectrum& spec, const OperatorSymbol& sym) {
  return json{{"family", spec.family.empty() ? "custom" : spec.family},
              {"n_max", spec.n_max()},
              {"symbol", {{"a", sym.a}, {"b", sym.b}}}};
}

json truncation_block(std::size_t n_max, bool divergent) {
  return json{{"n_max", n_max}, {"tenth", tenth_count(n_max)}, {"divergent", divergent}};
}

void emit(const RunReport& report, const GlobalOptions& go) {
  if (go.out == "csv") {
    std::cout << report_to_csv(report);
  } else {
    std::cout << to_json(report).dump(2) << '\n';
  }
}

void emit_curve(const RunReport& report, const GlobalOptions& go, const std::string& xname,
                const std::string& yname,
                std::span<const std::pair<double, double>> curve) {
  if (go.out == "csv") {
    std::cout << curve_to_csv(xname, yname, curve);
  } else {
    std::cout << to_json(report).dump(2) << '\n';
  }
}

int run(int argc, char** argv) {
  CLI::App app{"numerical laboratory for diagonal semigroup decay, resolvent bounds, "
               "and admissibility constants"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions go;
  app.add_option("--nmax", go.nmax, "modes for builtin families")->capture_default_str();
  app.add_option("--tol", go.tol, "quadrature relative tolerance")->capture_default_str();
  app.add_option("--out", go.out, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", go.seed, "seed for random test vectors")->capture_default_str();

  // ---- spectrum validate|show ----
  auto* spectrum_cmd = app.add_subcommand("spectrum", "inspect or validate a spectrum");
  spectrum_cmd->require_subcommand(1);
  SpectrumOptions spec_so;
  auto* validate_cmd = spectrum_cmd->add_subcommand("validate", "check mode constraints");
  add_spectrum_options(validate_cmd, spec_so);
  validate_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(spec_so, go);
    validate_spectrum(spec);
    RunReport rep;
    rep.command = "spectrum validate";
    rep.inputs = spectrum_inputs(spec, {});
    rep.outputs = {{"valid", true}, {"n_max", spec.n_max()}, {"invertible", spec.invertible}};
    rep.truncation = truncation_block(spec.n_max(), false);
    emit(rep, go);
  });
  auto* show_cmd = spectrum_cmd->add_subcommand("show", "print modes and metadata");
  add_spectrum_options(show_cmd, spec_so);
  std::size_t show_limit = 16;
  show_cmd->add_option("--limit", show_limit, "modes to print")->capture_default_str();
  show_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(spec_so, go);
    RunReport rep;
    rep.command = "spectrum show";
    rep.inputs = spectrum_inputs(spec, {});
    json doc = spectrum_to_json(spec);
    if (doc["modes"].size() > show_limit) {
      json trimmed = json::array();
      for (std::size_t i = 0; i < show_limit; ++i) trimmed.push_back(doc["modes"][i]);
      doc["modes"] = trimmed;
      doc["modes_shown"] = show_limit;
    }
    rep.outputs = doc;
    rep.truncation = truncation_block(spec.n_max(), false);
    emit(rep, go);
  });

  // ---- decay ----
  auto* decay_cmd = app.add_subcommand("decay", "norm curve of the weighted semigroup");
  SpectrumOptions decay_so;
  add_spectrum_options(decay_cmd, decay_so);
  std::string decay_symbol = "a=1";
  double decay_tmin = 1.0, decay_tmax = 1e3;
  double decay_ppd = 40.0;
  std::string decay_fit = "none";
  decay_cmd->add_option("--symbol", decay_symbol, "weight d(lambda), e.g. a=1,b=0")
      ->capture_default_str();
  decay_cmd->add_option("--tmin", decay_tmin)->capture_default_str();
  decay_cmd->add_option("--tmax", decay_tmax)->capture_default_str();
  decay_cmd->add_option("--points-per-decade", decay_ppd)->capture_default_str();
  decay_cmd->add_option("--fit", decay_fit, "fit a decay law to the curve")
      ->check(CLI::IsMember({"none", "poly", "polylog"}));
  decay_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(decay_so, go);
    const OperatorSymbol sym = parse_symbol(decay_symbol);
    const auto grid = log_grid(decay_tmin, decay_tmax, decay_ppd);
    const auto curve = decay_curve(spec, sym, grid);
    RunReport rep;
    rep.command = "decay";
    rep.inputs = spectrum_inputs(spec, sym);
    rep.inputs["t_range"] = {decay_tmin, decay_tmax};
    rep.outputs["curve"] = curve_to_json("t", "norm", curve);
    rep.outputs["curve"]["method"] = "closed-form";
    if (decay_fit != "none") {
      const auto model =
          fit_rate(curve, decay_fit == "poly" ? FitKind::poly : FitKind::polylog);
      rep.outputs["fit"] = to_json(model);
    }
    rep.truncation = truncation_block(spec.n_max(), false);
    emit_curve(rep, go, "t", "norm", curve);
  });

  // ---- resolvent-profile ----
  auto* prof_cmd = app.add_subcommand("resolvent-profile",
                                      "sup over eta of the weighted resolvent, per xi");
  SpectrumOptions prof_so;
  add_spectrum_options(prof_cmd, prof_so);
  std::string prof_symbol = "a=0";
  double prof_ximin = 1e-4, prof_ximax = 10.0, prof_ppd = 40.0;
  prof_cmd->add_option("--symbol", prof_symbol)->capture_default_str();
  prof_cmd->add_option("--ximin", prof_ximin)->capture_default_str();
  prof_cmd->add_option("--ximax", prof_ximax)->capture_default_str();
  prof_cmd->add_option("--points-per-decade", prof_ppd)->capture_default_str();
  prof_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(prof_so, go);
    const OperatorSymbol sym = parse_symbol(prof_symbol);
    const auto grid = log_grid(prof_ximin, prof_ximax, prof_ppd);
    const auto curve = resolvent_profile(spec, sym, grid);
    RunReport rep;
    rep.command = "resolvent-profile";
    rep.inputs = spectrum_inputs(spec, sym);
    rep.inputs["xi_range"] = {prof_ximin, prof_ximax};
    rep.outputs["profile"] = curve_to_json("xi", "g", curve);
    rep.outputs["profile"]["method"] = "closed-form";
    rep.truncation = truncation_block(spec.n_max(), false);
    emit_curve(rep, go, "xi", "g", curve);
  });

  // ---- weiss ----
  auto* weiss_cmd = app.add_subcommand("weiss", "p-Weiss constant, exact and grid oracle");
  SpectrumOptions weiss_so;
  add_spectrum_options(weiss_cmd, weiss_so);
  std::string weiss_symbol = "a=0.5";
  double weiss_p = 2.0;
  weiss_cmd->add_option("--symbol", weiss_symbol)->capture_default_str();
  weiss_cmd->add_option("--p", weiss_p)->capture_default_str();
  weiss_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(weiss_so, go);
    const OperatorSymbol sym = parse_symbol(weiss_symbol);
    const WeissReport wr = weiss_constant(spec, sym, weiss_p);
    RunReport rep;
    rep.command = "weiss";
    rep.inputs = spectrum_inputs(spec, sym);
    rep.inputs["p"] = weiss_p;
    rep.outputs = to_json(wr);
    rep.truncation = truncation_block(spec.n_max(), divergent_by_truncation(wr.k_exact));
    if (wr.p1_boundary) {
      rep.warnings.push_back(
          "p = 1: the per-mode supremum is approached only as Re lambda -> 0");
    }
    emit(rep, go);
  });

  // ---- admissibility ----
  auto* adm_cmd = app.add_subcommand("admissibility", "infinite-horizon constant");
  SpectrumOptions adm_so;
  add_spectrum_options(adm_cmd, adm_so);
  std::string adm_symbol = "a=0.5";
  double adm_p = 2.0, adm_q = 2.0;
  double adm_alpha = 0.0;
  double adm_t1 = std::numeric_limits<double>::infinity();
  adm_cmd->add_option("--symbol", adm_symbol, "weight for the p=2 closed form")
      ->capture_default_str();
  adm_cmd->add_option("--p", adm_p)->capture_default_str();
  adm_cmd->add_option("--q", adm_q, "sequence-space exponent (Jensen-chain path)")
      ->capture_default_str();
  adm_cmd->add_option("--alpha", adm_alpha,
                      "smoothing order: switches to the Jensen-chain bound for (-A)^(-alpha/p)");
  adm_cmd->add_option("--t1", adm_t1, "horizon (default infinite)");
  adm_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(adm_so, go);
    RunReport rep;
    rep.command = "admissibility";
    AdmissibilityReport ar;
    if (adm_alpha > 0.0) {
      WeightedIndexSpace space;
      space.q = adm_q;
      ar = lp_admissibility(spec, space, adm_alpha, adm_p, adm_t1);
      rep.inputs = spectrum_inputs(spec, {});
      rep.inputs.erase("symbol");
      rep.inputs["alpha"] = adm_alpha;
      rep.inputs["p"] = adm_p;
      rep.inputs["q"] = adm_q;
    } else {
      if (adm_p != 2.0) {
        throw std::invalid_argument(
            "cli: p != 2 needs --alpha (the Jensen-chain bound); the symbol closed form is p=2");
      }
      const OperatorSymbol sym = parse_symbol(adm_symbol);
      ar = l2_admissibility_constant(spec, sym);
      rep.inputs = spectrum_inputs(spec, sym);
    }
    rep.outputs = to_json(ar);
    rep.truncation = truncation_block(spec.n_max(), ar.divergent);
    if (ar.divergent) {
      rep.warnings.push_back("constant grows between truncations: reported value is a "
                             "lower bound and the supremum is likely infinite");
    }
    emit(rep, go);
  });

  // ---- finite-admissibility ----
  auto* ft_cmd = app.add_subcommand("finite-admissibility", "finite-horizon constant");
  SpectrumOptions ft_so;
  add_spectrum_options(ft_cmd, ft_so);
  std::string ft_symbol = "a=0";
  double ft_p = 2.0, ft_t1 = 1.0;
  ft_cmd->add_option("--symbol", ft_symbol)->capture_default_str();
  ft_cmd->add_option("--p", ft_p)->capture_default_str();
  ft_cmd->add_option("--t1", ft_t1)->capture_default_str();
  ft_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(ft_so, go);
    const OperatorSymbol sym = parse_symbol(ft_symbol);
    const AdmissibilityReport ar = finite_time_constant(spec, sym, ft_p, ft_t1);
    RunReport rep;
    rep.command = "finite-admissibility";
    rep.inputs = spectrum_inputs(spec, sym);
    rep.inputs["p"] = ft_p;
    rep.inputs["t1"] = ft_t1;
    rep.outputs = to_json(ar);
    rep.truncation = truncation_block(spec.n_max(), ar.divergent);
    emit(rep, go);
  });

  // ---- plancherel ----
  auto* pl_cmd = app.add_subcommand("plancherel", "time-side vs frequency-side energy");
  SpectrumOptions pl_so;
  add_spectrum_options(pl_cmd, pl_so);
  double pl_xi = 1.0;
  std::string pl_x;
  std::size_t pl_random = 0;
  pl_cmd->add_option("--xi", pl_xi, "half-plane abscissa, > 0")->capture_default_str();
  pl_cmd->add_option("--x", pl_x, "real coefficients, comma-separated (default e_1)");
  pl_cmd->add_option("--random", pl_random, "use a random unit vector of this dimension");
  pl_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(pl_so, go);
    std::vector<std::complex<double>> x;
    if (pl_random > 0) {
      Rng rng(go.seed);
      x = rng.unit_vector(pl_random);
    } else if (!pl_x.empty()) {
      for (const double v : parse_csv_doubles(pl_x)) x.emplace_back(v, 0.0);
    } else {
      x = {1.0};
    }
    QuadratureSpec quad;
    quad.rel_tol = go.tol;
    const PlancherelReport pr = plancherel_check(spec, x, pl_xi, quad);
    RunReport rep;
    rep.command = "plancherel";
    rep.inputs = spectrum_inputs(spec, {});
    rep.inputs.erase("symbol");
    rep.inputs["xi"] = pl_xi;
    rep.inputs["dim"] = x.size();
    rep.outputs = to_json(pr);
    rep.truncation = truncation_block(spec.n_max(), false);
    emit(rep, go);
  });

  // ---- lemma43 ----
  auto* lem_cmd = app.add_subcommand("lemma43", "integral-bound constants, optional check");
  double lem_beta = 0.0, lem_gamma = 0.0, lem_t0 = 2.0;
  std::size_t lem_verify = 0;
  lem_cmd->add_option("--beta", lem_beta)->capture_default_str();
  lem_cmd->add_option("--gamma", lem_gamma)->capture_default_str();
  lem_cmd->add_option("--t0", lem_t0)->capture_default_str();
  lem_cmd->add_option("--verify", lem_verify, "check the bound on this many xi points");
  lem_cmd->callback([&] {
    const Lemma43Constants consts = lemma43_constant(lem_beta, lem_gamma, lem_t0);
    RunReport rep;
    rep.command = "lemma43";
    rep.inputs = {{"beta", lem_beta}, {"gamma", lem_gamma}, {"t0", lem_t0}};
    rep.outputs = to_json(consts);
    if (!consts.note.empty()) rep.warnings.push_back(consts.note);
    if (lem_verify > 0) {
      QuadratureSpec quad;
      quad.rel_tol = go.tol;
      const auto grid =
          log_grid_n(1e-6 / lem_t0, 0.99 / lem_t0, std::max<std::size_t>(lem_verify, 2));
      const double worst = verify_lemma43(lem_beta, lem_gamma, lem_t0, grid, quad);
      rep.outputs["worst_ratio"] = tagged(worst, "oracle");
      rep.outputs["verified"] = (worst <= 1.0);
    }
    emit(rep, go);
  });

  // ---- thm44-check ----
  auto* thm_cmd = app.add_subcommand("thm44-check",
                                     "two-sided boundedness of weighted decay and profile");
  SpectrumOptions thm_so;
  add_spectrum_options(thm_cmd, thm_so);
  std::string thm_symbol = "a=1";
  double thm_beta = 0.0, thm_gamma = 1.0, thm_threshold = 0.02;
  thm_cmd->add_option("--symbol", thm_symbol)->capture_default_str();
  thm_cmd->add_option("--beta", thm_beta)->capture_default_str();
  thm_cmd->add_option("--gamma", thm_gamma)->capture_default_str();
  thm_cmd->add_option("--threshold", thm_threshold)->capture_default_str();
  thm_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(thm_so, go);
    const OperatorSymbol sym = parse_symbol(thm_symbol);
    const Thm44Report tr = check_thm44(spec, sym, thm_beta, thm_gamma, thm_threshold);
    RunReport rep;
    rep.command = "thm44-check";
    rep.inputs = spectrum_inputs(spec, sym);
    rep.inputs["beta"] = thm_beta;
    rep.inputs["gamma"] = thm_gamma;
    rep.outputs = to_json(tr);
    rep.truncation = truncation_block(spec.n_max(), !tr.bounded_decay);
    if (!tr.consistent) {
      rep.warnings.push_back("decay and resolvent sides disagree on boundedness");
    }
    emit(rep, go);
  });

  // ---- carleson ----
  auto* car_cmd = app.add_subcommand("carleson", "box-ratio scan for the measure criterion");
  SpectrumOptions car_so;
  add_spectrum_options(car_cmd, car_so);
  double car_weiss_a = 0.5, car_gram_alpha = 0.5;
  int car_jmax = 20;
  std::string car_columns;
  car_cmd->add_option("--a", car_weiss_a, "weight exponent matched by the default columns")
      ->capture_default_str();
  car_cmd->add_option("--gram-alpha", car_gram_alpha, "exponent in the box Gram scaling")
      ->capture_default_str();
  car_cmd->add_option("--jmax", car_jmax, "dyadic box sizes per anchor")->capture_default_str();
  car_cmd->add_option("--columns", car_columns, "dense column family document (JSON)");
  car_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(car_so, go);
    ColumnFamily cols = car_columns.empty()
                            ? weiss_matched_columns(spec, car_weiss_a)
                            : [&] {
                                std::ifstream in(car_columns);
                                if (!in) {
                                  throw std::invalid_argument("cli: cannot open column file '" +
                                                              car_columns + "'");
                                }
                                json doc = json::parse(in);
                                return parse_column_family(doc);
                              }();
    SamplerPolicy policy;
    policy.j_max = car_jmax;
    const CarlesonScan scan = carleson_constant(spec, cols, car_gram_alpha, policy);
    RunReport rep;
    rep.command = "carleson";
    rep.inputs = spectrum_inputs(spec, {});
    rep.inputs.erase("symbol");
    rep.inputs["gram_alpha"] = car_gram_alpha;
    rep.inputs["j_max"] = car_jmax;
    rep.inputs["columns"] = car_columns.empty()
                                ? json("diagonal |lambda|^(-a-1/2), a=" +
                                       json(car_weiss_a).dump())
                                : json(car_columns);
    rep.outputs = to_json(scan);
    rep.truncation = truncation_block(scan.n_max, scan.divergent);
    if (scan.divergent) {
      rep.warnings.push_back("box ratios grow between truncations: the scan lower bound "
                             "indicates an unbounded Carleson constant");
    }
    emit(rep, go);
  });

  // ---- certificate ----
  auto* cert_cmd = app.add_subcommand("certificate",
                                      "admissibility constant chain from measured inputs");
  SpectrumOptions cert_so;
  add_spectrum_options(cert_cmd, cert_so);
  double cert_alpha = 0.75, cert_beta = 0.75, cert_t0 = 10.0, cert_thi = 1e8;
  cert_cmd->add_option("--alpha", cert_alpha)->capture_default_str();
  cert_cmd->add_option("--beta", cert_beta)->capture_default_str();
  cert_cmd->add_option("--t0", cert_t0)->capture_default_str();
  cert_cmd->add_option("--t-hi", cert_thi, "measurement horizon")->capture_default_str();
  cert_cmd->callback([&] {
    const Spectrum spec = resolve_spectrum(cert_so, go);
    const auto weights = tempered_observer(spec, cert_alpha);
    const CertificateInputs inputs =
        measure_certificate_inputs(spec, weights, cert_alpha, cert_beta, cert_t0, cert_thi);
    const Certificate cert = theorem54_certificate(inputs);
    const AdmissibilityReport exact = l2_admissibility_constant(spec, weights);
    RunReport rep;
    rep.command = "certificate";
    rep.inputs = spectrum_inputs(spec, {});
    rep.inputs.erase("symbol");
    rep.inputs["alpha"] = cert_alpha;
    rep.inputs["beta"] = cert_beta;
    rep.inputs["t0"] = cert_t0;
    rep.inputs["observer"] = "|lambda|^(-alpha) sqrt(|Re lambda|)";
    rep.outputs["certificate"] = to_json(cert);
    rep.outputs["exact_l2"] = to_json(exact);
    rep.outputs["sound"] = (cert.m_adm >= exact.m.value);
    rep.truncation = truncation_block(spec.n_max(), exact.divergent);
    emit(rep, go);
  });

  // ---- prop56 ----
  auto* p56_cmd = app.add_subcommand("prop56", "decay constant from the semigroup split");
  double p56_m1 = 1.0, p56_m2 = 1.0, p56_beta = 1.0;
  p56_cmd->add_option("--m1", p56_m1)->capture_default_str();
  p56_cmd->add_option("--m2", p56_m2)->capture_default_str();
  p56_cmd->add_option("--beta", p56_beta)->capture_default_str();
  p56_cmd->callback([&] {
    const double m = prop56_constant(p56_m1, p56_m2, p56_beta);
    RunReport rep;
    rep.command = "prop56";
    rep.inputs = {{"m1", p56_m1}, {"m2", p56_m2}, {"beta", p56_beta}};
    rep.outputs = {{"m", tagged(m, "closed-form")},
                   {"envelope", "m / sqrt(t^(1+beta))"}};
    emit(rep, go);
  });

  // ---- prop57 ----
  auto* p57_cmd = app.add_subcommand("prop57", "interpolated 2-Weiss constant");
  SpectrumOptions p57_so;
  add_spectrum_options(p57_cmd, p57_so);
  double p57_m1 = 1.0, p57_m2 = 1.0, p57_alpha = 1.0, p57_beta = 1.0, p57_c = 1.0;
  std::size_t p57_calibrate = 0;
  p57_cmd->add_option("--m1", p57_m1)->capture_default_str();
  p57_cmd->add_option("--m2", p57_m2)->capture_default_str();
  p57_cmd->add_option("--alpha", p57_alpha)->capture_default_str();
  p57_cmd->add_option("--beta", p57_beta)->capture_default_str();
  p57_cmd->add_option("--c-moment", p57_c, "moment-inequality constant")->capture_default_str();
  p57_cmd->add_option("--calibrate", p57_calibrate,
                      "random trials for the diagonal calibration oracle (needs a spectrum)");
  p57_cmd->callback([&] {
    RunReport rep;
    rep.command = "prop57";
    double c_moment = p57_c;
    const double gamma = p57_alpha * p57_beta / (1.0 + p57_beta);
    if (p57_calibrate > 0) {
      const Spectrum spec = resolve_spectrum(p57_so, go);
      c_moment = calibrate_moment_constant(spec, p57_alpha, gamma, p57_calibrate, go.seed);
      rep.outputs["c_moment_calibrated"] = tagged(c_moment, "oracle");
    }
    const Prop57Result res = prop57_constants(p57_m1, p57_m2, p57_alpha, p57_beta, c_moment);
    rep.inputs = {{"m1", p57_m1},
                  {"m2", p57_m2},
                  {"alpha", p57_alpha},
                  {"beta", p57_beta},
                  {"c_moment", c_moment}};
    rep.outputs.update(to_json(res));
    emit(rep, go);
  });

  // ---- example33 ----
  auto* ex_cmd = app.add_subcommand(
      "example33", "one-shot reproduction: decay optimality, Weiss and admissibility thresholds");
  ex_cmd->callback([&] {
    const Spectrum spec = builtin_family("example33", {}, go.nmax);
    RunReport rep;
    rep.command = "example33";
    rep.inputs = {{"family", "example33"}, {"n_max", spec.n_max()}};

    // Decay optimality for the weight (-lambda)^{-1}: sup_t t*norm(t) vs 1/e.
    const OperatorSymbol inv{1.0, 0.0};
    const ModeTable table(spec, inv);
    const auto scaled = [&](double t) { return t * table.semigroup_sup(t).value; };
    GridPolicy grid;
    grid.points = 2048;
    const SupSearchResult sup = sup_search(scaled, 1e-3, 200.0, grid);
    double integer_best = 0.0;
    std::size_t integer_argmax = 0;
    for (std::size_t n = 1; n <= 200; ++n) {
      const double v = scaled(static_cast<double>(n));
      if (v > integer_best) {
        integer_best = v;
        integer_argmax = n;
      }
    }
    rep.outputs["decay_optimality"] = {
        {"sup_t_times_norm", tagged(sup.value, "oracle")},
        {"argmax_t", sup.argmax},
        {"max_over_integer_t", tagged(integer_best, "closed-form")},
        {"argmax_integer_t", integer_argmax},
        {"upper_limit", 0.36787944117144233}};

    // Weiss threshold across the exponent 1/2.
    for (const double a : {0.4, 0.5, 0.6}) {
      const WeissReport wr = weiss_constant(spec, OperatorSymbol{a, 0.0}, 2.0);
      const std::string key = "weiss_a=" + json(a).dump();
      rep.outputs[key] = {{"k_exact", wr.k_exact.value},
                          {"k_exact_tenth", wr.k_exact.value_tenth},
                          {"divergent", divergent_by_truncation(wr.k_exact)}};
    }

    // Admissibility threshold at the same exponents.
    for (const double a : {0.4, 0.5, 0.6}) {
      const AdmissibilityReport ar = l2_admissibility_constant(spec, OperatorSymbol{a, 0.0});
      const std::string key = "l2_a=" + json(a).dump();
      rep.outputs[key] = {{"m_exact", ar.m.value},
                          {"m_exact_tenth", ar.m.value_tenth},
                          {"divergent", ar.divergent}};
    }
    rep.truncation = truncation_block(spec.n_max(), false);
    emit(rep, go);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return 1;
  }
}
