#include "specdecay/report.hpp"

#include <cmath>
#include <limits>

namespace specdecay {

using nlohmann::json;

namespace {

// JSON has no infinity; serialize horizons and divergent values as strings.
json num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

}  // namespace

json tagged(double value, const char* method) {
  return json{{"value", num(value)}, {"method", method}};
}

json to_json(const SupOverModes& s) {
  return json{{"value", num(s.value)},
              {"argmax", s.argmax},
              {"value_tenth", num(s.value_tenth)},
              {"argmax_tenth", s.argmax_tenth}};
}

json to_json(const WeissReport& r) {
  json j = to_json(r.k_exact);
  j["method"] = "closed-form";
  return json{{"p", r.p},
              {"k_exact", std::move(j)},
              {"k_grid", tagged(r.k_grid, "oracle")},
              {"k_grid_tenth", tagged(r.k_grid_tenth, "oracle")},
              {"n_max", r.n_max},
              {"p1_boundary", r.p1_boundary},
              {"family", r.family}};
}

json to_json(const AdmissibilityReport& r) {
  json m = to_json(r.m);
  m["method"] = r.exact ? "closed-form" : "closed-form-upper-bound";
  json j{{"p", r.p},         {"q", r.q},
         {"alpha", r.alpha}, {"m", std::move(m)},
         {"t1", num(r.t1)},  {"n_max", r.n_max},
         {"divergent", r.divergent}, {"exact", r.exact},
         {"family", r.family}};
  if (r.m_oracle) j["m_oracle"] = tagged(*r.m_oracle, "oracle");
  return j;
}

json to_json(const PlancherelReport& r) {
  return json{{"lhs", tagged(r.lhs, "oracle")},
              {"rhs", tagged(r.rhs, "oracle")},
              {"gap", num(r.gap)},
              {"closed_form", tagged(r.closed_form, "closed-form")}};
}

json to_json(const RateModel& r) {
  json j{{"kind", r.kind == FitKind::poly ? "poly" : "polylog"},
         {"beta", num(r.beta)},
         {"gamma", num(r.gamma)},
         {"fit_window", json::array({num(r.t_lo), num(r.t_hi)})},
         {"residual", num(r.residual)},
         {"method", "oracle"}};
  if (r.alt_inv_alpha) j["inv_alpha"] = num(*r.alt_inv_alpha);
  return j;
}

json to_json(const Lemma43Constants& r) {
  json j{{"m", tagged(r.m, "closed-form")},
         {"m0", num(r.m0)},
         {"r", num(r.r)},
         {"boundary", r.boundary}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const Thm44Report& r) {
  const auto side = [](const WindowedSup& w, double growth, bool bounded) {
    return json{{"sup_full", num(w.full)},
                {"sup_inner", num(w.inner)},
                {"growth", num(growth)},
                {"bounded", bounded}};
  };
  return json{{"beta", r.beta},
              {"gamma", r.gamma},
              {"threshold", r.threshold},
              {"resolvent", side(r.resolvent, r.growth_resolvent, r.bounded_resolvent)},
              {"decay", side(r.decay, r.growth_decay, r.bounded_decay)},
              {"consistent", r.consistent},
              {"n_max", r.n_max},
              {"family", r.family},
              {"method", "closed-form"}};
}

json to_json(const CarlesonScan& r) {
  const auto box = [](const CarlesonBox& b) {
    return json{{"h", num(b.h)}, {"omega", num(b.omega)}};
  };
  return json{{"m_hat", tagged(r.m_hat, r.method.c_str())},
              {"worst_box", box(r.worst)},
              {"m_hat_tenth", tagged(r.m_hat_tenth, r.method.c_str())},
              {"worst_box_tenth", box(r.worst_tenth)},
              {"boxes", r.boxes},
              {"divergent", r.divergent},
              {"alpha", r.alpha},
              {"n_max", r.n_max},
              {"family", r.family}};
}

json to_json(const Certificate& r) {
  return json{{"inputs",
               {{"alpha", r.inputs.alpha},
                {"beta", r.inputs.beta},
                {"m0", num(r.inputs.m0)},
                {"t0", num(r.inputs.t0)},
                {"c", num(r.inputs.c)},
                {"k", num(r.inputs.k)}}},
              {"m1", num(r.m1)},
              {"m2", num(r.m2)},
              {"tau1", num(r.tau1)},
              {"tau2", num(r.tau2)},
              {"mu", r.mu},
              {"m_index", r.m_index},
              {"tau_m", num(r.tau_m)},
              {"series", num(r.series)},
              {"m3", num(r.m3)},
              {"m_ft_at_tau_m", num(r.m_ft_at_tau_m)},
              {"m_adm", tagged(r.m_adm, "closed-form")}};
}

json to_json(const Prop57Result& r) {
  return json{{"gamma", num(r.gamma)},
              {"m3", num(r.m3)},
              {"k_weiss", tagged(r.k_weiss, "closed-form")}};
}

json to_json(const RunReport& r) {
  return json{{"command", r.command},
              {"inputs", r.inputs},
              {"outputs", r.outputs},
              {"truncation", r.truncation},
              {"warnings", r.warnings}};
}

json curve_to_json(const std::string& xname, const std::string& yname,
                   std::span<const std::pair<double, double>> curve) {
  json points = json::array();
  for (const auto& [x, y] : curve) points.push_back(json::array({num(x), num(y)}));
  return json{{"x", xname}, {"y", yname}, {"points", std::move(points)}};
}

namespace {

std::string format_number(double v) { return json(num(v)).dump(); }

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      return quoted;
    }
    return s;
  }
  return v.dump();
}

void flatten(const json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    }
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& value : node) {
      flatten(value, prefix + "." + std::to_string(i++), rows);
    }
  } else {
    rows.emplace_back(prefix, csv_cell(node));
  }
}

}  // namespace

std::string curve_to_csv(const std::string& xname, const std::string& yname,
                         std::span<const std::pair<double, double>> curve) {
  std::string out = xname + "," + yname + "\n";
  for (const auto& [x, y] : curve) {
    out += format_number(x);
    out += ',';
    out += format_number(y);
    out += '\n';
  }
  return out;
}

std::string report_to_csv(const RunReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", r.command);
  flatten(r.inputs, "inputs", rows);
  flatten(r.outputs, "outputs", rows);
  flatten(r.truncation, "truncation", rows);
  for (std::size_t i = 0; i < r.warnings.size(); ++i) {
    rows.emplace_back("warnings." + std::to_string(i), csv_cell(json(r.warnings[i])));
  }
  std::string out = "key,value\n";
  for (const auto& [k, v] : rows) {
    out += k;
    out += ',';
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace specdecay
