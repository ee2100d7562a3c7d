#pragma once

// JSON schema 1 for configurations and structures.
//
//   {
//     "schema": 1,
//     "genus": 2,
//     "holonomy": "rho",
//     "charts": ["b1"],
//     "exterior_crossings": [["alpha", "delta"]],
//     "curves": [{"label": "lam", "charts": {"b1": [2, 0]}, "multiplicity": 1}],
//     "gamma": {"label": "gam", "charts": {"b1": [1, 0]}},
//     "extra_grafts": [{"label": "delta"}]
//   }
//
// "curves" are the real curves of the seed structure. "gamma" is the base
// grafting curve. Labels may be composite ("gam^2+lam"). Missing
// "multiplicity" means 1, missing "charts" means the curve avoids all charts.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "projgraft/errors.hpp"
#include "projgraft/surface.hpp"

namespace projgraft {

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline std::int64_t json_int(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_integer()) throw SchemaError(what + " must be an integer");
  return j.get<std::int64_t>();
}

inline CurveComponent curve_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_object()) throw SchemaError(what + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (k != "label" && k != "charts" && k != "multiplicity") throw SchemaError(what + ": unknown field '" + k + "'");
  }
  CurveComponent c;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw SchemaError(what + ".label must be a string");
    c.word = parse_word(j["label"].get<std::string>());
  }
  if (j.contains("charts")) {
    if (!j["charts"].is_object()) throw SchemaError(what + ".charts must be an object");
    for (const auto& [name, pair] : j["charts"].items()) {
      if (!pair.is_array() || pair.size() != 2) throw SchemaError(what + ".charts." + name + " must be [p, q]");
      c.charts[name] = {json_int(pair[0], what + ".charts." + name), json_int(pair[1], what + ".charts." + name)};
    }
  }
  c.multiplicity = j.contains("multiplicity") ? json_int(j["multiplicity"], what + ".multiplicity") : 1;
  return c;
}

}  // namespace detail

inline nlohmann::json curve_to_json(const CurveComponent& c) {
  nlohmann::json j{{"label", c.label()}, {"multiplicity", c.multiplicity}};
  nlohmann::json charts = nlohmann::json::object();
  for (const auto& [name, cls] : c.charts) charts[name] = {cls.p, cls.q};
  j["charts"] = std::move(charts);
  return j;
}

inline SurfaceModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("configuration must be a JSON object");
  if (!j.contains("schema")) throw SchemaError("missing \"schema\" field");
  if (detail::json_int(j["schema"], "schema") != kSchemaVersion) {
    throw SchemaError("unsupported schema version " + j["schema"].dump() + ", expected 1");
  }
  SurfaceModel m;
  if (!j.contains("genus")) throw SchemaError("missing \"genus\" field");
  m.genus = static_cast<int>(detail::json_int(j["genus"], "genus"));
  if (j.contains("holonomy")) {
    if (!j["holonomy"].is_string()) throw SchemaError("holonomy must be a string");
    m.holonomy = j["holonomy"].get<std::string>();
  }
  if (!j.contains("charts") || !j["charts"].is_array()) throw SchemaError("\"charts\" must be a list of names");
  for (const auto& c : j["charts"]) {
    if (!c.is_string()) throw SchemaError("chart names must be strings");
    m.charts.push_back(c.get<std::string>());
  }
  if (j.contains("exterior_crossings")) {
    for (const auto& pair : j["exterior_crossings"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw SchemaError("exterior_crossings entries must be pairs of labels");
      }
      m.add_crossing(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return m;
}

inline CurveComponent curve_from_json(const nlohmann::json& j) { return detail::curve_from_json(j, "curve"); }

inline std::vector<CurveComponent> curves_from_json(const nlohmann::json& j, const std::string& field) {
  std::vector<CurveComponent> out;
  if (!j.contains(field)) return out;
  if (!j[field].is_array()) throw SchemaError("\"" + field + "\" must be a list");
  for (std::size_t i = 0; i < j[field].size(); ++i) {
    out.push_back(detail::curve_from_json(j[field][i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline CheckedConfiguration config_from_json(const nlohmann::json& j) {
  SurfaceModel model = model_from_json(j);
  if (!j.contains("curves")) throw SchemaError("missing \"curves\" field");
  if (!j.contains("gamma")) throw SchemaError("missing \"gamma\" field");
  return validate_configuration(std::move(model), curves_from_json(j, "curves"), detail::curve_from_json(j["gamma"], "gamma"),
                                curves_from_json(j, "extra_grafts"));
}

inline nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

inline CheckedConfiguration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(parse_json_text(ss.str()));
}

inline nlohmann::json structure_to_json(const Structure& s) {
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : s.real_curves().components) curves.push_back(curve_to_json(c));
  return {{"schema", kSchemaVersion},
          {"holonomy", s.holonomy()},
          {"key", s.key()},
          {"digest", digest(s.key())},
          {"curves", std::move(curves)}};
}

/// Command-line curve syntax: label[@chart=p,q]...[:mult], e.g. "gam@b1=1,-1".
inline CurveComponent parse_curve_spec(const std::string& spec) {
  std::string body = spec;
  CurveComponent c;
  if (const auto colon = body.rfind(':'); colon != std::string::npos) {
    const std::string mult = body.substr(colon + 1);
    try {
      std::size_t used = 0;
      c.multiplicity = std::stoll(mult, &used);
      if (used != mult.size()) throw std::invalid_argument("mult");
    } catch (const std::exception&) {
      throw SchemaError("bad multiplicity in curve spec '" + spec + "'");
    }
    body = body.substr(0, colon);
  }
  std::vector<std::string> parts;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, '@')) parts.push_back(part);
  if (parts.empty()) throw SchemaError("empty curve spec");
  try {
    c.word = parse_word(parts[0]);
  } catch (const BadConfiguration& e) {
    throw SchemaError(e.what());
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    const auto comma = parts[i].find(',', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || comma == std::string::npos || eq == 0) {
      throw SchemaError("chart entry '" + parts[i] + "' in curve spec must look like chart=p,q");
    }
    try {
      std::size_t used_p = 0, used_q = 0;
      const std::string ps = parts[i].substr(eq + 1, comma - eq - 1);
      const std::string qs = parts[i].substr(comma + 1);
      const std::int64_t p = std::stoll(ps, &used_p);
      const std::int64_t q = std::stoll(qs, &used_q);
      if (used_p != ps.size() || used_q != qs.size()) throw std::invalid_argument("pair");
      c.charts[parts[i].substr(0, eq)] = {p, q};
    } catch (const std::exception&) {
      throw SchemaError("bad class in curve spec '" + spec + "'");
    }
  }
  return c;
}

}  // namespace projgraft
