/*
   Copyright 2026 The jacsyz Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JACSYZ_JOBSPEC_HPP
#define JACSYZ_JOBSPEC_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jacsyz/exactla.hpp"
#include "jacsyz/poly.hpp"

namespace jacsyz {

using Json = nlohmann::ordered_json;

struct JobOptions {
  RankMode mode = RankMode::exact;
  std::uint64_t seed = kDefaultSeed;
  int truncation_cap = 50;
  std::optional<int> m_max;
  std::optional<Rational> alpha_V;
  bool weighted_homogeneous = false;
  bool nodes_cusps_only = false;
};

/// One analysis job: a hypersurface equation or a collection of forms.
struct JobSpec {
  std::vector<std::string> variables;
  std::optional<std::string> polynomial;
  std::vector<std::string> collection;
  std::optional<std::vector<ProjPoint>> singular_points;
  JobOptions options;

  bool is_collection() const { return !collection.empty(); }
};

namespace detail {

inline Rational json_rational(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError(what + ": expected an integer or a rational string");
  const std::string s = v.get<std::string>();
  if (s.empty()) throw ParseError(what + ": empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false, digit = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digit = true;
    } else {
      throw ParseError(what + ": malformed rational '" + s + "'", i);
    }
  }
  if (!digit) throw ParseError(what + ": malformed rational '" + s + "'");
  Rational q(s[0] == '+' ? s.substr(1) : s, 10);
  if (q.get_den() == 0) throw ParseError(what + ": zero denominator");
  q.canonicalize();
  return q;
}

inline std::uint64_t json_u64(const Json& v, const std::string& what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(what + ": expected an unsigned integer");
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ParseError(what + ": value out of range");
    }
  }
  throw ParseError(what + ": expected an unsigned integer");
}

inline int json_int(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      const int r = std::stoi(v.get<std::string>(), &used);
      if (used == v.get<std::string>().size()) return r;
    } catch (const std::exception&) {
    }
  }
  throw ParseError(what + ": expected an integer");
}

inline RankMode parse_mode(const std::string& s) {
  if (s == "exact") return RankMode::exact;
  if (s == "fast") return RankMode::fast;
  throw ParseError("mode must be 'exact' or 'fast', got '" + s + "'");
}

}  // namespace detail

inline JobSpec parse_jobspec(const Json& j) {
  if (!j.is_object()) throw ParseError("jobfile must be a JSON object");
  JobSpec spec;
  if (!j.contains("variables") || !j["variables"].is_array()) throw ParseError("jobfile needs a 'variables' array");
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    spec.variables.push_back(v.get<std::string>());
  }
  if (spec.variables.size() < 3) throw PreconditionError("variables", "need at least 3 variables (n >= 2)");
  for (std::size_t a = 0; a < spec.variables.size(); ++a)
    for (std::size_t b = a + 1; b < spec.variables.size(); ++b)
      if (spec.variables[a] == spec.variables[b]) throw ParseError("duplicate variable '" + spec.variables[a] + "'");

  const bool has_poly = j.contains("polynomial"), has_coll = j.contains("collection");
  if (has_poly == has_coll) throw ParseError("jobfile needs exactly one of 'polynomial' or 'collection'");
  if (has_poly) {
    if (!j["polynomial"].is_string()) throw ParseError("'polynomial' must be a string");
    spec.polynomial = j["polynomial"].get<std::string>();
  } else {
    if (!j["collection"].is_array() || j["collection"].empty()) throw ParseError("'collection' must be a non-empty array");
    for (const auto& c : j["collection"]) {
      if (!c.is_string()) throw ParseError("collection entries must be strings");
      spec.collection.push_back(c.get<std::string>());
    }
  }

  if (j.contains("singular_points")) {
    if (!j["singular_points"].is_array()) throw ParseError("'singular_points' must be an array");
    std::vector<ProjPoint> pts;
    for (const auto& p : j["singular_points"]) {
      if (!p.is_array()) throw ParseError("each point must be an array of coordinates");
      std::vector<Rational> coords;
      for (const auto& c : p) coords.push_back(detail::json_rational(c, "point coordinate"));
      if (coords.size() != spec.variables.size())
        throw ParseError("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                         std::to_string(spec.variables.size()));
      pts.emplace_back(std::move(coords));
    }
    spec.singular_points = std::move(pts);
  }

  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) throw ParseError("'options' must be an object");
    for (auto it = o.begin(); it != o.end(); ++it) {
      const std::string& k = it.key();
      const Json& v = it.value();
      if (k == "mode") {
        if (!v.is_string()) throw ParseError("mode must be a string");
        spec.options.mode = detail::parse_mode(v.get<std::string>());
      } else if (k == "seed") {
        spec.options.seed = detail::json_u64(v, "seed");
      } else if (k == "truncation_cap") {
        spec.options.truncation_cap = detail::json_int(v, "truncation_cap");
        if (spec.options.truncation_cap < 2) throw ParseError("truncation_cap must be at least 2");
      } else if (k == "m_max") {
        spec.options.m_max = detail::json_int(v, "m_max");
        if (*spec.options.m_max < 0) throw ParseError("m_max must be non-negative");
      } else if (k == "alpha_V") {
        spec.options.alpha_V = detail::json_rational(v, "alpha_V");
      } else if (k == "weighted_homogeneous") {
        if (!v.is_boolean()) throw ParseError("weighted_homogeneous must be a boolean");
        spec.options.weighted_homogeneous = v.get<bool>();
      } else if (k == "nodes_cusps_only") {
        if (!v.is_boolean()) throw ParseError("nodes_cusps_only must be a boolean");
        spec.options.nodes_cusps_only = v.get<bool>();
      } else {
        throw ParseError("unknown option '" + k + "'");
      }
    }
  }
  return spec;
}

inline JobSpec parse_jobspec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? ParseError::npos : e.byte - 1);
  }
  return parse_jobspec(j);
}

inline JobSpec load_jobspec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open jobfile '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_jobspec_text(ss.str());
}

inline Json to_json(const JobSpec& s) {
  Json j;
  j["variables"] = s.variables;
  if (s.polynomial) j["polynomial"] = *s.polynomial;
  if (s.is_collection()) j["collection"] = s.collection;
  if (s.singular_points) {
    Json pts = Json::array();
    for (const auto& p : *s.singular_points) {
      Json c = Json::array();
      for (std::size_t i = 0; i < p.size(); ++i) c.push_back(to_string(p.coords()[i]));
      pts.push_back(c);
    }
    j["singular_points"] = pts;
  }
  Json o;
  o["mode"] = s.options.mode == RankMode::exact ? "exact" : "fast";
  o["seed"] = std::to_string(s.options.seed);
  o["truncation_cap"] = std::to_string(s.options.truncation_cap);
  if (s.options.m_max) o["m_max"] = std::to_string(*s.options.m_max);
  if (s.options.alpha_V) o["alpha_V"] = to_string(*s.options.alpha_V);
  o["weighted_homogeneous"] = s.options.weighted_homogeneous;
  o["nodes_cusps_only"] = s.options.nodes_cusps_only;
  j["options"] = o;
  return j;
}

}  // namespace jacsyz

#endif  // JACSYZ_JOBSPEC_HPP
