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

#include <gtest/gtest.h>

#include <functional>

#include "corpus.hpp"
#include "jacsyz/report.hpp"

namespace {

using namespace jacsyz;

JobSpec job(const std::string& text) { return parse_jobspec_text(text); }

JobSpec curve_job(const corpus::Instance& c, RankMode mode = RankMode::exact, std::uint64_t seed = kDefaultSeed) {
  Json j;
  j["variables"] = c.variables;
  j["polynomial"] = c.equation;
  Json pts = Json::array();
  for (const auto& p : c.points) {
    Json q = Json::array();
    for (long v : p) q.push_back(std::to_string(v));
    pts.push_back(q);
  }
  j["singular_points"] = pts;
  JobSpec s = parse_jobspec(j);
  s.options.mode = mode;
  s.options.seed = seed;
  return s;
}

/// Every scalar leaf is a string or a boolean (or null).
bool numbers_are_strings(const Json& j) {
  if (j.is_object() || j.is_array()) {
    for (const auto& v : j)
      if (!numbers_are_strings(v)) return false;
    return true;
  }
  return j.is_string() || j.is_boolean() || j.is_null();
}

Json without_mode(Json r) {
  r["job"]["options"].erase("mode");
  r["job"]["options"].erase("seed");
  r["meta"].erase("mode");
  r["meta"].erase("seed");
  return r;
}

TEST(JobSpec, ParsesPointsAndOptions) {
  const JobSpec s = job(R"({"variables": ["x","y","z"], "polynomial": "x^3+y^3+z^3",
      "singular_points": [["1/2", -1, "0"]],
      "options": {"mode": "fast", "seed": "42", "truncation_cap": 20, "m_max": "4",
                  "alpha_V": "3/6", "weighted_homogeneous": true, "nodes_cusps_only": false}})");
  EXPECT_EQ(s.options.mode, RankMode::fast);
  EXPECT_EQ(s.options.seed, 42u);
  EXPECT_EQ(s.options.truncation_cap, 20);
  EXPECT_EQ(*s.options.m_max, 4);
  EXPECT_EQ(*s.options.alpha_V, ratio(1, 2));
  ASSERT_TRUE(s.singular_points);
  EXPECT_EQ(s.singular_points->front().coords()[0], ratio(1, 2));
  EXPECT_EQ(s.singular_points->front().coords()[1], -1);
  EXPECT_FALSE(s.is_collection());
}

TEST(JobSpec, RejectsMalformedInput) {
  const char* bad[] = {
      R"([1, 2])",
      R"({"polynomial": "x"})",
      R"({"variables": ["x","y","z"]})",
      R"({"variables": ["x","y","z"], "polynomial": "x", "collection": ["x","y","z"]})",
      R"({"variables": ["x","x","z"], "polynomial": "x"})",
      R"({"variables": ["x","y","z"], "polynomial": "x", "singular_points": [["0","1"]]})",
      R"({"variables": ["x","y","z"], "polynomial": "x", "singular_points": [["0","1/0","1"]]})",
      R"({"variables": ["x","y","z"], "polynomial": "x", "singular_points": [["0","a","1"]]})",
      R"({"variables": ["x","y","z"], "polynomial": "x", "options": {"colour": 1}})",
      R"({"variables": ["x","y","z"], "polynomial": "x", "options": {"mode": "approx"}})",
      R"({"variables": ["x","y","z"], "polynomial": "x", "options": {"seed": "-4"}})",
      R"({"variables": ["x","y","z"], "polynomial": "x", "options": {"truncation_cap": 1}})",
      R"({"variables": ["x","y","z"], "polynomial": 3})",
      R"({"variables": ["x","y","z"], "polynomial": "x",)",
  };
  for (const char* text : bad) EXPECT_THROW(job(text), ParseError) << text;
  EXPECT_THROW(job(R"({"variables": ["x","y"], "polynomial": "x"})"), PreconditionError);
}

TEST(JobSpec, EchoRoundTrips) {
  const JobSpec s = curve_job(corpus::vn_curve(6), RankMode::fast, 99);
  const Json once = to_json(s);
  EXPECT_EQ(to_json(parse_jobspec(once)), once);
}

TEST(Analyze, QuinticFamilyMember) {
  const Json r = analyze(curve_job(corpus::vn_curve(5)));
  EXPECT_EQ(r["syzygy"]["mdr"], "3");
  EXPECT_EQ(r["syzygy"]["ct"], "6");
  EXPECT_EQ(r["syzygy"]["tau_global"], "10");
  EXPECT_EQ(r["stability"][0]["status"], "stable-certified");
  EXPECT_EQ(r["singular_locus"]["certified"], true);
  EXPECT_EQ(r["singular_locus"]["points"][0]["mu"], "11");
  EXPECT_EQ(r["defects"]["from_er"], r["defects"]["direct"]);
  EXPECT_EQ(r["torelli"]["status"], "outside-hypothesis");
  EXPECT_EQ(r["torelli"]["bound_rhs"], "3/2");
  EXPECT_TRUE(numbers_are_strings(r));
}

TEST(Analyze, NodalCubicAndCuspSextic) {
  const Json cubic = analyze(curve_job(corpus::nodal_curves().front()));
  EXPECT_EQ(cubic["syzygy"]["ct"], "3");
  EXPECT_EQ(cubic["syzygy"]["T"], "3");
  EXPECT_EQ(cubic["syzygy"]["tau_global"], "1");
  const Json cusp = analyze(curve_job(corpus::torelli_curves()[2]));
  EXPECT_EQ(cusp["torelli"]["status"], "dk-torelli");
  EXPECT_EQ(cusp["torelli"]["bound_rhs"], "2");
  for (const auto& b : cusp["bounds"]) EXPECT_NE(b["status"], "violated");
}

TEST(Analyze, SurfaceCarriesChernData) {
  const Json r = analyze(curve_job(corpus::quartic_surfaces()[0]));
  EXPECT_EQ(r["input"]["n"], "3");
  bool found = false;
  for (const auto& v : r["stability"])
    if (v["criterion"] == "p3-degree-3m+4") {
      found = true;
      EXPECT_EQ(v["status"], "stable-certified");
    }
  EXPECT_TRUE(found);
  EXPECT_TRUE(numbers_are_strings(r));
}

TEST(Analyze, ByteStableAndModeIndependent) {
  for (const auto& c : {corpus::vn_curve(5), corpus::nodal_curves()[3], corpus::torelli_curves()[1],
                        corpus::quartic_surfaces()[1]}) {
    const std::string a = analyze(curve_job(c)).dump(2), b = analyze(curve_job(c)).dump(2);
    EXPECT_EQ(a, b) << c.name;
    const std::string f1 = analyze(curve_job(c, RankMode::fast, 5)).dump(2);
    const std::string f2 = analyze(curve_job(c, RankMode::fast, 5)).dump(2);
    EXPECT_EQ(f1, f2) << c.name;
    EXPECT_EQ(without_mode(Json::parse(a)), without_mode(Json::parse(f1))) << c.name;
  }
}

TEST(Analyze, IncompleteLocusIsAPreconditionFailure) {
  corpus::Instance c = corpus::nodal_curves()[2];
  c.points.pop_back();
  try {
    analyze(curve_job(c));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.check(), "certified-singular-locus");
  }
  corpus::Instance off = corpus::nodal_curves()[0];
  off.points = {{1, 1, 1}};
  EXPECT_THROW(analyze(curve_job(off)), PreconditionError);
}

TEST(Analyze, UncertifiedSingularInputStillReportsSyzygies) {
  const Json r = analyze(job(R"({"variables": ["x","y","z"], "polynomial": "x^2*y^2*z+2*x^5+2*y^5"})"));
  EXPECT_EQ(r["singular_locus"]["certified"], false);
  EXPECT_EQ(r["syzygy"]["mdr"], "3");
  EXPECT_FALSE(r.contains("torelli"));
  EXPECT_TRUE(r["defects"]["direct"].is_null());
}

TEST(Analyze, Collections) {
  const Json r = analyze(
      job(R"({"variables": ["x","y","z"], "collection": ["0","y^3","z^3"], "singular_points": [["1","0","0"]]})"));
  EXPECT_EQ(r["input"]["kind"], "collection");
  EXPECT_EQ(r["syzygy"]["mdr"], "0");
  EXPECT_EQ(r["syzygy"]["degree_Y"], "9");
  EXPECT_EQ(r["ci"]["is_1dim_ci"], true);
  EXPECT_EQ(r["scheme"]["points"][0]["o"], "5");
  EXPECT_EQ(r["defects"]["from_er"], r["defects"]["direct"]);
  for (const auto& b : r["bounds"]) EXPECT_EQ(b["status"], "verified");
  EXPECT_TRUE(numbers_are_strings(r));
  try {
    analyze(job(R"({"variables": ["x","y","z"], "collection": ["x","y^2","z^2"]})"));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.check(), "mixed-degrees");
  }
}

TEST(Analyze, PrettyOutput) {
  const std::string text = render_pretty(analyze(curve_job(corpus::nodal_curves().front())));
  EXPECT_NE(text.find("mdr = 2, ct = 3"), std::string::npos);
  EXPECT_NE(text.find("stable-certified"), std::string::npos);
}

}  // namespace
