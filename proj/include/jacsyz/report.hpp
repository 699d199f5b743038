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

#ifndef JACSYZ_REPORT_HPP
#define JACSYZ_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jacsyz/jobspec.hpp"
#include "jacsyz/sheaf.hpp"
#include "jacsyz/theorems.hpp"
#include "jacsyz/torelli.hpp"

// Job orchestration and JSON serialization. Every number in a report is a
// decimal string.

namespace jacsyz {

namespace detail {

template <class T>
std::string num(const T& v) {
  return std::to_string(v);
}
inline std::string num(const Rational& q) { return to_string(q); }

template <class T>
Json nums(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

inline Json point_json(const ProjPoint& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(to_string(c));
  return a;
}

}  // namespace detail

inline Json to_json(const BoundReport& r) {
  Json j;
  j["bound_name"] = r.bound_name;
  j["status"] = to_string(r.status);
  if (r.status != BoundStatus::not_applicable) {
    j["bound_value"] = detail::num(r.bound_value);
    j["verified_through"] = detail::num(r.verified_through);
  }
  if (r.witness_degree) j["witness_degree"] = detail::num(*r.witness_degree);
  if (r.witness_dim) j["witness_dim"] = detail::num(*r.witness_dim);
  if (r.mdr) j["mdr"] = detail::num(*r.mdr);
  if (r.gap) j["gap"] = detail::num(*r.gap);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

inline Json to_json(const ChernData& c) {
  Json j;
  j["rank"] = detail::num(c.rank);
  j["twist"] = detail::num(c.twist);
  j["c1"] = detail::num(c.c1);
  j["c2"] = detail::num(c.c2);
  if (c.c3) j["c3"] = detail::num(*c.c3);
  return j;
}

inline Json to_json(const StabilityVerdict& v) {
  Json j;
  j["criterion"] = v.criterion;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness;
  if (v.witness_degree) j["witness_degree"] = detail::num(*v.witness_degree);
  if (v.chern) j["chern"] = to_json(*v.chern);
  return j;
}

inline Json to_json(const LocalInvariants& l, const ProjPoint& p) {
  Json j;
  j["point"] = detail::point_json(p);
  j["tau"] = detail::num(l.tau);
  j["mu"] = detail::num(l.mu);
  j["a"] = detail::num(l.a);
  j["mult"] = detail::num(l.mult);
  j["weighted_homogeneous"] = l.weighted_homogeneous == WeightedHomogeneous::yes ? "yes" : "undetermined";
  return j;
}

inline Json to_json(const SyzygyReport& r) {
  Json j;
  j["m_max"] = detail::num(r.m_max);
  Json deg = Json::array();
  for (const auto& t : r.degrees)
    deg.push_back({{"m", detail::num(t.m)}, {"ar", detail::num(t.ar)}, {"kr", detail::num(t.kr)}, {"er", detail::num(t.er)}});
  j["degrees"] = deg;
  j["mdr"] = r.mdr ? Json(detail::num(*r.mdr)) : Json(nullptr);
  j["ct"] = r.ct ? Json(detail::num(*r.ct)) : Json(nullptr);
  j["tau_global"] = detail::num(r.tau_global);
  j["T"] = detail::num(r.T);
  j["hilbert"] = detail::nums(r.hilbert);
  j["smooth_hilbert"] = detail::nums(r.smooth_hilbert);
  return j;
}

inline Json to_json(const DefectTable& t) {
  Json j;
  j["degY"] = detail::num(t.degY);
  j["from_er"] = detail::nums(t.from_er);
  j["direct"] = t.direct ? detail::nums(*t.direct) : Json(nullptr);
  return j;
}

inline Json to_json(const TorelliVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["bound_lhs"] = detail::num(v.bound_lhs);
  j["bound_rhs"] = to_string(v.bound_rhs);
  if (!v.partition.empty()) {
    Json parts = Json::array();
    for (const auto& p : v.partition) parts.push_back(detail::nums(p));
    j["partition"] = parts;
  }
  j["reason"] = v.reason;
  return j;
}

inline LinAlgOptions linalg_options(const JobSpec& s) { return {s.options.mode, s.options.seed}; }
inline LocalOptions local_options(const JobSpec& s) { return {s.options.truncation_cap}; }

inline HomogPoly job_polynomial(const JobSpec& s) {
  if (!s.polynomial) throw ParseError("job has no 'polynomial'");
  return parse_poly(*s.polynomial, s.variables);
}

/// Parses the collection, checking the common degree before any form is built.
inline CICollection job_collection(const JobSpec& s) {
  std::vector<Polynomial> raw;
  int e = -1;
  for (const auto& text : s.collection) {
    raw.push_back(parse_polynomial(text, s.variables));
    const Polynomial& p = raw.back();
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw ParseError("collection entry '" + text + "' is not homogeneous");
    if (e >= 0 && p.degree() != e)
      throw PreconditionError("mixed-degrees", "collections with forms of different degrees are not supported");
    e = p.degree();
  }
  if (e <= 0) throw PreconditionError("collection-degree", "collection needs a common degree e > 0");
  std::vector<HomogPoly> forms;
  for (auto& p : raw) forms.emplace_back(std::move(p), e);
  return CICollection::from(std::move(forms));
}

struct HypersurfaceAnalysis {
  JacobianData j;
  GradedEngine g;
  std::optional<CertifiedLocus> locus;

  HypersurfaceAnalysis(const JobSpec& s)
      : j(JacobianData::from(job_polynomial(s))), g(j, linalg_options(s)) {
    const LocalOptions lo = local_options(s);
    if (s.singular_points) {
      locus = certify_singular_locus(j, g, *s.singular_points, lo);
    } else if (tjurina_global(g) == 0) {
      locus = certify_singular_locus(j, g, {}, lo);
    }
  }
};

inline Json analyze_hypersurface(const JobSpec& s) {
  HypersurfaceAnalysis h(s);
  const GradedEngine& g = h.g;
  const JacobianData& j = h.j;
  Json out;
  out["job"] = to_json(s);
  out["input"] = {{"kind", "hypersurface"},
                  {"N", detail::num(j.N)},
                  {"n", detail::num(j.n)},
                  {"canonical", to_string(j.f, s.variables)},
                  {"euler_residual_zero", euler_residual(j.f).is_zero()}};

  const int m_max = s.options.m_max.value_or(default_mdr_limit(g));
  const SyzygyReport syz = syzygy_report(g, m_max);
  out["syzygy"] = to_json(syz);

  DefectTable defects = defect_table(g, h.locus ? &h.locus->scheme : nullptr);
  if (!h.locus) defects.degY = syz.tau_global;
  out["defects"] = to_json(defects);
  if (defects.direct && *defects.direct != defects.from_er)
    throw InconsistencyError("defect table from ER disagrees with the evaluation-map defects");

  Json local = Json::array();
  std::vector<LocalInvariants> locals;
  if (h.locus) {
    locals = h.locus->locals;
    for (std::size_t i = 0; i < locals.size(); ++i) local.push_back(to_json(locals[i], h.locus->scheme.components[i].point));
  }
  out["singular_locus"] = {{"certified", h.locus.has_value()}, {"points", local}};

  if (s.options.nodes_cusps_only && h.locus)
    for (const auto& l : locals)
      if (!l.is_node() && !l.is_cusp())
        throw PreconditionError("nodes-cusps-only", "a singular point is neither a node nor a cusp");

  Json bounds = Json::array();
  bounds.push_back(to_json(check_thm11(g)));
  if (h.locus) {
    bounds.push_back(to_json(check_thm24(g, *h.locus)));
    bounds.push_back(to_json(check_cor25(g, *h.locus)));
  } else {
    bounds.push_back(to_json(detail::not_applicable("sum-a-bound", "singular locus not supplied")));
    bounds.push_back(to_json(detail::not_applicable("mdr-ct-lower-bounds", "singular locus not supplied")));
  }
  {
    HodgeInput hi;
    hi.wh_certified = s.options.weighted_homogeneous;
    bool all_nodes = h.locus.has_value() && !locals.empty();
    for (const auto& l : locals) all_nodes = all_nodes && l.is_node();
    if (s.options.alpha_V) {
      hi.alpha_V = *s.options.alpha_V;
      bounds.push_back(to_json(check_hodge_bound(g, hi)));
    } else if (all_nodes) {
      hi.alpha_V = ratio(j.n, 2);
      bounds.push_back(to_json(check_hodge_bound(g, hi)));
    } else {
      bounds.push_back(to_json(detail::not_applicable(
          "hodge-bound", hi.wh_certified ? "alpha_V not supplied" : "singularities not certified weighted homogeneous")));
    }
    if (hi.wh_certified)
      for (const auto& l : locals)
        if (l.mu != l.tau) out["advisories"].push_back("weighted homogeneity asserted but mu > tau at a point");
  }
  out["bounds"] = bounds;

  Json stab = Json::array();
  if (j.n == 2) {
    stab.push_back(to_json(stability_P2_exact(g)));
    if (h.locus) {
      const StabilityVerdict suff = stability_P2_sufficient(j.N, locals);
      stab.push_back(to_json(suff));
      out["freeness"] = to_string(freeness_obstruction(j.N, locals));
    }
  } else if (j.n == 3) {
    StabilityVerdict v = stability_P3_thm13(j.N, static_cast<long>(syz.tau_global));
    Json vj = to_json(v);
    if (v.status == StabilityStatus::stable_certified) {
      const int m = (j.N - 4) / 3;
      const std::size_t ar = g.dim_AR(m + 1);
      vj["ar_check"] = {{"m", detail::num(m + 1)}, {"dim_ar", detail::num(ar)}};
      if (ar != 0) throw InconsistencyError("stability certificate holds but AR_{m+1} is nonzero");
    }
    stab.push_back(vj);
    const ChernData c = chern_TV_P3(j.N, static_cast<long>(syz.tau_global));
    const auto [m, c1n] = normalize_twist(j.N);
    out["chern"] = {{"untwisted", to_json(c)}, {"normalized", to_json(chern_twist(c, m))}};
  }
  out["stability"] = stab;

  if (j.N >= 4 && h.locus) {
    out["torelli"] = to_json(thm14_verdict(j, *h.locus));
    const MultiplicityCheck mc = multiplicity_obstruction(j, *h.locus);
    out["multiplicity_obstruction"] =
        mc.clear ? Json("clear")
                 : Json({{"violated", detail::point_json(h.locus->scheme.components[*mc.point_index].point)}});
  }
  out["meta"] = {{"mode", s.options.mode == RankMode::exact ? "exact" : "fast"}, {"seed", std::to_string(s.options.seed)}};
  return out;
}

inline Json analyze_collection(const JobSpec& s) {
  const CICollection c = job_collection(s);
  GradedEngine g(c, linalg_options(s));
  Json out;
  out["job"] = to_json(s);
  out["input"] = {{"kind", "collection"}, {"e", detail::num(c.e)}, {"n", detail::num(g.n())}};

  const int m_max = s.options.m_max.value_or(default_mdr_limit(g));
  Json syz;
  syz["m_max"] = detail::num(m_max);
  Json deg = Json::array();
  std::optional<int> first_er;
  for (int m = 0; m <= m_max; ++m) {
    const std::size_t ar = g.dim_AR(m), kr = g.dim_KR(m), er = g.dim_ER(m);
    if (er > 0 && !first_er) first_er = m;
    deg.push_back({{"m", detail::num(m)}, {"ar", detail::num(ar)}, {"kr", detail::num(kr)}, {"er", detail::num(er)}});
  }
  syz["degrees"] = deg;
  syz["mdr"] = first_er ? Json(detail::num(*first_er)) : Json(nullptr);
  Json hil = Json::array();
  for (int k = 0; k <= g.T() + 1; ++k) hil.push_back(detail::num(g.quotient_hilbert(k)));
  syz["hilbert"] = hil;
  std::optional<std::size_t> degree;
  try {
    degree = tjurina_global(g);
  } catch (const PreconditionError&) {
  }
  syz["degree_Y"] = degree ? Json(detail::num(*degree)) : Json(nullptr);
  out["syzygy"] = syz;

  const CIResult ci = check_ci(c, linalg_options(s));
  out["ci"] = {{"is_1dim_ci", ci.is_1dim_ci}, {"witness", ci.witness ? Json(detail::num(*ci.witness)) : Json(nullptr)}};

  Json bounds = Json::array();
  if (s.singular_points && degree) {
    const CertifiedCollectionLocus locus = certify_collection_locus(c.forms, g, *s.singular_points, local_options(s));
    Json pts = Json::array();
    for (std::size_t i = 0; i < locus.orders.size(); ++i)
      pts.push_back({{"point", detail::point_json(locus.scheme.components[i].point)},
                     {"length", detail::num(locus.scheme.components[i].algebra.dim())},
                     {"o", detail::num(locus.orders[i])}});
    out["scheme"] = {{"certified", true}, {"points", pts}};
    if (ci.is_1dim_ci) {
      bounds.push_back(to_json(check_thm12(g, locus)));
      if (c.forms.forms.front().is_zero())
        bounds.push_back(to_json(check_cor26(g.n(), c.e, locus)));
      else
        bounds.push_back(to_json(detail::not_applicable("sum-o-range", "first form is not zero")));
    } else {
      bounds.push_back(to_json(detail::not_applicable("sum-o-bound", "not a 1-dimensional complete intersection")));
    }
    DefectTable t = defect_table(g, &locus.scheme);
    out["defects"] = to_json(t);
  } else {
    out["scheme"] = {{"certified", false}, {"points", Json::array()}};
    bounds.push_back(to_json(detail::not_applicable("sum-o-bound", "scheme points not supplied")));
  }
  out["bounds"] = bounds;
  out["meta"] = {{"mode", s.options.mode == RankMode::exact ? "exact" : "fast"}, {"seed", std::to_string(s.options.seed)}};
  return out;
}

inline Json analyze(const JobSpec& s) { return s.is_collection() ? analyze_collection(s) : analyze_hypersurface(s); }

/// Human-readable summary of an analysis report.
inline std::string render_pretty(const Json& r) {
  std::ostringstream os;
  const Json& in = r["input"];
  if (in["kind"] == "hypersurface")
    os << "hypersurface  N = " << in["N"].get<std::string>() << ", n = " << in["n"].get<std::string>() << "\n"
       << "  f = " << in["canonical"].get<std::string>() << "\n";
  else
    os << "collection  e = " << in["e"].get<std::string>() << ", n = " << in["n"].get<std::string>() << "\n";
  const Json& syz = r["syzygy"];
  os << "\n   m      AR      KR      ER\n";
  for (const auto& t : syz["degrees"]) {
    const auto pad = [](const std::string& x, std::size_t w) { return std::string(w > x.size() ? w - x.size() : 0, ' ') + x; };
    os << pad(t["m"].get<std::string>(), 4) << pad(t["ar"].get<std::string>(), 8) << pad(t["kr"].get<std::string>(), 8)
       << pad(t["er"].get<std::string>(), 8) << "\n";
  }
  const auto opt = [](const Json& v) { return v.is_null() ? std::string("-") : v.get<std::string>(); };
  os << "\nmdr = " << opt(syz["mdr"]);
  if (syz.contains("ct")) os << ", ct = " << opt(syz["ct"]) << ", T = " << syz["T"].get<std::string>();
  if (syz.contains("tau_global")) os << ", tau = " << syz["tau_global"].get<std::string>();
  if (syz.contains("degree_Y")) os << ", deg Y = " << opt(syz["degree_Y"]);
  os << "\n";
  if (r.contains("ci")) os << "complete intersection: " << (r["ci"]["is_1dim_ci"].get<bool>() ? "yes" : "no") << "\n";
  if (r.contains("singular_locus")) {
    for (const auto& p : r["singular_locus"]["points"]) {
      os << "  point (";
      for (std::size_t i = 0; i < p["point"].size(); ++i) os << (i ? ":" : "") << p["point"][i].get<std::string>();
      os << ")  tau " << p["tau"].get<std::string>() << "  mu " << p["mu"].get<std::string>() << "  a "
         << p["a"].get<std::string>() << "  mult " << p["mult"].get<std::string>() << "\n";
    }
  }
  os << "\nbounds\n";
  for (const auto& b : r["bounds"]) {
    os << "  " << b["bound_name"].get<std::string>() << ": " << b["status"].get<std::string>();
    if (b.contains("bound_value")) os << " (bound " << b["bound_value"].get<std::string>() << ")";
    if (b.contains("reason")) os << " - " << b["reason"].get<std::string>();
    os << "\n";
  }
  if (r.contains("stability")) {
    os << "stability\n";
    for (const auto& v : r["stability"])
      os << "  " << v["criterion"].get<std::string>() << ": " << v["status"].get<std::string>() << " ("
         << v["witness"].get<std::string>() << ")\n";
  }
  if (r.contains("freeness")) os << "freeness: " << r["freeness"].get<std::string>() << "\n";
  if (r.contains("chern")) {
    const Json& c = r["chern"]["normalized"];
    os << "chern (twist " << c["twist"].get<std::string>() << "): c1 = " << c["c1"].get<std::string>()
       << ", c2 = " << c["c2"].get<std::string>() << ", c3 = " << c["c3"].get<std::string>() << "\n";
  }
  if (r.contains("torelli"))
    os << "torelli: " << r["torelli"]["status"].get<std::string>() << " (" << r["torelli"]["reason"].get<std::string>()
       << ")\n";
  return os.str();
}

}  // namespace jacsyz

#endif  // JACSYZ_REPORT_HPP
