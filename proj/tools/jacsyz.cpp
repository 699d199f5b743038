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

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "jacsyz/report.hpp"
#include "reproduce.hpp"

namespace {

enum Exit : int { kOk = 0, kParse = 1, kPrecondition = 2, kInconsistent = 3, kMismatch = 4 };

void emit(const jacsyz::Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw jacsyz::ParseError("cannot write '" + out_path + "'");
  f << text;
}

int cmd_analyze(const std::string& jobfile, const std::string& out, bool pretty, const std::string& mode,
                const std::optional<std::uint64_t>& seed, bool timing) {
  jacsyz::JobSpec spec = jacsyz::load_jobspec(jobfile);
  if (!mode.empty()) spec.options.mode = jacsyz::detail::parse_mode(mode);
  if (seed) spec.options.seed = *seed;
  const auto t0 = std::chrono::steady_clock::now();
  jacsyz::Json report = jacsyz::analyze(spec);
  if (timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    report["meta"]["elapsed_ms"] = std::to_string(ms.count());
  }
  if (pretty) {
    std::cout << jacsyz::render_pretty(report);
    if (!out.empty()) emit(report, out);
  } else {
    emit(report, out);
  }
  return kOk;
}

int cmd_reproduce(const std::string& filter) {
  const auto rows = jacsyz::reproduce::run(filter);
  std::size_t w_group = 5, w_name = 4, w_exp = 8;
  for (const auto& r : rows) {
    w_group = std::max(w_group, r.group.size());
    w_name = std::max(w_name, r.name.size());
    w_exp = std::max(w_exp, r.expected.size());
  }
  std::cout << std::left << std::setw(static_cast<int>(w_group) + 2) << "group" << std::setw(static_cast<int>(w_name) + 2)
            << "name" << std::setw(static_cast<int>(w_exp) + 2) << "expected"
            << "computed  match\n";
  std::size_t bad = 0;
  for (const auto& r : rows) {
    std::cout << std::setw(static_cast<int>(w_group) + 2) << r.group << std::setw(static_cast<int>(w_name) + 2) << r.name
              << std::setw(static_cast<int>(w_exp) + 2) << r.expected << std::setw(static_cast<int>(w_exp) + 2) << r.computed
              << (r.match ? "yes" : "NO") << "\n";
    if (!r.match) ++bad;
  }
  std::cout << "\n" << rows.size() - bad << "/" << rows.size() << " rows match\n";
  if (bad == 0) return kOk;
  std::cerr << "discrepancies:\n";
  for (const auto& r : rows)
    if (!r.match) std::cerr << "  " << r.group << " / " << r.name << ": expected " << r.expected << ", computed " << r.computed << "\n";
  return kMismatch;
}

int cmd_membership(const std::string& jobfile, const std::string& expr, bool verify) {
  const jacsyz::JobSpec spec = jacsyz::load_jobspec(jobfile);
  if (spec.is_collection()) throw jacsyz::ParseError("membership needs a hypersurface jobfile");
  jacsyz::HypersurfaceAnalysis h(spec);
  if (!h.locus)
    throw jacsyz::PreconditionError("certified-singular-locus", "singular input needs 'singular_points'");
  const jacsyz::HomogPoly test = jacsyz::parse_form(expr, spec.variables, h.j.N - 1);
  const auto data = jacsyz::kernel_test_data(h.j, h.g, *h.locus);
  const jacsyz::Membership verdict = jacsyz::lemma41_membership(test, h.j, h.g, data);
  jacsyz::Json out;
  out["g"] = jacsyz::to_string(test, spec.variables);
  out["m"] = std::to_string(data.m);
  out["dim_I_m"] = std::to_string(data.I_m.basis.size());
  out["verdict"] = jacsyz::to_string(verdict);
  if (verify) {
    const jacsyz::Membership direct = jacsyz::direct_membership(test, h.g);
    out["direct"] = jacsyz::to_string(direct);
    out["agree"] = direct == verdict;
    if (direct != verdict) {
      emit(out, "");
      throw jacsyz::InconsistencyError("kernel test and direct membership disagree");
    }
  }
  emit(out, "");
  return kOk;
}

int cmd_ci(const std::string& jobfile) {
  const jacsyz::JobSpec spec = jacsyz::load_jobspec(jobfile);
  if (!spec.is_collection()) throw jacsyz::ParseError("ci needs a 'collection' jobfile");
  const jacsyz::CICollection c = jacsyz::job_collection(spec);
  const jacsyz::CIResult r = jacsyz::check_ci(c, jacsyz::linalg_options(spec));
  jacsyz::Json out;
  out["e"] = std::to_string(c.e);
  out["is_1dim_ci"] = r.is_1dim_ci;
  out["witness"] = r.witness ? jacsyz::Json(std::to_string(*r.witness)) : jacsyz::Json(nullptr);
  emit(out, "");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian syzygies, local invariants and derived criteria for projective hypersurfaces"};
  app.require_subcommand(1);

  std::string jobfile, out, mode, filter, expr;
  std::optional<std::uint64_t> seed;
  bool pretty = false, verify = false, timing = false;

  auto* analyze = app.add_subcommand("analyze", "full report for a jobfile");
  analyze->add_option("jobfile", jobfile, "JSON jobfile")->required();
  analyze->add_option("--out", out, "write the JSON report to this path");
  analyze->add_flag("--pretty", pretty, "print a human-readable summary");
  analyze->add_option("--mode", mode, "exact or fast")->check(CLI::IsMember({"exact", "fast"}));
  analyze->add_option("--seed", seed, "seed for the modular rank path");
  analyze->add_flag("--timing", timing, "add elapsed time to the report metadata");

  auto* repro = app.add_subcommand("reproduce-paper", "recompute the published example values");
  repro->add_option("--filter", filter, "only groups whose name contains this string");

  auto* member = app.add_subcommand("membership", "decide g in J_f through the saturation kernel test");
  member->add_option("jobfile", jobfile, "JSON jobfile")->required();
  member->add_option("--g", expr, "form of degree N-1")->required();
  member->add_flag("--verify", verify, "cross-check with direct linear-system membership");

  auto* ci = app.add_subcommand("ci", "regular-sequence check for a collection");
  ci->add_option("jobfile", jobfile, "JSON jobfile")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*analyze) return cmd_analyze(jobfile, out, pretty, mode, seed, timing);
    if (*repro) return cmd_reproduce(filter);
    if (*member) return cmd_membership(jobfile, expr, verify);
    if (*ci) return cmd_ci(jobfile);
  } catch (const jacsyz::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const jacsyz::PreconditionError& e) {
    std::cerr << "precondition failed [" << e.check() << "]: " << e.what() << "\n";
    return kPrecondition;
  } catch (const jacsyz::InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }
  return kOk;
}
