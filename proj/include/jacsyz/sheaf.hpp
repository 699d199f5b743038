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

#ifndef JACSYZ_SHEAF_HPP
#define JACSYZ_SHEAF_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacsyz/graded.hpp"

// Numeric invariants of the sheaf of logarithmic vector fields T<V>:
// Chern classes on P^3, stability certificates, the freeness obstruction.

namespace jacsyz {

struct ChernData {
  int rank = 3;
  long c1 = 0;
  long c2 = 0;
  std::optional<long> c3;  // absent for rank 2
  long twist = 0;

  bool operator==(const ChernData&) const = default;
};

/// Chern classes of T<V> for a surface V of degree N in P^3 with global Tjurina number tau.
inline ChernData chern_TV_P3(long N, long tau) {
  if (N < 2) throw PreconditionError("degree", "N must be at least 2");
  if (tau < 0) throw PreconditionError("tau", "Tjurina number must be non-negative");
  ChernData c;
  c.rank = 3;
  c.c1 = -N + 4;
  c.c2 = N * N - 4 * N + 6;
  c.c3 = -N * N * N + 4 * N * N - 6 * N + 4 + tau;
  return c;
}

/// Chern classes of E(m) for a rank 3 bundle E.
inline ChernData chern_twist(const ChernData& c, long m) {
  if (c.rank != 3 || !c.c3) throw PreconditionError("rank-3", "twist formulas apply to rank 3 only");
  ChernData t = c;
  t.c1 = c.c1 + 3 * m;
  t.c2 = c.c2 + 2 * m * c.c1 + 3 * m * m;
  t.c3 = *c.c3 + m * c.c2 + m * m * c.c1 + m * m * m;
  t.twist = c.twist + m;
  return t;
}

/// The unique m with c1(T<V>(m)) = -N + 4 + 3m in {0, -1, -2}.
inline std::pair<long, long> normalize_twist(long N) {
  if (N < 2) throw PreconditionError("degree", "N must be at least 2");
  const long base = -N + 4;
  long m = 0;
  while (base + 3 * m > 0) --m;
  while (base + 3 * m < -2) ++m;
  return {m, base + 3 * m};
}

enum class StabilityStatus { stable_certified, not_stable, undetermined };

inline const char* to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::stable_certified: return "stable-certified";
    case StabilityStatus::not_stable: return "not-stable";
    case StabilityStatus::undetermined: return "undetermined";
  }
  return "?";
}

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::undetermined;
  std::string criterion;
  std::string witness;             // vanishing range or inequality instance
  std::optional<int> witness_degree;
  std::optional<ChernData> chern;  // normalized classes, P^3 only
};

/// Arithmetic certificate for surfaces of degree N = 3m+4 with tau <= 8m+5.
inline StabilityVerdict stability_P3_thm13(long N, long tau) {
  StabilityVerdict v;
  v.criterion = "p3-degree-3m+4";
  if (N < 4 || (N - 4) % 3 != 0) {
    v.witness = "N = " + std::to_string(N) + " is not of the form 3m+4";
    if (N % 3 != 1) v.witness = "N not congruent to 1 mod 3; not treated by this certificate";
    return v;
  }
  const long m = (N - 4) / 3;
  const long bound = 8 * m + 5;
  v.chern = chern_twist(chern_TV_P3(N, tau), m);
  if (tau <= bound) {
    v.status = StabilityStatus::stable_certified;
    v.witness = "tau = " + std::to_string(tau) + " <= 8m+5 = " + std::to_string(bound) + " (m = " +
                std::to_string(m) + ")";
  } else {
    v.witness = "tau = " + std::to_string(tau) + " > 8m+5 = " + std::to_string(bound) + " (m = " +
                std::to_string(m) + ")";
  }
  return v;
}

/// Plane curves: stable iff AR_m = 0 for all m <= floor((N-1)/2).
inline StabilityVerdict stability_P2_exact(const GradedEngine& g) {
  if (g.n() != 2) throw PreconditionError("plane-curve", "exact stability criterion needs n = 2");
  const int N = g.d() + 1;
  const int top = (N - 1) / 2;
  StabilityVerdict v;
  v.criterion = "p2-ar-vanishing";
  for (int m = 0; m <= top; ++m) {
    if (g.dim_AR(m) > 0) {
      v.status = StabilityStatus::not_stable;
      v.witness_degree = m;
      v.witness = "dim AR_" + std::to_string(m) + " = " + std::to_string(g.dim_AR(m));
      return v;
    }
  }
  v.status = StabilityStatus::stable_certified;
  v.witness = "AR_m = 0 for m <= " + std::to_string(top);
  return v;
}

inline long sum_a(const std::vector<LocalInvariants>& locals) {
  long s = 0;
  for (const auto& l : locals) s += l.a;
  return s;
}

/// Plane curves: floor((N-1)/2) <= 2(N-2) - sum a suffices for stability.
inline StabilityVerdict stability_P2_sufficient(long N, const std::vector<LocalInvariants>& locals) {
  StabilityVerdict v;
  v.criterion = "p2-sum-a-inequality";
  const long lhs = (N - 1) / 2;
  const long rhs = 2 * (N - 2) - sum_a(locals);
  v.witness = std::to_string(lhs) + (lhs <= rhs ? " <= " : " > ") + std::to_string(rhs);
  v.status = lhs <= rhs ? StabilityStatus::stable_certified : StabilityStatus::undetermined;
  return v;
}

enum class Freeness { possible, excluded };

inline const char* to_string(Freeness f) { return f == Freeness::possible ? "possible" : "excluded"; }

/// A free curve needs sum a > 2(N-2) - floor((N-1)/2). The converse fails.
inline Freeness freeness_obstruction(long N, const std::vector<LocalInvariants>& locals) {
  return sum_a(locals) <= 2 * (N - 2) - (N - 1) / 2 ? Freeness::excluded : Freeness::possible;
}

}  // namespace jacsyz

#endif  // JACSYZ_SHEAF_HPP
