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

#ifndef JACSYZ_TORELLI_HPP
#define JACSYZ_TORELLI_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "jacsyz/graded.hpp"

// Jacobian-membership kernel test and Torelli-type verdicts.

namespace jacsyz {

/// (n-1)(N-4)/2 + 1, the tau bound in the Torelli hypothesis.
inline Rational torelli_tau_bound(int n, int N) { return ratio((n - 1) * (N - 4), 2) + 1; }

/// Largest m with 2m <= N-2.
inline int lemma41_degree(int N) { return (N - 2) / 2; }

enum class Membership { in_Jf, not_in_Jf };

inline const char* to_string(Membership m) { return m == Membership::in_Jf ? "in_Jf" : "not_in_Jf"; }

struct KernelTestData {
  int m = 0;
  std::vector<long> delta;            // delta_k for k = 0..m-1
  SaturationPiece I_m;
  std::size_t dim_J_target = 0;       // dim J_{f, m+N-1}
};

/// dim AR_{k+1} - dim AR_{k-N+2}; depends on f only.
inline long delta_k(const GradedEngine& g, int k) {
  const int N = g.d() + 1;
  return static_cast<long>(g.dim_AR(k + 1)) - static_cast<long>(g.dim_AR(k - N + 2));
}

namespace detail {

inline void require_lemma41_hypothesis(const JacobianData& j, std::size_t tau) {
  if (j.N < 4) throw PreconditionError("degree", "membership test needs N >= 4");
  if (Rational(static_cast<long>(tau)) > torelli_tau_bound(j.n, j.N))
    throw PreconditionError("outside-hypothesis", "tau(V) = " + std::to_string(tau) + " exceeds (n-1)(N-4)/2 + 1 = " +
                                                      to_string(torelli_tau_bound(j.n, j.N)));
}

}  // namespace detail

/// Precomputes everything the membership test needs that does not depend on g.
inline KernelTestData kernel_test_data(const JacobianData& j, const GradedEngine& g, const CertifiedLocus& locus) {
  detail::require_lemma41_hypothesis(j, locus.tau_global);
  KernelTestData d;
  d.m = lemma41_degree(j.N);
  for (int k = 0; k < d.m; ++k) d.delta.push_back(delta_k(g, k));
  if (g.multiplication_rank(d.m - g.d()) != 0) throw InconsistencyError("J_{f,m} is nonzero for m < N-1");
  d.I_m = saturation_piece(g, d.m, locus.scheme);
  d.dim_J_target = g.ideal_echelon(d.m + j.N - 1)->rank();
  return d;
}

/// g I_m in J_f, which under the hypothesis is equivalent to g in J_{f,N-1}.
inline Membership lemma41_membership(const HomogPoly& test, const JacobianData& j, const GradedEngine& g,
                                     const KernelTestData& data) {
  if (test.nvars() != j.f.nvars()) throw ParseError("test form lives in a different ring");
  if (test.is_zero()) return Membership::in_Jf;
  if (test.degree() != j.N - 1) throw PreconditionError("test-degree", "test form must have degree N-1");
  const auto ech = g.ideal_echelon(data.m + j.N - 1);
  const MonomialBasis& target = g.basis(data.m + j.N - 1);
  for (const auto& h : data.I_m.basis)
    if (!ech->contains(target.vector_of(h.poly() * test.poly()))) return Membership::not_in_Jf;
  return Membership::in_Jf;
}

inline Membership lemma41_membership(const HomogPoly& test, const JacobianData& j, const GradedEngine& g,
                                     const CertifiedLocus& locus) {
  return lemma41_membership(test, j, g, kernel_test_data(j, g, locus));
}

/// Oracle: solve sum a_i f_{x_i} = test with constant a_i.
inline Membership direct_membership(const HomogPoly& test, const GradedEngine& g) {
  return g.in_ideal(test) ? Membership::in_Jf : Membership::not_in_Jf;
}

/// dim ker of multiplication by test: (I/J_f)_{k+1} -> (I/J_f)_{k+N}.
inline std::size_t dim_ker_gstar(const HomogPoly& test, const GradedEngine& g, const SingularScheme& y, int k) {
  const int N = g.d() + 1;
  const SaturationPiece I = saturation_piece(g, k + 1, y);
  const auto ech = g.ideal_echelon(k + N);
  const MonomialBasis& target = g.basis(k + N);
  IntegerEchelon images(target.size());
  for (const auto& h : I.basis) {
    const auto reduced = ech->reduce(target.vector_of(h.poly() * test.poly()));
    images.insert(reduced);
  }
  const std::size_t in_I = I.basis.size() - images.rank();
  const std::size_t jdim = g.ideal_echelon(k + 1)->rank();
  if (in_I < jdim) throw InconsistencyError("J_f not contained in its saturation in degree " + std::to_string(k + 1));
  return in_I - jdim;
}

/// delta_k + dim ker g*_{k+1}. Defined by this sum, not computed independently.
inline long restricted_h0_derived(const HomogPoly& test, const GradedEngine& g, const SingularScheme& y, int k) {
  return delta_k(g, k) + static_cast<long>(dim_ker_gstar(test, g, y, k));
}

struct STSplit {
  bool split = false;
  std::vector<std::vector<std::size_t>> partition;  // variable indices, components in order of first index
};

/// Connected components of the variable co-occurrence graph of f.
inline STSplit st_split_given_coords(const Polynomial& f) {
  const std::size_t nv = f.nvars();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(nv, false);
  for (const auto& [e, c] : f.terms()) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < nv; ++i) {
      if (e[i] == 0) continue;
      used[i] = true;
      if (!first) {
        first = i;
      } else {
        const std::size_t a = find(*first), b = find(i);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  STSplit out;
  std::vector<long> slot(nv, -1);
  for (std::size_t i = 0; i < nv; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.partition.size());
      out.partition.emplace_back();
    }
    out.partition[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  out.split = out.partition.size() >= 2;
  return out;
}

inline STSplit st_split_given_coords(const HomogPoly& f) { return st_split_given_coords(f.poly()); }

struct MultiplicityCheck {
  bool clear = true;
  std::optional<std::size_t> point_index;  // first point of multiplicity >= N-1
};

inline MultiplicityCheck multiplicity_obstruction(const JacobianData& j, const CertifiedLocus& locus) {
  MultiplicityCheck out;
  for (std::size_t i = 0; i < locus.locals.size(); ++i)
    if (locus.locals[i].mult > j.N - 2) {
      out.clear = false;
      out.point_index = i;
      return out;
    }
  return out;
}

enum class TorelliStatus { dk_torelli, sebastiani_thom, conditional, outside_hypothesis };

inline const char* to_string(TorelliStatus s) {
  switch (s) {
    case TorelliStatus::dk_torelli: return "dk-torelli";
    case TorelliStatus::sebastiani_thom: return "sebastiani-thom";
    case TorelliStatus::conditional: return "conditional";
    case TorelliStatus::outside_hypothesis: return "outside-hypothesis";
  }
  return "?";
}

struct TorelliVerdict {
  TorelliStatus status = TorelliStatus::conditional;
  std::size_t bound_lhs = 0;  // tau(V)
  Rational bound_rhs;         // (n-1)(N-4)/2 + 1
  std::vector<std::vector<std::size_t>> partition;
  std::string reason;
};

enum class Cor42 { dk_torelli, undetermined };

inline const char* to_string(Cor42 c) { return c == Cor42::dk_torelli ? "dk-torelli" : "undetermined"; }

/// Curves with nu nodes and kappa cusps only: nu + 2 kappa <= (N-2)/2.
inline Cor42 cor42_verdict(long N, long nu, long kappa) {
  if (N < 4) throw PreconditionError("degree", "needs N >= 4");
  if (nu < 0 || kappa < 0) throw PreconditionError("counts", "node and cusp counts must be non-negative");
  return 2 * (nu + 2 * kappa) <= N - 2 ? Cor42::dk_torelli : Cor42::undetermined;
}

inline TorelliVerdict thm14_verdict(const JacobianData& j, const CertifiedLocus& locus) {
  if (j.N < 4) throw PreconditionError("degree", "needs N >= 4");
  TorelliVerdict v;
  v.bound_lhs = locus.tau_global;
  v.bound_rhs = torelli_tau_bound(j.n, j.N);
  if (Rational(static_cast<long>(v.bound_lhs)) > v.bound_rhs) {
    v.status = TorelliStatus::outside_hypothesis;
    v.reason = "tau(V) exceeds the bound";
    return v;
  }
  const STSplit sp = st_split_given_coords(j.f);
  if (sp.split) {
    v.status = TorelliStatus::sebastiani_thom;
    v.partition = sp.partition;
    v.reason = "support splits in the given coordinates";
    return v;
  }
  // Nodes and cusps on a plane curve cannot come from a Sebastiani-Thom sum.
  // A smooth curve is excluded: smooth Fermat curves are of that type.
  bool nodes_cusps = j.n == 2 && !locus.locals.empty();
  long nu = 0, kappa = 0;
  for (const auto& l : locus.locals) {
    if (l.is_node()) ++nu;
    else if (l.is_cusp()) ++kappa;
    else nodes_cusps = false;
  }
  if (nodes_cusps && cor42_verdict(j.N, nu, kappa) == Cor42::dk_torelli) {
    v.status = TorelliStatus::dk_torelli;
    v.reason = std::to_string(nu) + " nodes, " + std::to_string(kappa) + " cusps";
    return v;
  }
  v.status = TorelliStatus::conditional;
  v.reason = "bound holds; splitting after a linear change of coordinates undecided";
  return v;
}

}  // namespace jacsyz

#endif  // JACSYZ_TORELLI_HPP
