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

#ifndef JACSYZ_LOCAL_HPP
#define JACSYZ_LOCAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "jacsyz/errors.hpp"
#include "jacsyz/exactla.hpp"
#include "jacsyz/poly.hpp"

namespace jacsyz {

struct LocalOptions {
  int truncation_cap = 50;
};

namespace detail {

// All exponents in `nvars` variables of total degree exactly d, lex descending.
inline void monomials_of_degree(std::size_t nvars, int d, std::vector<Exponent>& out) {
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return;
  }
  Exponent e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
}

}  // namespace detail

/// Finite quotient O_n / (I + m^D) of the local ring at the origin, realized
/// on the space of jets of degree < D. Monomials are indexed highest degree
/// first, so pivots of the ideal span sit on high-degree monomials and the
/// standard monomials (the quotient basis) are the low-degree survivors.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(std::vector<LocalPoly> gens, int trunc, std::size_t nvars)
      : nvars_(nvars), trunc_(trunc), gens_(std::move(gens)), ech_(0) {
    if (trunc < 1) throw std::invalid_argument("truncation degree must be at least 1");
    for (int d = trunc - 1; d >= 0; --d) detail::monomials_of_degree(nvars_, d, jets_);
    for (std::size_t i = 0; i < jets_.size(); ++i) index_.emplace(jets_[i], i);
    ech_ = IntegerEchelon(jets_.size());
    for (const auto& g : gens_) {
      if (g.nvars() != nvars_) throw std::invalid_argument("generator lives in a different ring");
      if (g.is_zero()) continue;
      const int ord = g.order();
      for (int d = 0; d + ord < trunc_; ++d) {
        std::vector<Exponent> mult;
        detail::monomials_of_degree(nvars_, d, mult);
        for (const auto& p : mult) ech_.insert(jet_vector(g, p));
      }
    }
    for (std::size_t i = 0; i < jets_.size(); ++i)
      if (!ech_.is_pivot(i)) standard_.push_back(i);
  }

  TruncatedAlgebra(std::vector<LocalPoly> gens, int trunc)
      : TruncatedAlgebra(gens, trunc, gens.empty() ? 0 : gens.front().nvars()) {}

  std::size_t nvars() const noexcept { return nvars_; }
  int trunc() const noexcept { return trunc_; }
  const std::vector<LocalPoly>& gens() const noexcept { return gens_; }
  std::size_t dim() const noexcept { return standard_.size(); }

  std::vector<Exponent> standard_monomials() const {
    std::vector<Exponent> out;
    for (auto i : standard_) out.push_back(jets_[i]);
    return out;
  }

  /// Normal form of h: a combination of standard monomials.
  LocalPoly reduce(const LocalPoly& h) const {
    LocalPoly out(nvars_);
    for (const auto& [i, q] : ech_.reduce(jet_vector(h, Exponent(nvars_, 0)))) out.add_term(jets_[i], q);
    return out;
  }

  /// Coordinates of h in the standard-monomial basis (in `standard_monomials` order).
  std::vector<Rational> coordinates(const LocalPoly& h) const {
    std::vector<Rational> out(standard_.size(), Rational(0));
    const auto nf = ech_.reduce(jet_vector(h, Exponent(nvars_, 0)));
    for (const auto& [i, q] : nf) {
      auto it = std::lower_bound(standard_.begin(), standard_.end(), i);
      out[static_cast<std::size_t>(it - standard_.begin())] = q;
    }
    return out;
  }

  bool reduces_to_zero(const LocalPoly& h) const { return ech_.reduce(jet_vector(h, Exponent(nvars_, 0))).empty(); }

  /// m^k is zero in this quotient: every monomial of degree k reduces to zero.
  bool kills_max_ideal_power(int k) const {
    if (k >= trunc_) return true;
    std::vector<Exponent> mons;
    detail::monomials_of_degree(nvars_, k, mons);
    return std::all_of(mons.begin(), mons.end(), [&](const Exponent& e) {
      SparseVector<Rational> v{{index_.at(e), Rational(1)}};
      return ech_.reduce(v).empty();
    });
  }

 private:
  // Coefficient vector of (x^shift * h) mod m^D in the jet basis.
  SparseVector<Rational> jet_vector(const LocalPoly& h, const Exponent& shift) const {
    SparseVector<Rational> v;
    Exponent e(nvars_);
    for (const auto& [he, c] : h.terms()) {
      int deg = 0;
      for (std::size_t i = 0; i < nvars_; ++i) {
        e[i] = he[i] + shift[i];
        deg += e[i];
      }
      if (deg >= trunc_) continue;
      v.emplace_back(index_.at(e), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  std::size_t nvars_;
  int trunc_;
  std::vector<LocalPoly> gens_;
  std::vector<Exponent> jets_;
  std::map<Exponent, std::size_t> index_;
  IntegerEchelon ech_;
  std::vector<std::size_t> standard_;
};

inline TruncatedAlgebra truncated_quotient(const std::vector<LocalPoly>& gens, int trunc) {
  return TruncatedAlgebra(gens, trunc);
}

/// Smallest order among the nonzero generators (the multiplicity of a germ).
inline int min_order(const std::vector<LocalPoly>& gens) {
  int best = -1;
  for (const auto& g : gens)
    if (!g.is_zero() && (best < 0 || g.order() < best)) best = g.order();
  return best;
}

/// O_n / I for an m-primary ideal I. Truncates at D and D+1; equal dimensions
/// mean m^D lies in I + m^{D+1}, hence in I. Starts at max(4, 2*start_order)
/// and doubles until the cap.
inline TruncatedAlgebra stable_quotient(const std::vector<LocalPoly>& gens, std::size_t nvars, int start_order,
                                        const LocalOptions& opts = {}) {
  int trunc = std::max(4, 2 * std::max(start_order, 1));
  trunc = std::min(trunc, opts.truncation_cap);
  for (;;) {
    TruncatedAlgebra a(gens, trunc, nvars);
    TruncatedAlgebra b(gens, trunc + 1, nvars);
    if (a.dim() == b.dim()) return a;
    if (trunc >= opts.truncation_cap)
      throw PreconditionError("isolated-singularity", "local quotient still growing at truncation degree " +
                                                          std::to_string(trunc) +
                                                          " (singularity not isolated or cap too small)");
    trunc = std::min(2 * trunc, opts.truncation_cap);
  }
}

inline std::vector<LocalPoly> jacobian_ideal(const LocalPoly& g) {
  std::vector<LocalPoly> gens;
  for (std::size_t i = 0; i < g.nvars(); ++i) gens.push_back(g.derivative(i));
  return gens;
}

inline std::vector<LocalPoly> tjurina_ideal(const LocalPoly& g) {
  std::vector<LocalPoly> gens{g};
  for (auto& d : jacobian_ideal(g)) gens.push_back(std::move(d));
  return gens;
}

namespace detail {

inline void require_singular_germ(const LocalPoly& g) {
  if (g.is_zero()) throw PreconditionError("singular-germ", "zero germ");
  const Exponent zero(g.nvars(), 0);
  if (g.coefficient(zero) != 0) throw PreconditionError("singular-germ", "germ does not vanish at the origin");
  if (g.order() < 2) throw PreconditionError("singular-germ", "germ has a nonzero linear part (smooth point)");
}

}  // namespace detail

inline int multiplicity(const LocalPoly& g) {
  if (g.is_zero()) throw PreconditionError("nonzero-germ", "multiplicity of the zero polynomial");
  return g.order();
}

/// O_n/(J_g + (g)) as a finite algebra; this is O_{Y,p} for the singular point.
inline TruncatedAlgebra tjurina_algebra(const LocalPoly& g, const LocalOptions& opts = {}) {
  detail::require_singular_germ(g);
  return stable_quotient(tjurina_ideal(g), g.nvars(), g.order(), opts);
}

inline int tjurina_local(const LocalPoly& g, const LocalOptions& opts = {}) {
  return static_cast<int>(tjurina_algebra(g, opts).dim());
}

inline int milnor_local(const LocalPoly& g, const LocalOptions& opts = {}) {
  detail::require_singular_germ(g);
  return static_cast<int>(stable_quotient(jacobian_ideal(g), g.nvars(), g.order(), opts).dim());
}

/// a(g): least a >= 1 with m^a in J_g + (g), decided at jet level a+1
/// (m^a in I + m^{a+1} implies m^a in I).
inline int contact_order_a(const LocalPoly& g, const LocalOptions& opts = {}) {
  detail::require_singular_germ(g);
  const auto gens = tjurina_ideal(g);
  for (int a = 1; a < opts.truncation_cap; ++a)
    if (TruncatedAlgebra(gens, a + 1, g.nvars()).kills_max_ideal_power(a)) return a;
  throw PreconditionError("isolated-singularity", "contact order exceeds the truncation cap");
}

/// o(m): nilpotency order of the maximal ideal of O_n / I, read off the
/// stabilized quotient.
inline int ideal_order_o(const std::vector<LocalPoly>& gens, std::size_t nvars, const LocalOptions& opts = {}) {
  const int ord = min_order(gens);
  if (ord == 0) return 1;  // unit ideal: m^1 = 0 in the zero ring
  const TruncatedAlgebra a = stable_quotient(gens, nvars, ord < 0 ? 1 : ord, opts);
  for (int k = 1; k <= a.trunc(); ++k)
    if (a.kills_max_ideal_power(k)) return k;
  throw InconsistencyError("stable quotient does not kill m^D");
}

inline int ideal_order_o(const std::vector<LocalPoly>& gens, const LocalOptions& opts = {}) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  return ideal_order_o(gens, gens.front().nvars(), opts);
}

/// Weighted homogeneity is only detected through mu == tau.
enum class WeightedHomogeneous { yes, undetermined };

struct LocalInvariants {
  int tau = 0;
  int mu = 0;
  int a = 0;
  int mult = 0;
  WeightedHomogeneous weighted_homogeneous = WeightedHomogeneous::undetermined;

  bool is_node() const { return tau == 1 && mu == 1 && a == 1; }
  bool is_cusp() const { return tau == 2 && mu == 2 && a == 2; }
};

inline LocalInvariants local_invariants(const LocalPoly& g, const LocalOptions& opts = {}) {
  LocalInvariants inv;
  inv.tau = tjurina_local(g, opts);
  inv.mu = milnor_local(g, opts);
  inv.a = contact_order_a(g, opts);
  inv.mult = multiplicity(g);
  inv.weighted_homogeneous = inv.mu == inv.tau ? WeightedHomogeneous::yes : WeightedHomogeneous::undetermined;
  if (inv.a > inv.tau || inv.tau > inv.mu || inv.a < 1)
    throw InconsistencyError("local invariants violate 1 <= a <= tau <= mu");
  return inv;
}

/// One row of the evaluation matrix: h localized in the chart of p and
/// written in the standard-monomial basis of A.
inline std::vector<Rational> eval_row(const HomogPoly& h, const ProjPoint& p, const TruncatedAlgebra& a) {
  return a.coordinates(localize_at(h, p, false));
}

}  // namespace jacsyz

#endif  // JACSYZ_LOCAL_HPP
