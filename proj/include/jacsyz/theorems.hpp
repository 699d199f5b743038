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

#ifndef JACSYZ_THEOREMS_HPP
#define JACSYZ_THEOREMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jacsyz/graded.hpp"

// Checkers that instantiate the syzygy-degree bounds on a concrete input.
// Each returns a BoundReport; "violated" always carries the degree m with
// ER_m != 0 that breaks the bound.

namespace jacsyz {

enum class BoundStatus { verified, violated, not_applicable };

inline const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::verified: return "verified";
    case BoundStatus::violated: return "violated";
    case BoundStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

struct BoundReport {
  std::string bound_name;
  long bound_value = 0;
  long verified_through = 0;
  BoundStatus status = BoundStatus::not_applicable;
  std::optional<int> witness_degree;
  std::optional<std::size_t> witness_dim;
  std::string reason;  // for not-applicable
  std::optional<int> mdr;
  std::optional<long> gap;  // mdr - (bound + 1)
};

struct HodgeInput {
  Rational alpha_V;
  bool wh_certified = false;
};

namespace detail {

/// ER_m = 0 for 0 <= m <= last.
inline BoundReport vanishing_through(const GradedEngine& g, std::string name, long bound, long last) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.bound_value = bound;
  r.verified_through = last;
  r.status = BoundStatus::verified;
  for (long m = 0; m <= last; ++m) {
    const std::size_t er = g.dim_ER(static_cast<int>(m));
    if (er > 0) {
      r.status = BoundStatus::violated;
      r.witness_degree = static_cast<int>(m);
      r.witness_dim = er;
      return r;
    }
  }
  return r;
}

inline BoundReport not_applicable(std::string name, std::string reason) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.status = BoundStatus::not_applicable;
  r.reason = std::move(reason);
  return r;
}

inline void attach_mdr(const GradedEngine& g, BoundReport& r) {
  if (r.status != BoundStatus::verified) return;
  r.mdr = mdr(g, std::max<int>(default_mdr_limit(g), static_cast<int>(r.bound_value) + 1));
  r.gap = *r.mdr - (r.bound_value + 1);
}

}  // namespace detail

/// ER_m = 0 for m <= n(N-2) - sum a(g_p).
inline BoundReport check_thm24(const GradedEngine& g, const CertifiedLocus& locus) {
  if (locus.locals.empty()) return detail::not_applicable("sum-a-bound", "smooth hypersurface");
  const long bound = static_cast<long>(g.n()) * (g.d() - 1) - locus.sum_a();
  BoundReport r = detail::vanishing_through(g, "sum-a-bound", bound, bound);
  detail::attach_mdr(g, r);
  return r;
}

/// ER_m = 0 for m <= n(N-2) - tau(V); needs only the global Tjurina number.
inline BoundReport check_thm11(const GradedEngine& g, const PlateauOptions& popts = {}) {
  const long tau = static_cast<long>(tjurina_global(g, popts));
  const long bound = static_cast<long>(g.n()) * (g.d() - 1) - tau;
  BoundReport r = detail::vanishing_through(g, "tau-bound", bound, bound);
  if (tau > 0) detail::attach_mdr(g, r);
  return r;
}

/// ER_m = 0 for m < alpha_V N - n, only for weighted homogeneous singularities.
inline BoundReport check_hodge_bound(const GradedEngine& g, const HodgeInput& h) {
  if (!h.wh_certified)
    return detail::not_applicable("hodge-bound", "singularities not certified weighted homogeneous");
  if (h.alpha_V <= 0) throw PreconditionError("alpha-positive", "Arnold exponent must be positive");
  const int N = g.d() + 1;
  const Rational limit = h.alpha_V * N - g.n();  // strict: m < limit
  Integer fl;
  mpz_cdiv_q(fl.get_mpz_t(), limit.get_num_mpz_t(), limit.get_den_mpz_t());
  const long last = fl.get_si() - 1;
  BoundReport r = detail::vanishing_through(g, "hodge-bound", last, last);
  return r;
}

/// mdr >= n(N-2) - sum a + 1 and ct >= T - sum a + 1, both sides computed.
inline BoundReport check_cor25(const GradedEngine& g, const CertifiedLocus& locus) {
  if (locus.locals.empty()) return detail::not_applicable("mdr-ct-lower-bounds", "smooth hypersurface");
  BoundReport r;
  r.bound_name = "mdr-ct-lower-bounds";
  const long sa = locus.sum_a();
  const long mdr_bound = static_cast<long>(g.n()) * (g.d() - 1) - sa + 1;
  const long ct_bound = static_cast<long>(g.T()) - sa + 1;
  const int q = mdr(g);
  const int c = ct(g);
  r.bound_value = mdr_bound;
  r.verified_through = mdr_bound - 1;
  r.mdr = q;
  r.gap = q - mdr_bound;
  if (q < mdr_bound) {
    r.status = BoundStatus::violated;
    r.witness_degree = q;
    r.witness_dim = g.dim_ER(q);
  } else if (c < ct_bound) {
    r.status = BoundStatus::violated;
    r.witness_degree = c + 1;
    r.reason = "ct = " + std::to_string(c) + " below " + std::to_string(ct_bound);
  } else {
    r.status = BoundStatus::verified;
    r.reason = "ct = " + std::to_string(c) + " >= " + std::to_string(ct_bound);
  }
  return r;
}

struct CIResult {
  bool is_1dim_ci = false;
  std::optional<int> witness;  // first deviating degree
};

/// (f_1..f_n) regular: Hilbert function of S/(f_1..f_n) equals that of
/// (1 - t^e)^n / (1 - t)^{n+1} for k <= n(e-1)+1.
inline CIResult check_ci(const CICollection& c, const LinAlgOptions& opts = {}) {
  FormCollection tail;
  tail.nvars = c.forms.nvars;
  tail.degree = c.e;
  tail.forms.assign(c.forms.forms.begin() + 1, c.forms.forms.end());
  const int n = static_cast<int>(c.forms.nvars) - 1;
  GradedEngine g(tail, opts);
  CIResult out;
  // expected coefficients of (1 - t^e)^n / (1 - t)^{n+1}
  auto expected = [&](int k) {
    Integer total = 0;
    Integer binom = 1;  // C(n, j)
    for (int j = 0; j <= n; ++j) {
      const int shift = k - j * c.e;
      if (shift < 0) break;
      const Integer term = binom * Integer(static_cast<unsigned long>(dim_S(shift, c.forms.nvars)));
      total += (j % 2 ? -term : term);
      binom = binom * (n - j) / (j + 1);
    }
    return total;
  };
  for (int k = 0; k <= n * (c.e - 1) + 1; ++k) {
    const MonomialBasis& b = g.basis(k);
    std::size_t rk = 0;
    if (k - c.e >= 0) {
      // (S_{k-e})^n -> S_k
      RatMatrix mat(b.size(), static_cast<std::size_t>(n) * g.basis(k - c.e).size());
      const MonomialBasis& src = g.basis(k - c.e);
      for (std::size_t i = 0; i < tail.forms.size(); ++i)
        for (std::size_t t = 0; t < src.size(); ++t)
          mat.set_column(i * src.size() + t, b.vector_of(Polynomial::monomial(src[t]) * tail.forms[i].poly()));
      rk = rank(mat, opts).rank;
    }
    const Integer have(static_cast<unsigned long>(b.size() - rk));
    if (have != expected(k)) {
      out.witness = k;
      return out;
    }
  }
  out.is_1dim_ci = true;
  return out;
}

/// ER(f)_m = 0 for m <= n(e-1) - sum o(m_p).
inline BoundReport check_thm12(const GradedEngine& g, const CertifiedCollectionLocus& locus) {
  const long bound = static_cast<long>(g.n()) * (g.d() - 1) - locus.sum_orders();
  return detail::vanishing_through(g, "sum-o-bound", bound, bound);
}

/// n(e-1)+1 <= sum o(m'_q) <= e^n for a regular sequence g_1..g_n.
inline BoundReport check_cor26(int n, int e, const CertifiedCollectionLocus& locus) {
  BoundReport r;
  r.bound_name = "sum-o-range";
  const long lower = static_cast<long>(n) * (e - 1) + 1;
  long upper = 1;
  for (int i = 0; i < n; ++i) upper *= e;
  const long s = locus.sum_orders();
  r.bound_value = lower;
  r.verified_through = s;
  r.reason = "sum o = " + std::to_string(s) + ", range [" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
  r.status = (s >= lower && s <= upper) ? BoundStatus::verified : BoundStatus::violated;
  return r;
}

}  // namespace jacsyz

#endif  // JACSYZ_THEOREMS_HPP
