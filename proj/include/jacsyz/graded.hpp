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

#ifndef JACSYZ_GRADED_HPP
#define JACSYZ_GRADED_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacsyz/errors.hpp"
#include "jacsyz/exactla.hpp"
#include "jacsyz/local.hpp"
#include "jacsyz/poly.hpp"

namespace jacsyz {

/// dim S_m = C(m + nvars - 1, nvars - 1); zero for negative m.
inline std::size_t dim_S(int m, std::size_t nvars) {
  if (m < 0 || nvars == 0) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i < nvars; ++i) r = r * (static_cast<std::size_t>(m) + i) / i;
  return r;
}

/// Monomial basis of S_m in grlex (here: lex descending) order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (degree >= 0) detail::monomials_of_degree(nvars, degree, monomials_);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t size() const noexcept { return monomials_.size(); }
  int degree() const noexcept { return degree_; }
  const std::vector<Exponent>& monomials() const noexcept { return monomials_; }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  std::size_t index(const Exponent& e) const { return index_.at(e); }

  SparseVector<Rational> vector_of(const Polynomial& p) const {
    SparseVector<Rational> v;
    for (const auto& [e, c] : p.terms()) v.emplace_back(index(e), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  Polynomial polynomial_of(std::span<const Rational> coords) const {
    Polynomial p(nvars_);
    for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(monomials_[i], coords[i]);
    return p;
  }

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

/// n+1 forms of a common degree d in n+1 variables: the partials of f
/// (d = N-1) or a collection defining a 1-form (d = e).
struct FormCollection {
  std::size_t nvars = 0;
  int degree = 0;
  std::vector<HomogPoly> forms;
};

struct JacobianData {
  HomogPoly f;
  int N = 0;
  int n = 0;
  FormCollection partials;

  static JacobianData from(const HomogPoly& f) {
    if (f.is_zero()) throw ParseError("zero polynomial is not admitted as a hypersurface equation");
    if (f.degree() < 2) throw PreconditionError("degree", "hypersurface degree must be at least 2");
    if (f.nvars() < 3) throw PreconditionError("variables", "need at least 3 variables (n >= 2)");
    JacobianData j;
    j.f = f;
    j.N = f.degree();
    j.n = static_cast<int>(f.nvars()) - 1;
    j.partials.nvars = f.nvars();
    j.partials.degree = f.degree() - 1;
    bool any = false;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      j.partials.forms.push_back(partial(f, i));
      any = any || !j.partials.forms.back().is_zero();
    }
    if (!any) throw InconsistencyError("all partial derivatives vanish");
    return j;
  }
};

/// Collection f_0..f_n of a common degree e > 0; mixed degrees are rejected.
struct CICollection {
  int e = 0;
  FormCollection forms;

  static CICollection from(std::vector<HomogPoly> polys) {
    if (polys.size() < 3) throw PreconditionError("variables", "need at least 3 forms (n >= 2)");
    const std::size_t nv = polys.front().nvars();
    if (polys.size() != nv) throw PreconditionError("collection-size", "collection must have n+1 forms in n+1 variables");
    int e = -1;
    for (const auto& p : polys) {
      if (p.nvars() != nv) throw PreconditionError("collection-size", "forms live in different rings");
      if (p.is_zero()) continue;
      if (e >= 0 && p.degree() != e)
        throw PreconditionError("mixed-degrees", "collections with forms of different degrees are not supported");
      e = p.degree();
    }
    if (e <= 0) throw PreconditionError("collection-degree", "collection needs a common degree e > 0");
    CICollection c;
    c.e = e;
    c.forms.nvars = nv;
    c.forms.degree = e;
    for (auto& p : polys) c.forms.forms.push_back(p.is_zero() ? HomogPoly(Polynomial(nv), e) : std::move(p));
    return c;
  }
};

/// coefficient of t^k in ((1 - t^d) / (1 - t))^r.
inline std::size_t ci_hilbert(int d, int r, int k) {
  if (k < 0) return 0;
  std::vector<std::size_t> poly{1};
  for (int step = 0; step < r; ++step) {
    std::vector<std::size_t> next(poly.size() + static_cast<std::size_t>(std::max(d - 1, 0)), 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    poly = std::move(next);
  }
  return static_cast<std::size_t>(k) < poly.size() ? poly[static_cast<std::size_t>(k)] : 0;
}

/// dim M(f_s)_k for a smooth hypersurface of degree N in P^n.
inline std::size_t smooth_hilbert(int N, int n, int k) { return ci_hilbert(N - 1, n + 1, k); }

struct PlateauOptions {
  int start = -1;   // default (n+1)(d-1)
  int repeats = 3;  // consecutive equal values required
};

/// Graded computations attached to one form collection. Ranks are memoized
/// per degree; the object is not meant to be shared across threads.
class GradedEngine {
 public:
  explicit GradedEngine(FormCollection forms, LinAlgOptions opts = {}) : forms_(std::move(forms)), opts_(opts) {}
  explicit GradedEngine(const JacobianData& j, LinAlgOptions opts = {}) : GradedEngine(j.partials, opts) {}
  explicit GradedEngine(const CICollection& c, LinAlgOptions opts = {}) : GradedEngine(c.forms, opts) {}

  const FormCollection& forms() const noexcept { return forms_; }
  const LinAlgOptions& options() const noexcept { return opts_; }
  std::size_t nvars() const noexcept { return forms_.nvars; }
  int n() const noexcept { return static_cast<int>(forms_.nvars) - 1; }
  int d() const noexcept { return forms_.degree; }
  /// Top degree of the reference complete intersection, (n+1)(d-1).
  int T() const noexcept { return (n() + 1) * (d() - 1); }

  const MonomialBasis& basis(int deg) const {
    auto it = bases_.find(deg);
    if (it == bases_.end()) it = bases_.emplace(deg, std::make_unique<MonomialBasis>(nvars(), deg)).first;
    return *it->second;
  }

  /// (a_0..a_n) in (S_m)^{n+1} -> sum a_i f_i in S_{m+d}; column i*dim S_m + idx(mu).
  RatMatrix multiplication_matrix(int m) const {
    const MonomialBasis& src = basis(m);
    const MonomialBasis& dst = basis(m + d());
    RatMatrix mat(dst.size(), (n() + 1) * src.size());
    for (std::size_t i = 0; i < forms_.forms.size(); ++i)
      for (std::size_t k = 0; k < src.size(); ++k)
        mat.set_column(i * src.size() + k, dst.vector_of(Polynomial::monomial(src[k]) * forms_.forms[i].poly()));
    return mat;
  }

  /// b_ij in S_{m-d} -> b_ij (f_j e_i - f_i e_j) in (S_m)^{n+1}, pairs i<j in lex order.
  RatMatrix koszul_matrix(int m) const {
    const MonomialBasis& src = basis(m - d());
    const MonomialBasis& dst = basis(m);
    const std::size_t np = forms_.forms.size();
    RatMatrix mat((n() + 1) * dst.size(), np * (np - 1) / 2 * src.size());
    std::size_t col = 0;
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = i + 1; j < np; ++j)
        for (std::size_t k = 0; k < src.size(); ++k, ++col) {
          const Polynomial mu = Polynomial::monomial(src[k]);
          SparseVector<Rational> v;
          for (auto [idx, c] : dst.vector_of(mu * forms_.forms[j].poly())) v.emplace_back(i * dst.size() + idx, c);
          for (auto [idx, c] : dst.vector_of(mu * forms_.forms[i].poly())) v.emplace_back(j * dst.size() + idx, -c);
          mat.set_column(col, std::move(v));
        }
    return mat;
  }

  std::size_t multiplication_rank(int m) const {
    if (m < 0) return 0;
    auto it = mult_rank_.find(m);
    if (it == mult_rank_.end()) it = mult_rank_.emplace(m, rank(multiplication_matrix(m), opts_).rank).first;
    return it->second;
  }

  std::size_t dim_AR(int m) const {
    if (m < 0) return 0;
    return static_cast<std::size_t>(n() + 1) * basis(m).size() - multiplication_rank(m);
  }

  std::size_t dim_KR(int m) const {
    if (m < d()) return 0;
    auto it = koszul_rank_.find(m);
    if (it == koszul_rank_.end()) it = koszul_rank_.emplace(m, rank(koszul_matrix(m), opts_).rank).first;
    return it->second;
  }

  std::size_t dim_ER(int m) const {
    const std::size_t ar = dim_AR(m), kr = dim_KR(m);
    if (ar < kr) throw InconsistencyError("dim KR exceeds dim AR in degree " + std::to_string(m));
    return ar - kr;
  }

  /// dim (S/J)_k; for the partials of f this is dim M(f)_k.
  std::size_t quotient_hilbert(int k) const {
    if (k < 0) return 0;
    return basis(k).size() - multiplication_rank(k - d());
  }

  std::size_t reference_hilbert(int k) const { return ci_hilbert(d(), n() + 1, k); }

  /// Echelon form of the span J_deg inside S_deg.
  std::shared_ptr<const IntegerEchelon> ideal_echelon(int deg) const {
    auto it = ideal_ech_.find(deg);
    if (it != ideal_ech_.end()) return it->second;
    auto ech = std::make_shared<IntegerEchelon>(basis(deg).size());
    if (deg - d() >= 0) {
      const RatMatrix mat = multiplication_matrix(deg - d());
      for (std::size_t j = 0; j < mat.cols(); ++j) ech->insert(mat.column(j));
    }
    ideal_ech_.emplace(deg, ech);
    return ech;
  }

  bool in_ideal(const HomogPoly& h) const {
    if (h.is_zero()) return true;
    return ideal_echelon(h.degree())->contains(basis(h.degree()).vector_of(h.poly()));
  }

 private:
  FormCollection forms_;
  LinAlgOptions opts_;
  mutable std::map<int, std::unique_ptr<MonomialBasis>> bases_;
  mutable std::map<int, std::size_t> mult_rank_;
  mutable std::map<int, std::size_t> koszul_rank_;
  mutable std::map<int, std::shared_ptr<const IntegerEchelon>> ideal_ech_;
};

inline std::size_t dim_AR(const GradedEngine& g, int m) { return g.dim_AR(m); }
inline std::size_t dim_KR(const GradedEngine& g, int m) { return g.dim_KR(m); }
inline std::size_t dim_ER(const GradedEngine& g, int m) { return g.dim_ER(m); }
inline std::size_t hilbert_milnor(const GradedEngine& g, int k) { return g.quotient_hilbert(k); }

/// Default mdr search limit n(d-1)+1, i.e. n(N-2)+1 for a hypersurface.
inline int default_mdr_limit(const GradedEngine& g) { return g.n() * (g.d() - 1) + 1; }

/// Least q <= limit with ER_q != 0.
inline int mdr(const GradedEngine& g, int search_limit) {
  for (int q = 0; q <= search_limit; ++q)
    if (g.dim_ER(q) > 0) return q;
  throw PreconditionError("nontrivial-relation", "no essential relation up to degree " + std::to_string(search_limit) +
                                                     " (smooth input or limit too small)");
}

inline int mdr(const GradedEngine& g) { return mdr(g, default_mdr_limit(g)); }

/// Coincidence threshold: last q with dim M(f)_k = dim M(f_s)_k for k <= q.
inline int ct(const GradedEngine& g) {
  for (int k = 0; k <= g.T() + 1; ++k)
    if (g.quotient_hilbert(k) != g.reference_hilbert(k)) return k - 1;
  throw PreconditionError("singular-input", "Hilbert function agrees with the smooth one (smooth input)");
}

/// Degree of the zero-dimensional scheme defined by the forms: the plateau
/// of the Hilbert function of S/J from degree (n+1)(d-1) on. For the partials
/// of f this is the global Tjurina number tau(V).
inline std::size_t tjurina_global(const GradedEngine& g, const PlateauOptions& p = {}) {
  const int start = p.start >= 0 ? p.start : g.T();
  const int window = 2 * (g.d() + 1);
  std::size_t last = g.quotient_hilbert(start);
  int equal_run = 1, increasing_run = 1;
  for (int k = start + 1;; ++k) {
    const std::size_t v = g.quotient_hilbert(k);
    equal_run = v == last ? equal_run + 1 : 1;
    increasing_run = v > last ? increasing_run + 1 : 1;
    last = v;
    if (equal_run >= p.repeats) return v;
    if (increasing_run >= window)
      throw PreconditionError("isolated-singularities", "Hilbert function strictly increasing over " +
                                                            std::to_string(window) +
                                                            " degrees: non-isolated singular locus suspected");
    if (k > start + 4 * window) throw PreconditionError("isolated-singularities", "Hilbert function has no plateau");
  }
}

/// defect_k from the essential relations: dim ER_{n(d-1)-1-k}.
inline std::size_t defect_from_ER(const GradedEngine& g, int k) {
  const int top = g.n() * (g.d() - 1) - 1;
  if (k < 0 || k > top)
    throw PreconditionError("defect-range", "k = " + std::to_string(k) + " outside 0.." + std::to_string(top));
  return g.dim_ER(top - k);
}

// ---------------------------------------------------------------------------
// Singular scheme

/// One point of the zero-dimensional scheme with its local Artinian algebra.
struct LocalComponent {
  ProjPoint point;
  TruncatedAlgebra algebra;
};

struct SingularScheme {
  std::vector<LocalComponent> components;

  std::size_t length() const {
    std::size_t s = 0;
    for (const auto& c : components) s += c.algebra.dim();
    return s;
  }
};

/// Singular locus of a hypersurface whose local lengths add up to the
/// global Tjurina number.
struct CertifiedLocus {
  SingularScheme scheme;
  std::vector<LocalPoly> germs;
  std::vector<LocalInvariants> locals;
  std::size_t tau_global = 0;

  int sum_a() const {
    int s = 0;
    for (const auto& l : locals) s += l.a;
    return s;
  }
  int sum_tau() const {
    int s = 0;
    for (const auto& l : locals) s += l.tau;
    return s;
  }
};

namespace detail {

inline void require_distinct(const std::vector<ProjPoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw PreconditionError("distinct-points", "singular point listed twice");
}

}  // namespace detail

inline CertifiedLocus certify_singular_locus(const JacobianData& j, const GradedEngine& g,
                                             const std::vector<ProjPoint>& points, const LocalOptions& lopts = {},
                                             const PlateauOptions& popts = {}) {
  detail::require_distinct(points);
  CertifiedLocus out;
  for (const auto& p : points) {
    if (p.size() != j.f.nvars())
      throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                       std::to_string(j.f.nvars()));
    if (!is_singular_point(j.f, p)) throw PreconditionError("singular-point", "supplied point is not singular on V");
    LocalPoly germ = localize_at(j.f, p);
    out.locals.push_back(local_invariants(germ, lopts));
    out.scheme.components.push_back({p, tjurina_algebra(germ, lopts)});
    out.germs.push_back(std::move(germ));
  }
  out.tau_global = tjurina_global(g, popts);
  if (static_cast<std::size_t>(out.sum_tau()) != out.tau_global)
    throw PreconditionError("certified-singular-locus",
                            "sum of local Tjurina numbers " + std::to_string(out.sum_tau()) +
                                " differs from the global Tjurina number " + std::to_string(out.tau_global));
  return out;
}

/// Zero-dimensional scheme Y(f) of a collection at the supplied points, with
/// the total local length certified against the global degree.
struct CertifiedCollectionLocus {
  SingularScheme scheme;
  std::vector<int> orders;  // o(m_p) per point
  std::size_t global_degree = 0;

  int sum_orders() const {
    int s = 0;
    for (int o : orders) s += o;
    return s;
  }
};

inline CertifiedCollectionLocus certify_collection_locus(const FormCollection& forms, const GradedEngine& g,
                                                         const std::vector<ProjPoint>& points,
                                                         const LocalOptions& lopts = {},
                                                         const PlateauOptions& popts = {}) {
  detail::require_distinct(points);
  CertifiedCollectionLocus out;
  for (const auto& p : points) {
    if (p.size() != forms.nvars)
      throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                       std::to_string(forms.nvars));
    std::vector<LocalPoly> gens;
    for (const auto& f : forms.forms) {
      if (!vanishes_at(f.poly(), p)) throw PreconditionError("point-on-scheme", "supplied point is not a common zero");
      gens.push_back(localize_at(f, p, false));
    }
    const int ord = min_order(gens);
    out.scheme.components.push_back({p, stable_quotient(gens, forms.nvars - 1, ord < 1 ? 1 : ord, lopts)});
    out.orders.push_back(ideal_order_o(gens, forms.nvars - 1, lopts));
  }
  out.global_degree = tjurina_global(g, popts);
  if (out.scheme.length() != out.global_degree)
    throw PreconditionError("certified-scheme", "sum of local lengths " + std::to_string(out.scheme.length()) +
                                                    " differs from the global degree " +
                                                    std::to_string(out.global_degree));
  return out;
}

/// ev_k: S_k -> (+)_p O_{Y,p}; one column per monomial of S_k.
inline RatMatrix evaluation_matrix(const GradedEngine& g, int k, const SingularScheme& y) {
  const MonomialBasis& b = g.basis(k);
  RatMatrix ev(y.length(), b.size());
  for (std::size_t col = 0; col < b.size(); ++col) {
    const HomogPoly mono(Polynomial::monomial(b[col]), k);
    SparseVector<Rational> v;
    std::size_t offset = 0;
    for (const auto& c : y.components) {
      const auto row = eval_row(mono, c.point, c.algebra);
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) v.emplace_back(offset + i, row[i]);
      offset += row.size();
    }
    ev.set_column(col, std::move(v));
  }
  return ev;
}

inline std::size_t defect_direct(const GradedEngine& g, int k, const SingularScheme& y) {
  if (k < 0) return y.length();
  return y.length() - rank(evaluation_matrix(g, k, y), g.options()).rank;
}

struct SaturationPiece {
  int k = 0;
  std::vector<HomogPoly> basis;
};

/// I_k = ker ev_k.
inline SaturationPiece saturation_piece(const GradedEngine& g, int k, const SingularScheme& y) {
  SaturationPiece out;
  out.k = k;
  const MonomialBasis& b = g.basis(k);
  if (y.components.empty()) {
    for (const auto& e : b.monomials()) out.basis.emplace_back(Polynomial::monomial(e), k);
    return out;
  }
  for (const auto& v : kernel_basis(evaluation_matrix(g, k, y))) out.basis.emplace_back(b.polynomial_of(v), k);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct DegreeTriple {
  int m = 0;
  std::size_t ar = 0, kr = 0, er = 0;
};

struct SyzygyReport {
  int m_max = 0;
  std::vector<DegreeTriple> degrees;
  std::optional<int> mdr;
  std::optional<int> ct;
  std::size_t tau_global = 0;
  int T = 0;
  std::vector<std::size_t> hilbert;         // dim M(f)_k, k = 0..T+1
  std::vector<std::size_t> smooth_hilbert;  // reference values
};

struct DefectTable {
  std::size_t degY = 0;
  std::vector<std::size_t> from_er;                   // k = 0..n(d-1)-1
  std::optional<std::vector<std::size_t>> direct;     // when a certified locus is known
};

inline SyzygyReport syzygy_report(const GradedEngine& g, int m_max, const PlateauOptions& popts = {}) {
  SyzygyReport r;
  r.m_max = m_max;
  r.T = g.T();
  for (int m = 0; m <= m_max; ++m) r.degrees.push_back({m, g.dim_AR(m), g.dim_KR(m), g.dim_ER(m)});
  for (int k = 0; k <= r.T + 1; ++k) {
    r.hilbert.push_back(g.quotient_hilbert(k));
    r.smooth_hilbert.push_back(g.reference_hilbert(k));
  }
  r.tau_global = tjurina_global(g, popts);
  for (const auto& t : r.degrees)
    if (t.er > 0) {
      r.mdr = t.m;
      break;
    }
  if (r.tau_global > 0) {
    r.ct = ct(g);
    if (!r.mdr) r.mdr = mdr(g, std::max(m_max, default_mdr_limit(g)));
    if (*r.ct != *r.mdr + g.d() - 1)
      throw InconsistencyError("ct = " + std::to_string(*r.ct) + " but mdr + N - 2 = " +
                               std::to_string(*r.mdr + g.d() - 1));
  } else if (r.mdr) {
    throw InconsistencyError("essential relation found for a smooth input");
  }
  return r;
}

inline DefectTable defect_table(const GradedEngine& g, const SingularScheme* y) {
  DefectTable t;
  const int top = g.n() * (g.d() - 1) - 1;
  for (int k = 0; k <= top; ++k) t.from_er.push_back(defect_from_ER(g, k));
  if (y) {
    t.degY = y->length();
    std::vector<std::size_t> direct;
    for (int k = 0; k <= top; ++k) direct.push_back(defect_direct(g, k, *y));
    t.direct = std::move(direct);
  }
  return t;
}

}  // namespace jacsyz

#endif  // JACSYZ_GRADED_HPP
