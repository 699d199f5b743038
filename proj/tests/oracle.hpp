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

#ifndef JACSYZ_TESTS_ORACLE_HPP
#define JACSYZ_TESTS_ORACLE_HPP

// Independent reference computations for the tests: dense Gauss-Jordan
// elimination over Q and a monomial enumeration that shares no code with
// the engine.

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "jacsyz/poly.hpp"

namespace oracle {

using jacsyz::Exponent;
using jacsyz::Polynomial;
using jacsyz::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline std::size_t dense_rank(Dense a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Is v in the row span of a?
inline bool in_span(const Dense& a, const std::vector<Rational>& v) {
  Dense b = a;
  const std::size_t r0 = dense_rank(b);
  b.push_back(v);
  return dense_rank(b) == r0;
}

/// All exponent vectors of total degree d in k variables, any order.
inline std::vector<Exponent> monomials(std::size_t k, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent e(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == k) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int t = 0; t <= left; ++t) {
      e[i] = t;
      rec(i + 1, left - t);
    }
  };
  if (k == 0) return out;
  rec(0, d);
  return out;
}

inline std::vector<Rational> coords(const Polynomial& p, const std::vector<Exponent>& basis) {
  std::map<Exponent, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  std::vector<Rational> v(basis.size(), Rational(0));
  for (const auto& [e, c] : p.terms()) v.at(idx.at(e)) = c;
  return v;
}

/// Rows are the products mu * f_i, mu running over monomials of degree m.
inline Dense multiplication_rows(const std::vector<Polynomial>& forms, int d, int m) {
  const std::size_t k = forms.front().nvars();
  const auto src = monomials(k, m), dst = monomials(k, m + d);
  Dense rows;
  for (const auto& f : forms)
    for (const auto& mu : src) rows.push_back(coords(Polynomial::monomial(mu) * f, dst));
  return rows;
}

/// dim of {(a_i) in S_m^{n+1} : sum a_i f_i = 0}.
inline std::size_t dim_AR(const std::vector<Polynomial>& forms, int d, int m) {
  if (m < 0) return 0;
  const Dense rows = multiplication_rows(forms, d, m);
  return rows.size() - dense_rank(rows);
}

/// dim (S / (forms))_k.
inline std::size_t hilbert(const std::vector<Polynomial>& forms, int d, int k) {
  const std::size_t total = monomials(forms.front().nvars(), k).size();
  if (k - d < 0) return total;
  return total - dense_rank(multiplication_rows(forms, d, k - d));
}

inline std::vector<Polynomial> partials(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
  return out;
}

/// Random form of degree d with small integer coefficients.
inline Polynomial random_form(std::size_t k, int d, std::mt19937_64& rng, int spread = 5) {
  std::uniform_int_distribution<int> coef(-spread, spread);
  Polynomial p(k);
  for (const auto& e : monomials(k, d)) p.add_term(e, coef(rng));
  return p;
}

}  // namespace oracle

#endif  // JACSYZ_TESTS_ORACLE_HPP
