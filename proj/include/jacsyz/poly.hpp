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

#ifndef JACSYZ_POLY_HPP
#define JACSYZ_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jacsyz/errors.hpp"

namespace jacsyz {

using Rational = mpq_class;
using Integer = mpz_class;

/// a/b in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// Dense exponent vector, one entry per variable.
using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lexicographic order with x0 > x1 > ... > xn. `GrlexGreater{}(a, b)`
/// is true when a comes strictly before b, so maps keyed by it iterate from
/// the largest monomial down.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Exact multivariate polynomial over Q. Terms are kept in grlex order and
/// no stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static Polynomial monomial(Exponent e, const Rational& c = 1) {
    Polynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  /// Least total degree of a term; -1 for the zero polynomial.
  int order() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

  bool is_homogeneous() const { return terms_.empty() || degree() == order(); }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Exponent e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Terms of total degree exactly d.
  Polynomial homogeneous_part(int d) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  Polynomial derivative(std::size_t i) const {
    if (i >= nvars_) throw std::out_of_range("variable index out of range");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent d = e;
      --d[i];
      out.add_term(std::move(d), c * e[i]);
    }
    return out;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("point dimension does not match nvars");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  Polynomial pow(int k) const {
    Polynomial out = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Affine germ in local coordinates u1..un; no homogeneity constraint.
using LocalPoly = Polynomial;

/// Homogeneous polynomial of a fixed degree. The zero polynomial is
/// representable (partials of a polynomial in fewer variables) but is never
/// accepted as a hypersurface equation; see `parse_poly`.
class HomogPoly {
 public:
  HomogPoly() = default;

  HomogPoly(Polynomial p, int degree) : poly_(std::move(p)), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    for (const auto& [e, c] : poly_.terms())
      if (total_degree(e) != degree)
        throw ParseError("inhomogeneous polynomial: term of degree " + std::to_string(total_degree(e)) +
                         " in a form of degree " + std::to_string(degree));
  }

  /// Infers the degree from the terms; throws on zero or inhomogeneous input.
  static HomogPoly from(Polynomial p) {
    if (p.is_zero()) throw ParseError("zero polynomial is not admitted as a hypersurface equation");
    if (!p.is_homogeneous()) throw ParseError("inhomogeneous polynomial");
    const int d = p.degree();
    return HomogPoly(std::move(p), d);
  }

  const Polynomial& poly() const noexcept { return poly_; }
  int degree() const noexcept { return degree_; }
  std::size_t nvars() const noexcept { return poly_.nvars(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  friend HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("adding forms of different degree");
    return HomogPoly(a.poly_ + b.poly_, a.degree_);
  }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    return HomogPoly(a.poly_ * b.poly_, a.degree_ + b.degree_);
  }
  friend HomogPoly operator*(const Rational& s, const HomogPoly& a) { return HomogPoly(s * a.poly_, a.degree_); }
  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial poly_;
  int degree_ = 0;
};

/// Point of P^n with rational homogeneous coordinates, compared up to scalar.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; }))
      throw ParseError("projective point with all coordinates zero");
  }

  const std::vector<Rational>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (a.coords_[i] * b.coords_[j] != a.coords_[j] * b.coords_[i]) return false;
    return true;
  }

 private:
  std::vector<Rational> coords_;
};

// ---------------------------------------------------------------------------
// Printing and parsing

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.nvars()) throw std::invalid_argument("variable name count does not match nvars");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const Rational mag = abs(c);
    const bool constant_term = total_degree(e) == 0;
    if (constant_term || mag != 1) {
      out << mag.get_str();
      if (!constant_term) out << '*';
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) out << '*';
      first_factor = false;
      out << vars[i];
      if (e[i] > 1) out << '^' << e[i];
    }
  }
  return out.str();
}

inline std::string to_string(const HomogPoly& f, const std::vector<std::string>& vars) {
  return to_string(f.poly(), vars);
}

/// Default names: x,y,z for three variables, x,y,z,w for four, x0..xn otherwise.
inline std::vector<std::string> default_variables(std::size_t nvars) {
  if (nvars == 3) return {"x", "y", "z"};
  if (nvars == 4) return {"x", "y", "z", "w"};
  std::vector<std::string> v;
  for (std::size_t i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

namespace detail {

// poly   := ['-'] term (('+'|'-') term)*
// term   := coeff | [coeff '*'] factor ('*' factor)*
// factor := var ['^' uint]
// coeff  := int ['/' uint]
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial out(vars_.size());
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    term_into(out, negative);
    for (skip_ws(); !at_end(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      term_into(out, op == '-');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void term_into(Polynomial& out, bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coeff = 1;
    Exponent e(vars_.size(), 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("syntax error: zero denominator", at);
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      skip_ws();
      if (at_end() || peek() != '*') need_factor = false;
      else ++pos_;
    }
    if (need_factor) {
      factor_into(e);
      for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
        ++pos_;
        factor_into(e);
      }
    }
    out.add_term(std::move(e), negative ? Rational(-coeff) : coeff);
  }

  void factor_into(Exponent& e) {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a variable");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
    long power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.size() > 5) throw ParseError("syntax error: exponent too large", at);
      power = std::stol(d);
    }
    e[static_cast<std::size_t>(it - vars_.begin())] += static_cast<int>(power);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an arbitrary (not necessarily homogeneous) polynomial.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).parse();
}

/// Parses a hypersurface equation; rejects zero and inhomogeneous input.
inline HomogPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return HomogPoly::from(parse_polynomial(text, vars));
}

/// Parses a form of a prescribed degree; the zero form is accepted.
inline HomogPoly parse_form(std::string_view text, const std::vector<std::string>& vars, int degree) {
  Polynomial p = parse_polynomial(text, vars);
  if (!p.is_homogeneous()) throw ParseError("inhomogeneous polynomial");
  if (!p.is_zero() && p.degree() != degree)
    throw ParseError("form has degree " + std::to_string(p.degree()) + ", expected " + std::to_string(degree));
  return HomogPoly(std::move(p), degree);
}

// ---------------------------------------------------------------------------
// Operations on forms

/// d f / d x_i; the result has degree N-1 and may be the zero form.
inline HomogPoly partial(const HomogPoly& f, std::size_t i) {
  if (i >= f.nvars()) throw std::out_of_range("variable index " + std::to_string(i) + " out of range");
  return HomogPoly(f.poly().derivative(i), std::max(f.degree() - 1, 0));
}

/// sum_i x_i f_{x_i} - N f. Identically zero for homogeneous f.
inline HomogPoly euler_residual(const HomogPoly& f) {
  Polynomial r(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) r += Polynomial::variable(f.nvars(), i) * f.poly().derivative(i);
  r -= Rational(f.degree()) * f.poly();
  return HomogPoly(std::move(r), f.degree());
}

/// Affine chart around a point p: x_pivot = p_pivot and x_j = p_j + u_k for
/// the remaining variables j (in increasing order, k = 0, 1, ...).
struct Chart {
  std::size_t pivot = 0;
  std::vector<std::size_t> local_of;  // local_of[j] = k, or npos for the pivot
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static Chart at(const ProjPoint& p) {
    const auto& c = p.coords();
    Chart chart;
    Rational best = -1;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (abs(c[i]) > best) {
        best = abs(c[i]);
        chart.pivot = i;
      }
    chart.local_of.assign(c.size(), npos);
    std::size_t k = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (j != chart.pivot) chart.local_of[j] = k++;
    return chart;
  }
};

/// Restricts a form to the chart at p, translated so that p is the origin.
inline LocalPoly restrict_to_chart(const Polynomial& f, const ProjPoint& p, const Chart& chart) {
  const std::size_t nv = f.nvars();
  if (p.size() != nv) throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                       std::to_string(nv));
  const std::size_t nloc = nv - 1;
  std::vector<LocalPoly> linear(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    linear[j] = LocalPoly::constant(nloc, p.coords()[j]);
    if (j != chart.pivot) linear[j] += LocalPoly::variable(nloc, chart.local_of[j]);
  }
  std::vector<std::vector<LocalPoly>> powers(nv);
  auto power = [&](std::size_t j, int k) -> const LocalPoly& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(LocalPoly::constant(nloc, 1));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * linear[j]);
    return pw[static_cast<std::size_t>(k)];
  };
  LocalPoly g(nloc);
  for (const auto& [e, c] : f.terms()) {
    LocalPoly t = LocalPoly::constant(nloc, c);
    for (std::size_t j = 0; j < nv; ++j)
      if (e[j] > 0) t = t * power(j, e[j]);
    g += t;
  }
  return g;
}

/// Local germ g_p of f at p (pivot chart, dehomogenized, translated to 0).
/// With `require_on_hypersurface`, a point with g(0) != 0 is an error.
inline LocalPoly localize_at(const HomogPoly& f, const ProjPoint& p, bool require_on_hypersurface = true) {
  LocalPoly g = restrict_to_chart(f.poly(), p, Chart::at(p));
  if (require_on_hypersurface && g.coefficient(Exponent(g.nvars(), 0)) != 0)
    throw PreconditionError("point-on-hypersurface", "the point does not lie on V");
  return g;
}

inline bool vanishes_at(const Polynomial& f, const ProjPoint& p) { return f.evaluate(p.coords()) == 0; }

/// True when f and all its partials vanish at p.
inline bool is_singular_point(const HomogPoly& f, const ProjPoint& p) {
  if (!vanishes_at(f.poly(), p)) return false;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!vanishes_at(f.poly().derivative(i), p)) return false;
  return true;
}

}  // namespace jacsyz

#endif  // JACSYZ_POLY_HPP
