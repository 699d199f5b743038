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

#ifndef JACSYZ_EXACTLA_HPP
#define JACSYZ_EXACTLA_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacsyz/poly.hpp"

namespace jacsyz {

template <class T>
using SparseVector = std::vector<std::pair<std::size_t, T>>;  // sorted by index, no zeros

enum class RankMode { exact, fast };
enum class RankMethod { exact, modular_agreed };

inline constexpr std::uint64_t kDefaultSeed = 20150601;

struct LinAlgOptions {
  RankMode mode = RankMode::exact;
  std::uint64_t seed = kDefaultSeed;
};

struct RankResult {
  std::size_t rank = 0;
  RankMethod method = RankMethod::exact;
  std::vector<std::uint64_t> primes_used;
};

/// Sparse rational matrix stored column-major. Entries are unique and nonzero.
class RatMatrix {
 public:
  struct Entry {
    std::size_t row, col;
    Rational value;
  };

  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  /// Duplicate (row, col) entries are summed; zeros are dropped.
  RatMatrix(std::size_t rows, std::size_t cols, const std::vector<Entry>& entries) : RatMatrix(rows, cols) {
    std::vector<std::map<std::size_t, Rational>> acc(cols);
    for (const auto& e : entries) {
      if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry out of range");
      acc[e.col][e.row] += e.value;
    }
    for (std::size_t j = 0; j < cols; ++j)
      for (auto& [i, v] : acc[j])
        if (v != 0) columns_[j].emplace_back(i, v);
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Rational(1));
    return m;
  }

  /// Replaces column j; `v` must be sorted, zero-free and within range.
  void set_column(std::size_t j, SparseVector<Rational> v) { columns_.at(j) = std::move(v); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVector<Rational>& column(std::size_t j) const { return columns_.at(j); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : columns_[j]) out.push_back({i, j, v});
    return out;
  }

  RatMatrix transpose() const {
    std::vector<Entry> t;
    for (const auto& e : entries()) t.push_back({e.col, e.row, e.value});
    return RatMatrix(cols_, rows_, t);
  }

  std::vector<Rational> multiply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length does not match column count");
    std::vector<Rational> y(rows_, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j] == 0) continue;
      for (const auto& [i, v] : columns_[j]) y[i] += v * x[j];
    }
    return y;
  }

  /// Rows as sparse vectors indexed by column.
  std::vector<SparseVector<Rational>> row_vectors() const {
    std::vector<SparseVector<Rational>> r(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : columns_[j]) r[i].emplace_back(j, v);
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVector<Rational>> columns_;
};

namespace detail {

inline SparseVector<Integer> primitive_integer(const SparseVector<Rational>& v) {
  Integer l = 1;
  for (const auto& [i, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  SparseVector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& [i, q] : v) {
    Integer n = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.emplace_back(i, std::move(n));
  }
  if (g > 1)
    for (auto& [i, n] : out) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  return out;
}

inline void make_primitive(SparseVector<Integer>& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [i, n] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [i, n] : v) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  if (sgn(v.front().second) < 0)
    for (auto& [i, n] : v) n = -n;
}

// out = a*x - b*y, merged by index.
inline SparseVector<Integer> combine(const Integer& a, const SparseVector<Integer>& x, const Integer& b,
                                     const SparseVector<Integer>& y) {
  SparseVector<Integer> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      t = a * x[i].second - b * y[j].second;
      if (t != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Row echelon form over Q held as primitive integer vectors (fraction-free).
/// Each stored vector is keyed by its leading (smallest) index.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Adds v to the span; returns true if v was independent of it.
  bool insert(const SparseVector<Rational>& v) { return insert_integer(detail::primitive_integer(v)); }

  bool insert_integer(SparseVector<Integer> v) {
    detail::make_primitive(v);
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) {
        pivots_.emplace(v.front().first, std::move(v));
        return true;
      }
      const SparseVector<Integer>& w = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), w.front().second.get_mpz_t(), v.front().second.get_mpz_t());
      v = detail::combine(w.front().second / g, v, v.front().second / g, w);
      detail::make_primitive(v);
    }
    return false;
  }

  /// Canonical normal form: the unique vector congruent to v modulo the span
  /// whose coordinates at pivot indices are zero.
  SparseVector<Rational> reduce(const SparseVector<Rational>& v) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, q] : v)
      if (q != 0) acc.emplace(i, q);
    for (auto it = acc.begin(); it != acc.end();) {
      auto pv = pivots_.find(it->first);
      if (pv == pivots_.end()) {
        ++it;
        continue;
      }
      const std::size_t lead = it->first;
      const Rational factor = it->second / Rational(pv->second.front().second);
      for (const auto& [i, n] : pv->second) {
        auto [slot, fresh] = acc.try_emplace(i, 0);
        slot->second -= factor * n;
        if (slot->second == 0) acc.erase(slot);
      }
      it = acc.upper_bound(lead);
    }
    return SparseVector<Rational>(acc.begin(), acc.end());
  }

  bool contains(const SparseVector<Rational>& v) const { return reduce(v).empty(); }

  std::vector<std::size_t> pivot_indices() const {
    std::vector<std::size_t> out;
    for (const auto& [i, v] : pivots_) out.push_back(i);
    return out;
  }

  bool is_pivot(std::size_t i) const { return pivots_.count(i) != 0; }

  /// Reduced row echelon form over Q: one row per pivot, leading entry 1,
  /// zero at every other pivot index.
  std::map<std::size_t, SparseVector<Rational>> reduced_rows() const {
    std::map<std::size_t, SparseVector<Rational>> out;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [i, n] : it->second) acc.emplace(i, Rational(n));
      for (auto a = std::next(acc.begin()); a != acc.end();) {
        auto pr = out.find(a->first);
        if (pr == out.end()) {
          ++a;
          continue;
        }
        const std::size_t lead = a->first;
        const Rational factor = a->second;
        for (const auto& [i, q] : pr->second) {
          auto [slot, fresh] = acc.try_emplace(i, 0);
          slot->second -= factor * q;
          if (slot->second == 0) acc.erase(slot);
        }
        a = acc.upper_bound(lead);
      }
      const Rational lead_value = acc.begin()->second;
      SparseVector<Rational> row;
      for (auto& [i, q] : acc) row.emplace_back(i, q / lead_value);
      out.emplace(it->first, std::move(row));
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseVector<Integer>> pivots_;
};

// ---------------------------------------------------------------------------
// Modular arithmetic

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Uniform random prime in (2^60, 2^63).
template <class Rng>
std::uint64_t random_prime(Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist((1ull << 60) + 1, (1ull << 63) - 1);
  for (;;) {
    const std::uint64_t c = dist(rng) | 1ull;
    if (is_prime_u64(c)) return c;
  }
}

inline std::size_t rank_mod_p(const std::vector<SparseVector<Integer>>& vectors, std::uint64_t p) {
  const Integer P(std::to_string(p));
  std::map<std::size_t, SparseVector<std::uint64_t>> pivots;  // leading entry normalized to 1
  Integer r;
  for (const auto& v : vectors) {
    std::map<std::size_t, std::uint64_t> acc;
    for (const auto& [i, n] : v) {
      mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
      if (r != 0) acc.emplace(i, mpz_get_ui(r.get_mpz_t()));
    }
    while (!acc.empty()) {
      auto it = acc.begin();
      auto pv = pivots.find(it->first);
      if (pv == pivots.end()) break;
      const std::uint64_t factor = it->second;
      for (const auto& [i, w] : pv->second) {
        const std::uint64_t sub = mulmod(factor, w, p);
        auto [slot, fresh] = acc.try_emplace(i, 0);
        slot->second = slot->second >= sub ? slot->second - sub : slot->second + (p - sub);
        if (slot->second == 0) acc.erase(slot);
      }
    }
    if (acc.empty()) continue;
    const std::uint64_t inv = powmod(acc.begin()->second, p - 2, p);
    SparseVector<std::uint64_t> row;
    for (const auto& [i, w] : acc) row.emplace_back(i, mulmod(w, inv, p));
    pivots.emplace(row.front().first, std::move(row));
  }
  return pivots.size();
}

inline std::uint64_t matrix_fingerprint(const RatMatrix& m) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(m.rows());
  mix(m.cols());
  mix(m.nonzeros());
  return h;
}

}  // namespace detail

inline RankResult rank_exact(const RatMatrix& m) {
  IntegerEchelon ech(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) ech.insert(m.column(j));
  return {ech.rank(), RankMethod::exact, {}};
}

/// Rank of m. `fast` eliminates modulo random primes above 2^60 and accepts
/// the largest rank once two primes report it; with more than four primes
/// needed it falls back to `exact`.
inline RankResult rank(const RatMatrix& m, const LinAlgOptions& opts = {}) {
  if (opts.mode == RankMode::exact) return rank_exact(m);
  std::vector<SparseVector<Integer>> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.column(j).empty()) cols.push_back(detail::primitive_integer(m.column(j)));
  std::mt19937_64 rng(opts.seed ^ detail::matrix_fingerprint(m));
  RankResult res;
  res.method = RankMethod::modular_agreed;
  std::vector<std::size_t> ranks;
  while (res.primes_used.size() < 4) {
    std::uint64_t p = detail::random_prime(rng);
    if (std::find(res.primes_used.begin(), res.primes_used.end(), p) != res.primes_used.end()) continue;
    res.primes_used.push_back(p);
    ranks.push_back(detail::rank_mod_p(cols, p));
    const std::size_t best = *std::max_element(ranks.begin(), ranks.end());
    if (std::count(ranks.begin(), ranks.end(), best) >= 2) {
      res.rank = best;
      return res;
    }
  }
  return rank_exact(m);
}

inline std::size_t kernel_dim(const RatMatrix& m, const LinAlgOptions& opts = {}) {
  return m.cols() - rank(m, opts).rank;
}

/// Basis of the right kernel over Q. One vector per non-pivot column of the
/// reduced row echelon form, in increasing column order; each vector is a
/// primitive integer vector whose first nonzero entry is positive.
inline std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  IntegerEchelon ech(m.cols());
  for (const auto& row : m.row_vectors()) ech.insert(row);
  const auto rref = ech.reduced_rows();
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (rref.count(free)) continue;
    SparseVector<Rational> v;
    v.emplace_back(free, Rational(1));
    for (const auto& [lead, row] : rref) {
      auto it = std::lower_bound(row.begin(), row.end(), free,
                                 [](const auto& e, std::size_t idx) { return e.first < idx; });
      if (it != row.end() && it->first == free) v.emplace_back(lead, -it->second);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector<Integer> iv = detail::primitive_integer(v);
    detail::make_primitive(iv);
    std::vector<Rational> dense(m.cols(), Rational(0));
    for (auto& [i, n] : iv) dense[i] = Rational(n);
    basis.push_back(std::move(dense));
  }
  return basis;
}

inline SparseVector<Rational> to_sparse(std::span<const Rational> v) {
  SparseVector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

}  // namespace jacsyz

#endif  // JACSYZ_EXACTLA_HPP
