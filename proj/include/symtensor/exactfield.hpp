// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Arithmetic in a prime field Z/p and dense matrix rank over it.
//
// The default modulus is the Mersenne prime 2^61 - 1, for which products are
// reduced with shifts instead of a 128-bit division.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symtensor {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kDefaultSeed = 1;

namespace detail {

inline std::uint64_t mulmod_generic(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_generic(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_generic(r, a, m);
    a = mulmod_generic(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases suffice below 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod_generic(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_generic(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct FieldConfig {
  std::uint64_t modulus = kMersenne61;
  std::uint64_t seed = kDefaultSeed;

  /// Throws std::invalid_argument unless the modulus is a prime above 2^31.
  void validate() const {
    if (modulus <= (std::uint64_t{1} << 31) || !is_prime_u64(modulus)) {
      throw std::invalid_argument("field modulus must be a prime greater than 2^31, got " +
                                  std::to_string(modulus));
    }
  }
};

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus = kMersenne61) : p_(modulus), mersenne_(modulus == kMersenne61) {
    FieldConfig{modulus, 0}.validate();
  }

  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(std::uint64_t a) const { return a % p_; }
  std::uint64_t from_int(std::int64_t a) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = a % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;  // < 2^64 since both are < p < 2^63
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (mersenne_) {
      const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
      std::uint64_t s = (static_cast<std::uint64_t>(prod) & kMersenne61) + static_cast<std::uint64_t>(prod >> 61);
      return s >= kMersenne61 ? s - kMersenne61 : s;
    }
    return detail::mulmod_generic(a, b, p_);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }

  /// Uniform field element from a 64-bit engine, by rejection.
  template <class Engine>
  std::uint64_t sample(Engine& eng) const {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % p_ + 1) % p_;
    while (true) {
      const std::uint64_t x = eng();
      if (x <= limit) return x % p_;
    }
  }

 private:
  std::uint64_t p_;
  bool mersenne_;
};

/// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus = kMersenne61)
      : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = v % modulus_; }

  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends a row; `values` must have cols() entries.
  void push_row(std::span<const std::uint64_t> values) {
    if (values.size() != cols_) throw std::invalid_argument("FieldMatrix::push_row: width mismatch");
    for (std::uint64_t v : values) data_.push_back(v % modulus_);
    ++rows_;
  }

  static FieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::uint64_t modulus = kMersenne61) {
    const PrimeField f(modulus);
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FieldMatrix m(rows.size(), cols, modulus);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("FieldMatrix::from_rows: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = f.from_int(rows[r][c]);
    }
    return m;
  }

  const std::vector<std::uint64_t>& data() const { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> data_;
};

namespace detail {

/// Fraction-free elimination on a scratch copy of `a` (rows x cols, row-major).
inline std::size_t eliminate_rank(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                                  const PrimeField& f) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t k = c; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
    }
    const std::uint64_t* prow = &a[rank * cols];
    const std::uint64_t pv = prow[c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t* row = &a[r * cols];
      const std::uint64_t lead = row[c];
      if (lead == 0) continue;
      row[c] = 0;
      for (std::size_t k = c + 1; k < cols; ++k) row[k] = f.sub(f.mul(pv, row[k]), f.mul(lead, prow[k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline std::size_t matrix_rank(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return detail::eliminate_rank(m.data(), m.rows(), m.cols(), PrimeField(m.modulus()));
}

using FieldVector = std::vector<std::uint64_t>;
using PointConfiguration = std::vector<FieldVector>;

/// n points in dimension dim with independent uniform coordinates. The stream
/// is mt19937_64 seeded with cfg.seed, consumed point by point.
inline PointConfiguration random_point_configuration(int n, int dim, const FieldConfig& cfg) {
  if (n < 1 || dim < 1) throw std::invalid_argument("random_point_configuration: need n >= 1 and dim >= 1");
  const PrimeField f(cfg.modulus);
  std::mt19937_64 eng(cfg.seed);
  PointConfiguration pts(static_cast<std::size_t>(n), FieldVector(static_cast<std::size_t>(dim)));
  for (auto& p : pts)
    for (auto& x : p) x = f.sample(eng);
  return pts;
}

/// Incrementally maintained row-echelon basis. Stored rows are normalized so
/// their pivot entry is 1 and they vanish on the pivots of earlier rows.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t cols, const PrimeField& field) : cols_(cols), field_(&field) {}

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

  /// Reduces v against the basis in place; returns the first nonzero column or cols().
  std::size_t reduce(std::span<std::uint64_t> v) const {
    const PrimeField& f = *field_;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const std::uint64_t coef = v[pivots_[i]];
      if (coef == 0) continue;
      const std::uint64_t* row = &rows_[i * cols_];
      for (std::size_t k = 0; k < cols_; ++k)
        if (row[k] != 0) v[k] = f.sub(v[k], f.mul(coef, row[k]));
    }
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0) return k;
    return cols_;
  }

  bool is_in_span(std::span<const std::uint64_t> v) const {
    FieldVector tmp(v.begin(), v.end());
    return reduce(tmp) == cols_;
  }

  /// Adds v if it is independent of the basis; returns whether it was added.
  bool insert(std::span<const std::uint64_t> v) {
    FieldVector tmp(v.begin(), v.end());
    const std::size_t lead = reduce(tmp);
    if (lead == cols_) return false;
    const std::uint64_t scale = field_->inv(tmp[lead]);
    for (auto& x : tmp) x = field_->mul(x, scale);
    rows_.insert(rows_.end(), tmp.begin(), tmp.end());
    pivots_.push_back(lead);
    return true;
  }

 private:
  std::size_t cols_;
  const PrimeField* field_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace symtensor
