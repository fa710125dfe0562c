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


// Matroid algebra over rank oracles, and exhaustive rank tables.
//
// A rank oracle is any type with `EdgeSet ground() const` and
// `int rank(const EdgeSet&) const`. The ground set need not be an initial
// segment of the indices (contractions remove elements).

#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symtensor/detail/base64.hpp"
#include "symtensor/edge_set.hpp"

namespace symtensor {

template <class M>
concept RankOracle = requires(const M& m, const EdgeSet& x) {
  { m.ground() } -> std::convertible_to<EdgeSet>;
  { m.rank(x) } -> std::convertible_to<int>;
};

template <RankOracle M>
int full_rank(const M& m) {
  return m.rank(m.ground());
}

template <RankOracle M>
int dual_rank(const M& m, const EdgeSet& x) {
  const EdgeSet e = m.ground();
  return x.size() - m.rank(e) + m.rank(e - x);
}

/// The dual matroid, borrowing the primal oracle.
template <RankOracle M>
class DualOracle {
 public:
  explicit DualOracle(const M& base) : base_(&base), ground_(base.ground()), full_(base.rank(ground_)) {}
  EdgeSet ground() const { return ground_; }
  int rank(const EdgeSet& x) const { return x.size() - full_ + base_->rank(ground_ - x); }

 private:
  const M* base_;
  EdgeSet ground_;
  int full_;
};

/// M / f on the ground set E \ f, borrowing the primal oracle.
template <RankOracle M>
class ContractedOracle {
 public:
  ContractedOracle(const M& base, const EdgeSet& f)
      : base_(&base), contracted_(f), ground_(base.ground() - f), offset_(base.rank(checked(base, f))) {}
  EdgeSet ground() const { return ground_; }
  int rank(const EdgeSet& x) const { return base_->rank(x | contracted_) - offset_; }

 private:
  static const EdgeSet& checked(const M& base, const EdgeSet& f) {
    if (!f.is_subset_of(base.ground())) throw std::invalid_argument("contract: set is not inside the ground set");
    return f;
  }

  const M* base_;
  EdgeSet contracted_;
  EdgeSet ground_;
  int offset_;
};

template <RankOracle M>
ContractedOracle<M> contract(const M& m, const EdgeSet& f) {
  return ContractedOracle<M>(m, f);
}

/// M restricted to a subset of its ground set.
template <RankOracle M>
class RestrictedOracle {
 public:
  RestrictedOracle(const M& base, const EdgeSet& keep) : base_(&base), ground_(keep) {
    if (!keep.is_subset_of(base.ground())) throw std::invalid_argument("restrict: set is not inside the ground set");
  }
  EdgeSet ground() const { return ground_; }
  int rank(const EdgeSet& x) const { return base_->rank(x); }

 private:
  const M* base_;
  EdgeSet ground_;
};

template <RankOracle M>
EdgeSet closure(const M& m, const EdgeSet& x) {
  const int r = m.rank(x);
  EdgeSet out = x;
  (m.ground() - x).for_each([&](int e) {
    if (m.rank(x.with(e)) == r) out.insert(e);
  });
  return out;
}

template <RankOracle M>
bool is_flat(const M& m, const EdgeSet& x) {
  return closure(m, x) == x;
}

template <RankOracle M>
bool is_circuit(const M& m, const EdgeSet& x) {
  const int k = x.size();
  if (k == 0 || m.rank(x) != k - 1) return false;
  bool ok = true;
  x.for_each([&](int e) {
    if (ok && m.rank(x.without(e)) != k - 1) ok = false;
  });
  return ok;
}

template <RankOracle M>
bool is_cocircuit(const M& m, const EdgeSet& x) {
  return is_circuit(DualOracle<M>(m), x);
}

/// Second route to cocircuits: x is a cocircuit iff E \ x is a hyperplane.
template <RankOracle M>
bool complement_is_hyperplane(const M& m, const EdgeSet& x) {
  const EdgeSet h = m.ground() - x;
  return !x.empty() && m.rank(h) == full_rank(m) - 1 && is_flat(m, h);
}

/// Largest cyclic subset of x: drop coloops of M|x until none remain.
template <RankOracle M>
EdgeSet cyc(const M& m, const EdgeSet& x) {
  EdgeSet cur = x;
  while (true) {
    const int r = m.rank(cur);
    EdgeSet coloops;
    cur.for_each([&](int e) {
      if (m.rank(cur.without(e)) < r) coloops.insert(e);
    });
    if (coloops.empty()) return cur;
    cur -= coloops;
  }
}

template <RankOracle M>
bool is_cyclic(const M& m, const EdgeSet& x) {
  const int r = m.rank(x);
  bool ok = true;
  x.for_each([&](int e) {
    if (ok && m.rank(x.without(e)) < r) ok = false;
  });
  return ok;
}

/// Maps bit i of a compact mask to the i-th smallest element of a ground set.
class SubsetIndexer {
 public:
  explicit SubsetIndexer(const EdgeSet& ground) : elems_(ground.elements()) {}
  int size() const { return static_cast<int>(elems_.size()); }
  EdgeSet expand(std::uint64_t mask) const {
    EdgeSet s;
    for (; mask != 0; mask &= mask - 1) s.insert(elems_[static_cast<std::size_t>(std::countr_zero(mask))]);
    return s;
  }
  const std::vector<int>& elements() const { return elems_; }

 private:
  std::vector<int> elems_;
};

struct EqualityResult {
  bool equal = true;
  std::optional<EdgeSet> witness;
  long long compared = 0;
};

struct Exhaustive {};
struct Sampled {
  long long count = 10000;
  std::uint64_t seed = 1;
};

template <RankOracle A, RankOracle B>
EqualityResult matroids_equal(const A& m1, const B& m2, Exhaustive) {
  if (m1.ground() != m2.ground()) return {false, EdgeSet{}, 0};
  const SubsetIndexer idx(m1.ground());
  if (idx.size() > 22) throw std::invalid_argument("matroids_equal: exhaustive comparison capped at 22 elements");
  EqualityResult res;
  const std::uint64_t total = std::uint64_t{1} << idx.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const EdgeSet x = idx.expand(mask);
    ++res.compared;
    if (m1.rank(x) != m2.rank(x)) return {false, x, res.compared};
  }
  return res;
}

/// Compares on seeded uniform random subsets (each element kept with probability 1/2).
template <RankOracle A, RankOracle B>
EqualityResult matroids_equal(const A& m1, const B& m2, Sampled mode) {
  if (m1.ground() != m2.ground()) return {false, EdgeSet{}, 0};
  const SubsetIndexer idx(m1.ground());
  std::mt19937_64 eng(mode.seed);
  EqualityResult res;
  for (long long i = 0; i < mode.count; ++i) {
    EdgeSet x;
    for (int e : idx.elements())
      if (eng() >> 63) x.insert(e);
    ++res.compared;
    if (m1.rank(x) != m2.rank(x)) return {false, x, res.compared};
  }
  return res;
}

/// A rank table over the ground set {0, ..., m-1}, m <= 22, indexed by bit pattern.
class ExplicitMatroid {
 public:
  static constexpr int kMaxGround = 22;

  /// Takes ownership of a table of 2^m ranks and verifies the rank axioms.
  ExplicitMatroid(int ground_size, std::vector<std::uint8_t> table) : m_(ground_size), table_(std::move(table)) {
    if (m_ < 0 || m_ > kMaxGround) throw std::invalid_argument("ExplicitMatroid: ground size outside [0, 22]");
    if (table_.size() != (std::size_t{1} << m_)) throw std::invalid_argument("ExplicitMatroid: table size mismatch");
    if (auto err = axiom_violation()) throw std::invalid_argument("ExplicitMatroid: " + *err);
  }

  template <class Fn>
  static ExplicitMatroid from_function(int ground_size, Fn&& rank_of_mask) {
    if (ground_size < 0 || ground_size > kMaxGround)
      throw std::invalid_argument("ExplicitMatroid: ground size outside [0, 22]");
    std::vector<std::uint8_t> t(std::size_t{1} << ground_size);
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint8_t>(rank_of_mask(static_cast<std::uint32_t>(x)));
    return ExplicitMatroid(ground_size, std::move(t));
  }

  /// Tabulates any oracle; its ground set is relabeled to {0, ..., m-1} in increasing order.
  template <RankOracle M>
  static ExplicitMatroid tabulate(const M& m) {
    const SubsetIndexer idx(m.ground());
    return from_function(idx.size(), [&](std::uint32_t mask) { return m.rank(idx.expand(mask)); });
  }

  int ground_size() const { return m_; }
  EdgeSet ground() const { return EdgeSet::full(m_); }
  int rank(const EdgeSet& x) const {
    if (!x.is_subset_of(ground())) throw std::out_of_range("ExplicitMatroid::rank: set outside ground");
    return table_[x.to_mask32()];
  }
  int rank_of_mask(std::uint32_t x) const { return table_[x]; }
  int full_rank() const { return table_.back(); }
  const std::vector<std::uint8_t>& table() const { return table_; }

  bool operator==(const ExplicitMatroid&) const = default;

  /// Normalization, unit increase, and local submodularity
  /// r(X+e) + r(X+f) >= r(X) + r(X+e+f); together they imply the rank axioms.
  std::optional<std::string> axiom_violation() const {
    if (table_[0] != 0) return "rank of the empty set is not 0";
    const std::uint32_t total = std::uint32_t{1} << m_;
    for (std::uint32_t x = 0; x < total; ++x) {
      const int rx = table_[x];
      const std::uint32_t outside = (total - 1) & ~x;
      for (std::uint32_t oe = outside; oe != 0; oe &= oe - 1) {
        const std::uint32_t e = oe & (~oe + 1);
        const int d = table_[x | e] - rx;
        if (d != 0 && d != 1) return "unit increase fails at " + describe(x) + " + element " + std::to_string(std::countr_zero(e));
        for (std::uint32_t of = oe & (oe - 1); of != 0; of &= of - 1) {
          const std::uint32_t f = of & (~of + 1);
          if (table_[x | e] + table_[x | f] < rx + table_[x | e | f])
            return "submodularity fails at " + describe(x) + " with elements " + std::to_string(std::countr_zero(e)) +
                   ", " + std::to_string(std::countr_zero(f));
        }
      }
    }
    return std::nullopt;
  }

  /// "m <ground_size> <rank>\n" then one base64 line of the table bytes.
  void save(std::ostream& out) const {
    out << "m " << m_ << ' ' << full_rank() << '\n' << detail::base64_encode(table_) << '\n';
  }

  static ExplicitMatroid load(std::istream& in) {
    std::string tag;
    int m = 0, r = 0;
    if (!(in >> tag >> m >> r) || tag != "m") throw std::invalid_argument("rank table: bad header");
    if (m < 0 || m > kMaxGround) throw std::invalid_argument("rank table: ground size outside [0, 22]");
    std::stringstream rest;
    rest << in.rdbuf();
    auto bytes = detail::base64_decode(rest.str());
    if (bytes.size() != (std::size_t{1} << m)) throw std::invalid_argument("rank table: payload size mismatch");
    ExplicitMatroid out(m, std::move(bytes));
    if (out.full_rank() != r) throw std::invalid_argument("rank table: header rank disagrees with table");
    return out;
  }

 private:
  static std::string describe(std::uint32_t x) { return EdgeSet::from_words(x).to_string(); }

  int m_;
  std::vector<std::uint8_t> table_;
};

inline ExplicitMatroid truncate(const ExplicitMatroid& m) {
  const int r = m.full_rank();
  if (r < 1) throw std::invalid_argument("truncate: matroid has rank 0");
  return ExplicitMatroid::from_function(m.ground_size(),
                                        [&](std::uint32_t x) { return std::min(m.rank_of_mask(x), r - 1); });
}

/// Calls fn(mask) for every subset of {0..m-1} in order of increasing size,
/// and within one size in increasing numeric order.
template <class Fn>
void for_each_subset_by_size(int m, Fn&& fn) {
  const std::uint64_t total = std::uint64_t{1} << m;
  for (int k = 0; k <= m; ++k) {
    if (k == 0) {
      fn(std::uint32_t{0});
      continue;
    }
    std::uint64_t x = (std::uint64_t{1} << k) - 1;
    while (x < total) {
      fn(static_cast<std::uint32_t>(x));
      const std::uint64_t c = x & (~x + 1);
      const std::uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
}

inline bool is_circuit_mask(const ExplicitMatroid& m, std::uint32_t x) {
  const int k = std::popcount(x);
  if (k == 0 || m.rank_of_mask(x) != k - 1) return false;
  for (std::uint32_t b = x; b != 0; b &= b - 1)
    if (m.rank_of_mask(x & ~(b & (~b + 1))) != k - 1) return false;
  return true;
}

/// Circuits C with r(C) < r(E), smallest first.
inline std::vector<EdgeSet> nonspanning_circuits(const ExplicitMatroid& m) {
  std::vector<EdgeSet> out;
  const int r = m.full_rank();
  for_each_subset_by_size(m.ground_size(), [&](std::uint32_t x) {
    if (std::popcount(x) > r) return;
    if (m.rank_of_mask(x) < r && is_circuit_mask(m, x)) out.push_back(EdgeSet::from_words(x));
  });
  return out;
}

/// First violation of the rank axioms found on seeded random sets, if any.
template <RankOracle M>
std::optional<std::string> sampled_axiom_violation(const M& m, int samples, std::uint64_t seed) {
  const SubsetIndexer idx(m.ground());
  if (m.rank(EdgeSet{}) != 0) return "rank of the empty set is not 0";
  std::mt19937_64 eng(seed);
  const auto n = static_cast<std::uint64_t>(idx.size());
  auto random_set = [&] {
    EdgeSet x;
    for (int e : idx.elements())
      if (eng() >> 63) x.insert(e);
    return x;
  };
  for (int i = 0; i < samples && n > 0; ++i) {
    const EdgeSet x = random_set();
    const EdgeSet y = random_set();
    const int e = idx.elements()[static_cast<std::size_t>(eng() % n)];
    const int rx = m.rank(x);
    const int d = m.rank(x.with(e)) - rx;
    if (d < 0 || d > 1) return "unit increase fails at " + x.to_string();
    if (m.rank(x | y) + m.rank(x & y) > rx + m.rank(y))
      return "submodularity fails at " + x.to_string() + ", " + y.to_string();
  }
  return std::nullopt;
}

}  // namespace symtensor
