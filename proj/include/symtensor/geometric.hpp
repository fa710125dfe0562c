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


// Generic linear matroids on E(K_n): the symmetric tensor matroid S_t, whose
// edge ij is the vector p_i p_j + p_j p_i in Sym^2(F^t), and the bar-joint
// rigidity matroid R_d. "Generic" means a random point configuration over a
// large prime field.

#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "symtensor/edge_set.hpp"
#include "symtensor/exactfield.hpp"
#include "symtensor/graphs.hpp"
#include "symtensor/matroid.hpp"

namespace symtensor {

enum class ModelKind { kSymmetricTensor, kRigidity };

struct LinearModel {
  ModelKind kind = ModelKind::kSymmetricTensor;
  int dim = 1;  // t for S_t, d for R_d

  static LinearModel symmetric_tensor(int t) { return {ModelKind::kSymmetricTensor, t}; }
  static LinearModel rigidity(int d) { return {ModelKind::kRigidity, d}; }

  int columns(int n) const { return kind == ModelKind::kSymmetricTensor ? dim * (dim + 1) / 2 : dim * n; }
  std::string to_string() const { return (kind == ModelKind::kSymmetricTensor ? "S:" : "R:") + std::to_string(dim); }

  /// Parses "S:t" or "R:d".
  static LinearModel parse(const std::string& s) {
    if (s.size() < 3 || s[1] != ':' || (s[0] != 'S' && s[0] != 'R'))
      throw std::invalid_argument("model must be S:<t> or R:<d>, got '" + s + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s.substr(2), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("model dimension is not an integer: '" + s + "'");
    }
    if (pos != s.size() - 2 || v < 1) throw std::invalid_argument("model dimension must be a positive integer");
    return s[0] == 'S' ? symmetric_tensor(v) : rigidity(v);
  }

  bool operator==(const LinearModel&) const = default;
};

namespace detail {

inline void check_points(const PointConfiguration& pts, int n, int dim) {
  if (static_cast<int>(pts.size()) != n) throw std::invalid_argument("point configuration has the wrong number of points");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("point configuration has the wrong dimension");
}

inline FieldVector symmetric_tensor_row(const FieldVector& pi, const FieldVector& pj, const PrimeField& f) {
  const std::size_t t = pi.size();
  FieldVector row;
  row.reserve(t * (t + 1) / 2);
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a; b < t; ++b) row.push_back(f.add(f.mul(pi[a], pj[b]), f.mul(pi[b], pj[a])));
  return row;
}

inline FieldVector rigidity_row(int n, int i, int j, const PointConfiguration& pts, const PrimeField& f) {
  const std::size_t d = pts.front().size();
  FieldVector row(d * static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < d; ++k) {
    const std::uint64_t diff = f.sub(pts[static_cast<std::size_t>(i)][k], pts[static_cast<std::size_t>(j)][k]);
    row[static_cast<std::size_t>(i) * d + k] = diff;
    row[static_cast<std::size_t>(j) * d + k] = f.neg(diff);
  }
  return row;
}

}  // namespace detail

/// One row per edge of g (canonical order); column (a, b), a <= b, holds
/// p_i[a] p_j[b] + p_i[b] p_j[a].
inline FieldMatrix symmetric_tensor_matrix(const LabeledGraph& g, int t, const PointConfiguration& pts,
                                           std::uint64_t modulus = kMersenne61) {
  detail::check_points(pts, g.n(), t);
  const PrimeField f(modulus);
  FieldMatrix m(0, static_cast<std::size_t>(t * (t + 1) / 2), modulus);
  for (const Edge& e : g.edge_list())
    m.push_row(detail::symmetric_tensor_row(pts[static_cast<std::size_t>(e.u)], pts[static_cast<std::size_t>(e.v)], f));
  return m;
}

/// One row per edge ij with p_i - p_j in block i and p_j - p_i in block j.
inline FieldMatrix rigidity_matrix(const LabeledGraph& g, int d, const PointConfiguration& pts,
                                   std::uint64_t modulus = kMersenne61) {
  detail::check_points(pts, g.n(), d);
  const PrimeField f(modulus);
  FieldMatrix m(0, static_cast<std::size_t>(d * g.n()), modulus);
  for (const Edge& e : g.edge_list()) m.push_row(detail::rigidity_row(g.n(), e.u, e.v, pts, f));
  return m;
}

/// Two realizations disagreed on the rank of a set, so at least one of them
/// is not generic. Resample with other seeds.
class GenericityFailure : public std::runtime_error {
 public:
  GenericityFailure(const EdgeSet& subset, int rank0, int rank_other, int trial)
      : std::runtime_error("genericity check failed on " + subset.to_string() + ": trial 0 rank " +
                           std::to_string(rank0) + ", trial " + std::to_string(trial) + " rank " +
                           std::to_string(rank_other) + "; rerun with a different --seed"),
        subset_(subset) {}
  const EdgeSet& subset() const { return subset_; }

 private:
  EdgeSet subset_;
};

/// The generic linear matroid of a model on E(K_n). Trial k uses seed
/// cfg.seed + k; trial 0 defines the matroid and the remaining trials are
/// recomputed on every fresh query as a genericity watchdog.
class GenericLinearMatroid {
 public:
  GenericLinearMatroid(int n, LinearModel model, FieldConfig cfg = {}, int trials = 2)
      : n_(n), model_(model), cfg_(cfg), field_(cfg.modulus), cols_(static_cast<std::size_t>(model.columns(n))) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("GenericLinearMatroid: n outside [2, 16]");
    if (model.dim < 1) throw std::invalid_argument("GenericLinearMatroid: dimension must be positive");
    if (trials < 1) throw std::invalid_argument("GenericLinearMatroid: need at least one trial");
    cfg_.validate();
    const auto edges = canonical_edges(n);
    rows_.resize(static_cast<std::size_t>(trials));
    for (int k = 0; k < trials; ++k) {
      const PointConfiguration pts =
          random_point_configuration(n, model.dim, FieldConfig{cfg.modulus, cfg.seed + static_cast<std::uint64_t>(k)});
      auto& rows = rows_[static_cast<std::size_t>(k)];
      rows.reserve(cols_ * edges.size());
      for (const Edge& e : edges) {
        const FieldVector r = model.kind == ModelKind::kSymmetricTensor
                                  ? detail::symmetric_tensor_row(pts[static_cast<std::size_t>(e.u)],
                                                                 pts[static_cast<std::size_t>(e.v)], field_)
                                  : detail::rigidity_row(n, e.u, e.v, pts, field_);
        rows.insert(rows.end(), r.begin(), r.end());
      }
    }
  }

  int n() const { return n_; }
  const LinearModel& model() const { return model_; }
  const FieldConfig& config() const { return cfg_; }
  int trials() const { return static_cast<int>(rows_.size()); }
  EdgeSet ground() const { return EdgeSet::full(edge_count(n_)); }

  int rank(const EdgeSet& x) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(x); it != cache_.end()) return it->second;
    }
    const int r0 = rank_in_trial(x, 0);
    for (int k = 1; k < trials(); ++k) {
      const int rk = rank_in_trial(x, k);
      if (rk != r0) throw GenericityFailure(x, r0, rk, k);
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (cache_.size() < kCacheLimit) cache_.emplace(x, r0);
    return r0;
  }

  int rank(const LabeledGraph& g) const { return rank(g.edges()); }

  /// Rank in one realization, uncached and unchecked.
  int rank_in_trial(const EdgeSet& x, int trial) const {
    if (!x.is_subset_of(ground())) throw std::out_of_range("GenericLinearMatroid::rank: set outside E(K_n)");
    const auto& rows = rows_.at(static_cast<std::size_t>(trial));
    std::vector<std::uint64_t> a;
    a.reserve(static_cast<std::size_t>(x.size()) * cols_);
    x.for_each([&](int e) {
      const auto* row = &rows[static_cast<std::size_t>(e) * cols_];
      a.insert(a.end(), row, row + cols_);
    });
    return static_cast<int>(detail::eliminate_rank(std::move(a), static_cast<std::size_t>(x.size()), cols_, field_));
  }

  /// Full rank table of every trial (they must agree), built by a depth-first
  /// sweep that extends one echelon basis per depth.
  ExplicitMatroid to_explicit() const {
    const int m = edge_count(n_);
    if (m > ExplicitMatroid::kMaxGround) throw std::invalid_argument("to_explicit: more than 22 edges");
    std::vector<std::uint8_t> first;
    for (int k = 0; k < trials(); ++k) {
      std::vector<std::uint8_t> table = table_for_trial(k);
      if (k == 0) {
        first = std::move(table);
        continue;
      }
      for (std::size_t x = 0; x < table.size(); ++x)
        if (table[x] != first[x])
          throw GenericityFailure(EdgeSet::from_words(x), first[x], table[x], k);
    }
    return ExplicitMatroid(m, std::move(first));
  }

 private:
  static constexpr std::size_t kCacheLimit = std::size_t{1} << 22;

  std::vector<std::uint8_t> table_for_trial(int trial) const {
    const int m = edge_count(n_);
    const auto& rows = rows_[static_cast<std::size_t>(trial)];
    std::vector<std::uint8_t> table(std::size_t{1} << m, 0);
    std::vector<EchelonBasis> stack(static_cast<std::size_t>(m) + 1, EchelonBasis(cols_, field_));
    const std::size_t max_rank = cols_;
    // Visit element `depth` with basis stack[depth] spanning the rows of `mask`.
    auto dfs = [&](auto&& self, int depth, std::uint32_t mask, const EchelonBasis& basis) -> void {
      if (basis.rank() == max_rank) {
        // Every superset within the remaining elements has the same rank.
        const std::uint32_t rest = ((std::uint32_t{1} << m) - 1) & ~((std::uint32_t{1} << depth) - 1);
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
          table[mask | sub] = static_cast<std::uint8_t>(max_rank);
          if (sub == 0) break;
        }
        return;
      }
      if (depth == m) {
        table[mask] = static_cast<std::uint8_t>(basis.rank());
        return;
      }
      const std::span<const std::uint64_t> row(&rows[static_cast<std::size_t>(depth) * cols_], cols_);
      self(self, depth + 1, mask, basis);
      const std::uint32_t with = mask | (std::uint32_t{1} << depth);
      if (basis.is_in_span(row)) {
        self(self, depth + 1, with, basis);
      } else {
        EchelonBasis& next = stack[static_cast<std::size_t>(depth) + 1];
        next = basis;
        next.insert(row);
        self(self, depth + 1, with, next);
      }
    };
    dfs(dfs, 0, 0, stack[0]);
    return table;
  }

  int n_;
  LinearModel model_;
  FieldConfig cfg_;
  PrimeField field_;
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  mutable std::mutex mu_;
  mutable std::unordered_map<EdgeSet, int, EdgeSetHash> cache_;
};

}  // namespace symtensor
