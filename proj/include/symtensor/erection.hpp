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


// Proper pattern sequences and val, weakly saturated sequences, cyclic
// families with down and modular closure, free erections and free
// elevations of rank tables, and the uniform K_{1,t}-matroid.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "symtensor/edge_set.hpp"
#include "symtensor/graphs.hpp"
#include "symtensor/matroid.hpp"

namespace symtensor {

/// Every labeled K_{1,t} in K_n: by centre, then leaf set in lexicographic order.
inline std::vector<EdgeSet> star_pattern(int n, int t) {
  std::vector<EdgeSet> out;
  for (int v = 0; v < n; ++v) {
    std::vector<int> others;
    for (int w = 0; w < n; ++w)
      if (w != v) others.push_back(w);
    for_each_combination(others, t, [&](const std::vector<int>& leaves) {
      EdgeSet s;
      for (int w : leaves) s.insert(edge_index(n, v, w));
      out.push_back(s);
    });
  }
  return out;
}

/// Rank t matroid on E(K_n) whose non-spanning circuits are exactly the
/// copies of K_{1,t}: a set inside one vertex star has rank min(|X|, t-1),
/// any other set min(|X|, t).
inline ExplicitMatroid uniform_star_matroid(int n, int t) {
  if (t < 3 || n < t + 1) throw std::invalid_argument("uniform_star_matroid needs t >= 3 and n >= t+1");
  const int m = edge_count(n);
  if (m > ExplicitMatroid::kMaxGround) throw std::invalid_argument("uniform_star_matroid: more than 22 edges");
  std::vector<std::uint32_t> stars;
  for (int v = 0; v < n; ++v) stars.push_back(vertex_star(n, v).to_mask32());
  return ExplicitMatroid::from_function(m, [&](std::uint32_t x) {
    const int size = std::popcount(x);
    for (std::uint32_t s : stars)
      if ((x & ~s) == 0) return std::min(size, t - 1);
    return std::min(size, t);
  });
}

struct ProperSequence {
  std::vector<EdgeSet> members;
};

/// Index (0-based) of the first member covered by the union of the earlier
/// ones, or -1 if the sequence is proper.
inline int first_improper_index(const ProperSequence& s) {
  EdgeSet covered;
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (i > 0 && s.members[i].is_subset_of(covered)) return static_cast<int>(i);
    covered |= s.members[i];
  }
  return -1;
}

/// |F cup X_1 cup ... cup X_k| - k.
inline int val(const EdgeSet& f, const ProperSequence& s) {
  if (const int bad = first_improper_index(s); bad >= 0)
    throw std::invalid_argument("val: sequence is not proper at position " + std::to_string(bad + 1));
  EdgeSet u = f;
  for (const auto& x : s.members) u |= x;
  return u.size() - static_cast<int>(s.members.size());
}

struct ValSearch {
  int best = 0;                 // smallest val found
  ProperSequence sequence;      // a sequence attaining it
  long long extensions = 0;     // sequence extensions examined
  bool exhausted_budget = false;
  bool reached_lower_bound = false;
};

/// Upper bound on the minimum of val(f, S) over proper sequences of pattern
/// copies: a greedy pass, then depth-first search with memoization on the
/// covered set, within `budget` extensions. Search stops early when the
/// value reaches `lower_bound` (e.g. a known rank).
inline ValSearch val_upper(const EdgeSet& f, const std::vector<EdgeSet>& patterns, long long budget = 1000000,
                           std::optional<int> lower_bound = std::nullopt) {
  ValSearch res;
  res.best = f.size();
  auto done = [&] {
    if (lower_bound && res.best <= *lower_bound) res.reached_lower_bound = true;
    return res.reached_lower_bound || res.exhausted_budget;
  };
  {
    // Greedy: repeatedly take the first copy with the smallest change in val.
    EdgeSet u;
    ProperSequence seq;
    int cur = f.size();
    while (true) {
      int pick = -1, pick_delta = 1;
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (patterns[i].is_subset_of(u)) continue;
        const int delta = (patterns[i] - (f | u)).size() - 1;
        if (delta < pick_delta) {
          pick = static_cast<int>(i);
          pick_delta = delta;
        }
      }
      if (pick < 0) break;
      u |= patterns[static_cast<std::size_t>(pick)];
      seq.members.push_back(patterns[static_cast<std::size_t>(pick)]);
      cur += pick_delta;
      if (cur < res.best) {
        res.best = cur;
        res.sequence = seq;
      }
    }
  }
  if (done()) return res;
  std::unordered_map<EdgeSet, int, EdgeSetHash> longest;  // covered set -> longest sequence seen
  ProperSequence path;
  auto dfs = [&](auto&& self, const EdgeSet& u, int k) -> void {
    for (const auto& x : patterns) {
      if (done()) return;
      if (x.is_subset_of(u)) continue;
      if (++res.extensions > budget) {
        res.exhausted_budget = true;
        return;
      }
      const EdgeSet u2 = u | x;
      const int k2 = k + 1;
      auto [it, fresh] = longest.try_emplace(u2, k2);
      if (!fresh) {
        if (it->second >= k2) continue;
        it->second = k2;
      }
      const int v = (f | u2).size() - k2;
      path.members.push_back(x);
      if (v < res.best) {
        res.best = v;
        res.sequence = path;
      }
      // Each later step lowers val by at most one and uses up an element of f \ u2.
      if (v - (f - u2).size() < res.best) self(self, u2, k2);
      path.members.pop_back();
    }
  };
  dfs(dfs, EdgeSet{}, 0);
  done();
  return res;
}

/// Greedy weakly saturated sequence for f from f0: each added pattern copy
/// lies in f and has exactly one element outside f0 and the earlier copies.
/// Returns nothing if f cannot be reached.
inline std::optional<ProperSequence> weakly_saturated_sequence(const EdgeSet& f0, const EdgeSet& f,
                                                               const std::vector<EdgeSet>& patterns) {
  if (!f0.is_subset_of(f)) throw std::invalid_argument("weakly_saturated_sequence: f0 must lie inside f");
  ProperSequence seq;
  EdgeSet covered = f0;
  bool progress = true;
  while (covered != f && progress) {
    progress = false;
    for (const auto& x : patterns) {
      if (x.is_subset_of(f) && (x - covered).size() == 1) {
        covered |= x;
        seq.members.push_back(x);
        progress = true;
      }
    }
  }
  if (covered != f) return std::nullopt;
  return seq;
}

/// Rank, cyclicity and largest cyclic subset for every subset of a small
/// ground set.
class SubsetTables {
 public:
  static constexpr int kMaxGround = 15;

  explicit SubsetTables(const ExplicitMatroid& m) : m_(m), size_(m.ground_size()) {
    if (size_ > kMaxGround) throw std::invalid_argument("erection engine: more than 15 ground elements");
    const std::uint32_t total = std::uint32_t{1} << size_;
    cyclic_.assign(total, 0);
    cyc_.assign(total, 0);
    for (std::uint32_t x = 0; x < total; ++x) {
      const int r = m.rank_of_mask(x);
      std::uint32_t coloop = 0;
      for (std::uint32_t b = x; b != 0 && coloop == 0; b &= b - 1) {
        const std::uint32_t e = b & (~b + 1);
        if (m.rank_of_mask(x & ~e) < r) coloop = e;
      }
      cyclic_[x] = coloop == 0;
      cyc_[x] = coloop == 0 ? x : cyc_[x & ~coloop];  // a coloop lies in no circuit of X
    }
  }

  const ExplicitMatroid& matroid() const { return m_; }
  int ground_size() const { return size_; }
  bool cyclic(std::uint32_t x) const { return cyclic_[x] != 0; }
  std::uint32_t cyc(std::uint32_t x) const { return cyc_[x]; }

 private:
  ExplicitMatroid m_;
  int size_;
  std::vector<std::uint8_t> cyclic_;
  std::vector<std::uint32_t> cyc_;
};

/// A family of subsets of a ground set with at most 15 elements.
class SetFamily {
 public:
  explicit SetFamily(int ground_size) : size_(ground_size), in_(std::size_t{1} << ground_size, 0) {}

  int ground_size() const { return size_; }
  bool contains(std::uint32_t x) const { return in_[x] != 0; }
  bool insert(std::uint32_t x) {
    if (in_[x]) return false;
    in_[x] = 1;
    members_.push_back(x);
    return true;
  }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::uint32_t>& members() const { return members_; }

  /// Members in increasing numeric order.
  std::vector<std::uint32_t> sorted() const {
    auto out = members_;
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const SetFamily& o) const { return size_ == o.size_ && in_ == o.in_; }

 private:
  int size_;
  std::vector<std::uint8_t> in_;
  std::vector<std::uint32_t> members_;
};

/// Adds every cyclic subset of every member, and the empty set.
inline SetFamily down_closure(const SetFamily& fam, const SubsetTables& tab) {
  const int m = tab.ground_size();
  const std::uint32_t total = std::uint32_t{1} << m;
  std::vector<std::uint8_t> below(total, 0);
  for (std::uint32_t x : fam.members()) below[x] = 1;
  for (int bit = 0; bit < m; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t x = 0; x < total; ++x)
      if (!(x & b) && below[x | b]) below[x] = 1;
  }
  SetFamily out(m);
  out.insert(0);
  for (std::uint32_t x : fam.members()) out.insert(x);
  for (std::uint32_t x = 0; x < total; ++x)
    if (below[x] && tab.cyclic(x)) out.insert(x);
  return out;
}

inline bool is_modular_pair(const ExplicitMatroid& m, std::uint32_t x, std::uint32_t y) {
  return m.rank_of_mask(x) + m.rank_of_mask(y) == m.rank_of_mask(x | y) + m.rank_of_mask(x & y);
}

struct ClosureStats {
  int rounds = 0;
  long long pairs_examined = 0;
};

/// Fixpoint of F <- (F cup {X cup Y : X, Y in F modular})^down, starting
/// from F^down. Each round pairs only the sets added in the previous round
/// with the whole family; pairs of older sets were examined before.
inline SetFamily modular_closure(const SetFamily& fam, const SubsetTables& tab, ClosureStats* stats = nullptr) {
  const ExplicitMatroid& m = tab.matroid();
  SetFamily cur = down_closure(fam, tab);
  std::vector<std::uint32_t> fresh = cur.members();
  ClosureStats local;
  while (!fresh.empty()) {
    ++local.rounds;
    SetFamily next = cur;
    const std::vector<std::uint32_t> all = cur.members();
    bool grew = false;
    for (std::uint32_t x : fresh) {
      for (std::uint32_t y : all) {
        ++local.pairs_examined;
        const std::uint32_t u = x | y;
        if (next.contains(u)) continue;
        if (is_modular_pair(m, x, y)) grew |= next.insert(u);
      }
    }
    if (!grew) break;
    SetFamily closed = down_closure(next, tab);
    fresh.clear();
    for (std::uint32_t x : closed.members())
      if (!cur.contains(x)) fresh.push_back(x);
    cur = std::move(closed);
  }
  if (stats) *stats = local;
  return cur;
}

/// Non-spanning cyclic sets of m (including the empty set).
inline SetFamily nonspanning_cyclic_sets(const SubsetTables& tab) {
  const ExplicitMatroid& m = tab.matroid();
  const int r = m.full_rank();
  SetFamily out(tab.ground_size());
  const std::uint32_t total = std::uint32_t{1} << tab.ground_size();
  for (std::uint32_t x = 0; x < total; ++x)
    if (tab.cyclic(x) && m.rank_of_mask(x) < r) out.insert(x);
  return out;
}

struct ErectionResult {
  ExplicitMatroid matroid;
  bool trivial = true;
  std::size_t closure_size = 0;
  ClosureStats stats;
};

/// Free erection: r'(X) = r(X) + 1 exactly when cyc(X) is outside the
/// modular closure of the non-spanning cyclic sets.
inline ErectionResult free_erection(const ExplicitMatroid& m) {
  const SubsetTables tab(m);
  ClosureStats stats;
  const SetFamily closed = modular_closure(nonspanning_cyclic_sets(tab), tab, &stats);
  const std::uint32_t total = std::uint32_t{1} << m.ground_size();
  std::vector<std::uint8_t> table(total);
  bool same = true;
  for (std::uint32_t x = 0; x < total; ++x) {
    const int bump = closed.contains(tab.cyc(x)) ? 0 : 1;
    table[x] = static_cast<std::uint8_t>(m.rank_of_mask(x) + bump);
    same &= bump == 0;
  }
  const bool shortcut = closed.contains(tab.cyc(total - 1));
  if (shortcut != same)
    throw std::logic_error("free_erection: table comparison and cyc(E) test disagree on triviality");
  ErectionResult res{ExplicitMatroid(m.ground_size(), std::move(table)), same, closed.size(), stats};
  if (!same && truncate(res.matroid) != m)
    throw std::logic_error("free_erection: truncation of the erection differs from the input");
  return res;
}

struct ElevationResult {
  ExplicitMatroid matroid;
  std::vector<int> ranks;  // rank after each step, starting with the input rank
  bool stopped_at_cap = false;
};

/// Iterates free erections until one is trivial or the rank reaches rank_cap.
inline ElevationResult free_elevation(const ExplicitMatroid& m, std::optional<int> rank_cap = std::nullopt) {
  ElevationResult res{m, {m.full_rank()}, false};
  while (true) {
    if (rank_cap && res.matroid.full_rank() >= *rank_cap) {
      res.stopped_at_cap = true;
      return res;
    }
    ErectionResult step = free_erection(res.matroid);
    if (step.trivial) return res;
    res.matroid = std::move(step.matroid);
    res.ranks.push_back(res.matroid.full_rank());
  }
}

}  // namespace symtensor
