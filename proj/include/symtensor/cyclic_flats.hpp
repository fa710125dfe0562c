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


// Matroids given by their cyclic flats and the ranks of those flats.
//
// A ranked family is checked against the lattice axioms (Z0)-(Z3); only a
// family that passes becomes a CyclicFlatLattice, whose rank function is
// r(X) = min over flats Z of r(Z) + |X \ Z|.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symtensor/edge_set.hpp"
#include "symtensor/graphs.hpp"
#include "symtensor/matroid.hpp"

namespace symtensor {

struct RankedSet {
  EdgeSet set;
  int rank = 0;
  bool operator==(const RankedSet&) const = default;
};

struct RankedFamily {
  int ground_size = 0;
  std::vector<RankedSet> members;
};

struct AxiomViolation {
  std::string axiom;  // "Z0", "Z1", "Z2" or "Z3"
  int first = -1;     // member indices
  int second = -1;
  std::string detail;
};

struct CyclicFlatReport {
  bool z0 = true;
  bool z1 = true;
  bool z2 = true;
  bool z3 = true;
  long long violation_count = 0;
  std::vector<AxiomViolation> violations;  // the first few, in scan order
  bool ok() const { return z0 && z1 && z2 && z3; }
};

namespace detail {

/// Index of the greatest member below `bound` (or least above it when `up`),
/// or -1 when the bounds have no extreme element.
inline int lattice_extreme(const std::vector<RankedSet>& ms, const EdgeSet& bound, bool up) {
  int best = -1;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const EdgeSet& z = ms[i].set;
    const bool ok = up ? bound.is_subset_of(z) : z.is_subset_of(bound);
    if (!ok) continue;
    if (best < 0 || (up ? z.is_subset_of(ms[static_cast<std::size_t>(best)].set)
                        : ms[static_cast<std::size_t>(best)].set.is_subset_of(z)))
      best = static_cast<int>(i);
  }
  if (best < 0) return -1;
  const EdgeSet& cand = ms[static_cast<std::size_t>(best)].set;
  for (const auto& m : ms) {
    const bool ok = up ? bound.is_subset_of(m.set) : m.set.is_subset_of(bound);
    if (ok && !(up ? cand.is_subset_of(m.set) : m.set.is_subset_of(cand))) return -1;
  }
  return best;
}

}  // namespace detail

/// Checks (Z0) meets and joins of all pairs exist, (Z1) the bottom has rank
/// 0, (Z2) 0 < r(Y) - r(X) < |Y \ X| for X strictly inside Y, and (Z3)
/// r(X) + r(Y) >= r(X meet Y) + r(X join Y) + |(X cap Y) \ (X meet Y)|.
inline CyclicFlatReport check_cyclic_flat_axioms(const RankedFamily& fam, std::size_t max_reported = 20) {
  const auto& ms = fam.members;
  if (ms.empty()) throw std::invalid_argument("cyclic flats: empty family");
  {
    std::set<EdgeSet> seen;
    for (const auto& m : ms) {
      if (m.rank < 0) throw std::invalid_argument("cyclic flats: negative rank");
      if (!seen.insert(m.set).second) throw std::invalid_argument("cyclic flats: duplicate member " + m.set.to_string());
      if (!m.set.is_subset_of(EdgeSet::full(fam.ground_size)))
        throw std::invalid_argument("cyclic flats: member outside the ground set");
    }
  }
  EdgeSet common = ms.front().set;
  for (const auto& m : ms) common &= m.set;
  const int bottom = detail::lattice_extreme(ms, common, false);
  if (bottom < 0 || ms[static_cast<std::size_t>(bottom)].set != common)
    throw std::invalid_argument("cyclic flats: family has no minimum element");

  CyclicFlatReport rep;
  auto report = [&](const char* axiom, int i, int j, std::string why) {
    ++rep.violation_count;
    if (rep.violations.size() < max_reported) rep.violations.push_back({axiom, i, j, std::move(why)});
  };
  if (ms[static_cast<std::size_t>(bottom)].rank != 0) {
    rep.z1 = false;
    report("Z1", bottom, bottom, "minimum element has nonzero rank");
  }
  const int k = static_cast<int>(ms.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const RankedSet& x = ms[static_cast<std::size_t>(i)];
      const RankedSet& y = ms[static_cast<std::size_t>(j)];
      for (int pass = 0; pass < 2 && i != j; ++pass) {
        const RankedSet& lo = pass == 0 ? x : y;
        const RankedSet& hi = pass == 0 ? y : x;
        if (lo.set.is_subset_of(hi.set)) {
          const int dr = hi.rank - lo.rank;
          const int ds = (hi.set - lo.set).size();
          if (!(0 < dr && dr < ds)) {
            rep.z2 = false;
            report("Z2", pass == 0 ? i : j, pass == 0 ? j : i,
                   "rank difference " + std::to_string(dr) + " vs size difference " + std::to_string(ds));
          }
        }
      }
      const int meet = detail::lattice_extreme(ms, x.set & y.set, false);
      const int join = detail::lattice_extreme(ms, x.set | y.set, true);
      if (meet < 0 || join < 0) {
        rep.z0 = false;
        report("Z0", i, j, meet < 0 ? "no greatest lower bound" : "no least upper bound");
        continue;
      }
      const RankedSet& mt = ms[static_cast<std::size_t>(meet)];
      const RankedSet& jn = ms[static_cast<std::size_t>(join)];
      const int lhs = x.rank + y.rank;
      const int rhs = mt.rank + jn.rank + ((x.set & y.set) - mt.set).size();
      if (lhs < rhs) {
        rep.z3 = false;
        report("Z3", i, j, std::to_string(lhs) + " < " + std::to_string(rhs));
      }
    }
  }
  return rep;
}

class CyclicFlatError : public std::invalid_argument {
 public:
  CyclicFlatError(const std::string& what, CyclicFlatReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const CyclicFlatReport& report() const { return report_; }

 private:
  CyclicFlatReport report_;
};

/// A ranked family that has passed check_cyclic_flat_axioms.
class CyclicFlatLattice {
 public:
  static CyclicFlatLattice verify(RankedFamily fam) {
    CyclicFlatReport rep = check_cyclic_flat_axioms(fam);
    if (!rep.ok()) {
      const auto& v = rep.violations.front();
      throw CyclicFlatError("cyclic flat axioms fail: " + v.axiom + " " + v.detail, std::move(rep));
    }
    return CyclicFlatLattice(std::move(fam));
  }

  const RankedFamily& family() const { return fam_; }
  int ground_size() const { return fam_.ground_size; }
  EdgeSet ground() const { return EdgeSet::full(fam_.ground_size); }

  int rank(const EdgeSet& x) const {
    int best = x.size();
    for (const auto& z : fam_.members) best = std::min(best, z.rank + (x - z.set).size());
    return best;
  }

  ExplicitMatroid to_explicit() const {
    if (fam_.ground_size > ExplicitMatroid::kMaxGround)
      throw std::invalid_argument("cyclic flats: ground set too large for a rank table");
    std::vector<std::pair<std::uint32_t, int>> zs;
    for (const auto& z : fam_.members) zs.push_back({z.set.to_mask32(), z.rank});
    return ExplicitMatroid::from_function(fam_.ground_size, [&](std::uint32_t x) {
      int best = std::popcount(x);
      for (const auto& [z, r] : zs) best = std::min(best, r + std::popcount(x & ~z));
      return best;
    });
  }

 private:
  explicit CyclicFlatLattice(RankedFamily fam) : fam_(std::move(fam)) {}
  RankedFamily fam_;
};

inline int rank_from_cyclic_flats(const CyclicFlatLattice& lattice, const EdgeSet& x) { return lattice.rank(x); }

struct MtnSpec {
  int t = 3;
  int n = 4;

  int tau() const { return (2 * t + 1) / 3; }
  int f(int b) const { return (t - 1) * b - b * (b - 1) / 2; }
  void validate() const {
    if (t < 3 || n < t + 1) throw std::invalid_argument("M_{t,n} needs t >= 3 and n >= t+1");
    if (n > kMaxVertices) throw std::invalid_argument("M_{t,n}: n too large");
  }
};

/// Cyclic flats: the edges meeting a b-set of vertices, rank f(b), for
/// 1 <= b <= tau-1; the empty set; the whole edge set at rank f(tau).
inline RankedFamily mtn_family(const MtnSpec& spec) {
  spec.validate();
  const int n = spec.n;
  RankedFamily fam{edge_count(n), {{EdgeSet{}, 0}}};
  for (int b = 1; b <= spec.tau() - 1; ++b)
    for_each_combination(iota_vertices(n), b, [&](const std::vector<int>& bs) {
      fam.members.push_back({instantiate_shape(n, ShapeDescriptor::cone(b), {bs, {}, {}}).edges(), spec.f(b)});
    });
  fam.members.push_back({EdgeSet::full(edge_count(n)), spec.f(spec.tau())});
  return fam;
}

/// Cyclic flats: cones over one, two and three vertices at ranks 4, 7 and 9,
/// every K_{3,3} at rank 8, and the whole edge set at rank 10.
inline RankedFamily remark_n_family(int n) {
  if (n < 7) throw std::invalid_argument("matroid N needs n >= 7");
  if (n > kMaxVertices) throw std::invalid_argument("matroid N: n too large");
  RankedFamily fam{edge_count(n), {{EdgeSet{}, 0}}};
  const std::vector<int> all = iota_vertices(n);
  const int cone_rank[] = {0, 4, 7, 9};
  for (int b = 1; b <= 2; ++b)
    for_each_combination(all, b, [&](const std::vector<int>& bs) {
      fam.members.push_back({instantiate_shape(n, ShapeDescriptor::cone(b), {bs, {}, {}}).edges(), cone_rank[b]});
    });
  for (const auto& p : shape_placements(n, ShapeDescriptor::biclique(0, 3, 3))) fam.members.push_back({p.edges, 8});
  for_each_combination(all, 3, [&](const std::vector<int>& bs) {
    fam.members.push_back({instantiate_shape(n, ShapeDescriptor::cone(3), {bs, {}, {}}).edges(), cone_rank[3]});
  });
  fam.members.push_back({EdgeSet::full(edge_count(n)), 10});
  return fam;
}

struct BuiltMatroid {
  CyclicFlatLattice lattice;
  ExplicitMatroid matroid;
};

inline BuiltMatroid build_mtn(const MtnSpec& spec) {
  auto lattice = CyclicFlatLattice::verify(mtn_family(spec));
  auto table = lattice.to_explicit();
  return {std::move(lattice), std::move(table)};
}

inline BuiltMatroid build_remark_n(int n) {
  auto lattice = CyclicFlatLattice::verify(remark_n_family(n));
  auto table = lattice.to_explicit();
  return {std::move(lattice), std::move(table)};
}

/// One member per line: "<rank> <edge indices separated by spaces>".
inline void save_family(const RankedFamily& fam, std::ostream& out) {
  for (const auto& m : fam.members) {
    out << m.rank;
    m.set.for_each([&](int e) { out << ' ' << e; });
    out << '\n';
  }
}

inline RankedFamily load_family(std::istream& in, int ground_size) {
  RankedFamily fam{ground_size, {}};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t\r")] == '#') continue;
    std::istringstream ls(line);
    RankedSet m;
    if (!(ls >> m.rank)) throw std::invalid_argument("family line " + std::to_string(lineno) + ": missing rank");
    int e = 0;
    while (ls >> e) {
      if (e < 0 || e >= ground_size)
        throw std::invalid_argument("family line " + std::to_string(lineno) + ": edge index out of range");
      m.set.insert(e);
    }
    if (!ls.eof()) throw std::invalid_argument("family line " + std::to_string(lineno) + ": bad token");
    fam.members.push_back(m);
  }
  return fam;
}

}  // namespace symtensor
