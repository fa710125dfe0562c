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


#include "symtensor/matroid.hpp"

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "symtensor/geometric.hpp"

namespace symtensor {
namespace {

// Cycle matroid of K_n via union-find.
struct GraphicOracle {
  int n;
  EdgeSet ground() const { return EdgeSet::full(edge_count(n)); }
  int rank(const EdgeSet& x) const {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    const auto edges = canonical_edges(n);
    int r = 0;
    x.for_each([&](int e) {
      const int a = find(edges[static_cast<std::size_t>(e)].u), b = find(edges[static_cast<std::size_t>(e)].v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        ++r;
      }
    });
    return r;
  }
};

// K_4 is planar and self-dual: edge ij is crossed by the dual edge joining
// the two faces that miss i and j, i.e. the edge on the other two vertices.
EdgeSet k4_dual_edges(const EdgeSet& x) {
  EdgeSet out;
  for (const Edge& e : LabeledGraph(4, x).edge_list()) {
    std::vector<int> rest;
    for (int v = 0; v < 4; ++v)
      if (v != e.u && v != e.v) rest.push_back(v);
    out.insert(edge_index(4, rest[0], rest[1]));
  }
  return out;
}

// Every set that is a circuit, found by checking minimal dependence directly.
std::vector<std::uint32_t> all_circuits(const ExplicitMatroid& m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 1; x < (std::uint32_t{1} << m.ground_size()); ++x) {
    if (m.rank_of_mask(x) == std::popcount(x)) continue;
    bool minimal = true;
    for (int e = 0; e < m.ground_size() && minimal; ++e)
      if ((x >> e & 1u) && m.rank_of_mask(x & ~(1u << e)) != std::popcount(x) - 1) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

TEST(Dual, CycleMatroidOfK4) {
  const GraphicOracle k4{4};
  const EdgeSet triangle = clique_edges(4, {0, 1, 2});
  EXPECT_EQ(dual_rank(k4, triangle), 3);
  for (std::uint32_t x = 0; x < 64; ++x) {
    const EdgeSet s = EdgeSet::from_words(x);
    EXPECT_EQ(dual_rank(k4, s), k4.rank(k4_dual_edges(s))) << s.to_string();
  }
}

TEST(Dual, DoubleDualIsIdentity) {
  const auto s = GenericLinearMatroid(5, LinearModel::symmetric_tensor(3)).to_explicit();
  const DualOracle<ExplicitMatroid> d(s);
  const DualOracle<DualOracle<ExplicitMatroid>> dd(d);
  EXPECT_TRUE(matroids_equal(s, dd, Exhaustive{}).equal);
  EXPECT_EQ(full_rank(d), 10 - 6);
  EXPECT_FALSE(ExplicitMatroid::tabulate(d).axiom_violation().has_value());
}

TEST(Contract, StarOfSymmetricTensorMatroid) {
  const GenericLinearMatroid s(4, LinearModel::symmetric_tensor(2));
  const auto c = contract(s, vertex_star(4, 3));
  EXPECT_EQ(c.ground(), clique_edges(4, {0, 1, 2}));
  EXPECT_EQ(full_rank(c), 1);
  EXPECT_THROW(contract(s, EdgeSet::of({7})), std::invalid_argument);
}

TEST(Restrict, KeepsRanks) {
  const GraphicOracle k5{5};
  const RestrictedOracle r(k5, clique_edges(5, {0, 1, 2, 3}));
  EXPECT_EQ(full_rank(r), 3);
  EXPECT_EQ(r.rank(EdgeSet::of({0})), 1);
}

TEST(Closure, GraphicClosureAddsChords) {
  const GraphicOracle k5{5};
  const EdgeSet path = LabeledGraph::from_edges(5, {{0, 1}, {1, 2}}).edges();
  EXPECT_EQ(closure(k5, path), clique_edges(5, {0, 1, 2}));
  EXPECT_TRUE(is_flat(k5, clique_edges(5, {0, 1, 2})));
  EXPECT_FALSE(is_flat(k5, path));
}

TEST(Circuits, GraphicCircuitsAreCycles) {
  const GraphicOracle k5{5};
  EXPECT_TRUE(is_circuit(k5, clique_edges(5, {0, 1, 2})));
  EXPECT_TRUE(is_circuit(k5, LabeledGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}).edges()));
  EXPECT_FALSE(is_circuit(k5, clique_edges(5, {0, 1, 2, 3})));
  EXPECT_FALSE(is_circuit(k5, EdgeSet{}));
  // Cocircuits are minimal cuts: a vertex star.
  EXPECT_TRUE(is_cocircuit(k5, vertex_star(5, 2)));
  EXPECT_FALSE(is_cocircuit(k5, vertex_star(5, 2).without(edge_index(5, 0, 2))));
}

TEST(Circuits, CocircuitRoutesAgree) {
  const auto s = GenericLinearMatroid(5, LinearModel::symmetric_tensor(2)).to_explicit();
  int count = 0;
  for (std::uint32_t x = 0; x < 1024; ++x) {
    const EdgeSet e = EdgeSet::from_words(x);
    const bool a = is_cocircuit(s, e), b = complement_is_hyperplane(s, e);
    ASSERT_EQ(a, b) << e.to_string();
    count += a;
  }
  EXPECT_GT(count, 0);
}

TEST(Cyclic, CycIsUnionOfCircuitsInside) {
  const auto s = GenericLinearMatroid(5, LinearModel::symmetric_tensor(3)).to_explicit();
  const auto circuits = all_circuits(s);
  std::mt19937_64 eng(3);
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t x = static_cast<std::uint32_t>(eng() & 1023u);
    std::uint32_t expected = 0;
    for (std::uint32_t c : circuits)
      if ((c & ~x) == 0) expected |= c;
    const EdgeSet got = cyc(s, EdgeSet::from_words(x));
    EXPECT_EQ(got, EdgeSet::from_words(expected));
    EXPECT_TRUE(is_cyclic(s, got));
    EXPECT_EQ(cyc(s, got), got);
    EXPECT_EQ(is_cyclic(s, EdgeSet::from_words(x)), expected == x);
  }
}

TEST(Truncate, CapsRank) {
  const auto s = GenericLinearMatroid(5, LinearModel::symmetric_tensor(3)).to_explicit();
  const auto t = truncate(s);
  EXPECT_EQ(t.full_rank(), 5);
  for (std::uint32_t x = 0; x < 1024; ++x) EXPECT_EQ(t.rank_of_mask(x), std::min(s.rank_of_mask(x), 5));
  EXPECT_THROW(truncate(ExplicitMatroid(0, {0})), std::invalid_argument);
}

TEST(Circuits, NonspanningCircuitsOfK4) {
  const auto m = ExplicitMatroid::tabulate(GraphicOracle{4});
  const auto cs = nonspanning_circuits(m);
  ASSERT_EQ(cs.size(), 4u);
  for (const auto& c : cs) EXPECT_EQ(c.size(), 3);
}

TEST(Circuits, NonspanningMatchesExhaustiveEnumeration) {
  const auto s = GenericLinearMatroid(5, LinearModel::symmetric_tensor(3)).to_explicit();
  std::set<EdgeSet> expected;
  for (std::uint32_t c : all_circuits(s))
    if (s.rank_of_mask(c) < s.full_rank()) expected.insert(EdgeSet::from_words(c));
  const auto got = nonspanning_circuits(s);
  EXPECT_EQ(std::set<EdgeSet>(got.begin(), got.end()), expected);
  for (std::size_t i = 1; i < got.size(); ++i) EXPECT_LE(got[i - 1].size(), got[i].size());
}

TEST(Explicit, RejectsNonMatroidTables) {
  EXPECT_THROW(ExplicitMatroid(1, {1, 1}), std::invalid_argument);
  EXPECT_THROW(ExplicitMatroid(1, {0, 2}), std::invalid_argument);
  EXPECT_THROW(ExplicitMatroid(2, {0, 1, 1}), std::invalid_argument);
  // Two parallel-looking elements whose union jumps by two.
  EXPECT_THROW(ExplicitMatroid(2, {0, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(ExplicitMatroid(23, {}), std::invalid_argument);
  EXPECT_NO_THROW(ExplicitMatroid(2, {0, 1, 1, 1}));
}

TEST(Explicit, SaveLoadRoundTrip) {
  const auto s = GenericLinearMatroid(6, LinearModel::symmetric_tensor(3)).to_explicit();
  std::stringstream buf;
  s.save(buf);
  EXPECT_EQ(buf.str().substr(0, 7), "m 15 6\n");
  const auto back = ExplicitMatroid::load(buf);
  EXPECT_EQ(back, s);
}

TEST(Explicit, LoadRejectsCorruptInput) {
  auto load = [](const std::string& s) {
    std::stringstream in(s);
    return ExplicitMatroid::load(in);
  };
  EXPECT_THROW(load("x 1 1\nAAE=\n"), std::invalid_argument);
  EXPECT_THROW(load("m 1 1\nAAE\n"), std::invalid_argument);
  EXPECT_THROW(load("m 2 1\nAAE=\n"), std::invalid_argument);
  EXPECT_THROW(load("m 1 0\nAAE=\n"), std::invalid_argument);
  EXPECT_EQ(load("m 1 1\nAAE=\n").full_rank(), 1);
}

TEST(Equality, FindsFirstDifference) {
  const auto a = ExplicitMatroid::tabulate(GraphicOracle{4});
  const auto b = truncate(a);
  const auto res = matroids_equal(a, b, Exhaustive{});
  EXPECT_FALSE(res.equal);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(a.rank(*res.witness), 3);
  EXPECT_TRUE(matroids_equal(a, GraphicOracle{4}, Exhaustive{}).equal);
  EXPECT_TRUE(matroids_equal(a, GraphicOracle{4}, Sampled{200, 5}).equal);
  EXPECT_FALSE(matroids_equal(a, b, Sampled{200, 5}).equal);
}

TEST(Subsets, OrderedBySize) {
  std::vector<std::uint32_t> seen;
  for_each_subset_by_size(4, [&](std::uint32_t x) { seen.push_back(x); });
  ASSERT_EQ(seen.size(), 16u);
  for (std::size_t i = 1; i < seen.size(); ++i) {
    const int a = std::popcount(seen[i - 1]), b = std::popcount(seen[i]);
    EXPECT_TRUE(a < b || (a == b && seen[i - 1] < seen[i]));
  }
}

struct BrokenOracle {
  EdgeSet ground() const { return EdgeSet::full(6); }
  int rank(const EdgeSet& x) const { return x.size() >= 4 ? 1 : std::min(x.size(), 2); }
};

TEST(Axioms, SampledCheckCatchesNonMatroid) {
  EXPECT_FALSE(sampled_axiom_violation(GraphicOracle{5}, 500, 1).has_value());
  EXPECT_TRUE(sampled_axiom_violation(BrokenOracle{}, 500, 1).has_value());
}

}  // namespace
}  // namespace symtensor
