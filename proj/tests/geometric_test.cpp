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


#include "symtensor/geometric.hpp"

#include <numeric>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "symtensor/matroid.hpp"

namespace symtensor {
namespace {

GenericLinearMatroid sym(int n, int t) { return GenericLinearMatroid(n, LinearModel::symmetric_tensor(t)); }
GenericLinearMatroid rig(int n, int d) { return GenericLinearMatroid(n, LinearModel::rigidity(d)); }

LabeledGraph biclique(int n, const std::vector<int>& a, const std::vector<int>& b) {
  LabeledGraph g(n);
  for (int u : a)
    for (int v : b) g.add_edge(u, v);
  return g;
}

// Graphic matroid rank: n minus the number of components of (V, x).
int graphic_rank(int n, const EdgeSet& x) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  int r = 0;
  const auto edges = canonical_edges(n);
  x.for_each([&](int e) {
    const int a = find(edges[static_cast<std::size_t>(e)].u), b = find(edges[static_cast<std::size_t>(e)].v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      ++r;
    }
  });
  return r;
}

// Planar rigidity rank by greedy over Laman-sparse edge sets: F is
// independent iff every nonempty F' of F spans at least (|F'| + 3) / 2 vertices.
bool laman_sparse(int n, const std::vector<Edge>& f) {
  const std::size_t k = f.size();
  for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << k); ++sub) {
    VertexMask vs = 0;
    int edges = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (sub >> i & 1u) {
        vs |= (VertexMask{1} << f[i].u) | (VertexMask{1} << f[i].v);
        ++edges;
      }
    if (edges > 2 * std::popcount(vs) - 3) return false;
  }
  (void)n;
  return true;
}

int laman_rank(int n, const EdgeSet& x) {
  const auto edges = canonical_edges(n);
  std::vector<Edge> chosen;
  x.for_each([&](int e) {
    chosen.push_back(edges[static_cast<std::size_t>(e)]);
    if (!laman_sparse(n, chosen)) chosen.pop_back();
  });
  return static_cast<int>(chosen.size());
}

// The symmetric tensor rank through full t x t matrices p_i p_j^T + p_j p_i^T.
int full_square_rank(int n, int t, const EdgeSet& x, const FieldConfig& cfg) {
  const auto pts = random_point_configuration(n, t, cfg);
  const PrimeField f(cfg.modulus);
  FieldMatrix m(0, static_cast<std::size_t>(t * t), cfg.modulus);
  const auto edges = canonical_edges(n);
  x.for_each([&](int e) {
    const auto& p = pts[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u)];
    const auto& q = pts[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v)];
    std::vector<std::uint64_t> row;
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b)
        row.push_back(f.add(f.mul(p[static_cast<std::size_t>(a)], q[static_cast<std::size_t>(b)]),
                            f.mul(q[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)])));
    m.push_row(row);
  });
  return static_cast<int>(matrix_rank(m));
}

TEST(Model, ParseAndFormat) {
  EXPECT_EQ(LinearModel::parse("S:4"), LinearModel::symmetric_tensor(4));
  EXPECT_EQ(LinearModel::parse("R:2"), LinearModel::rigidity(2));
  EXPECT_EQ(LinearModel::rigidity(3).to_string(), "R:3");
  for (const char* bad : {"", "S", "S:", "S:0", "X:2", "S:2x", "R:-1"})
    EXPECT_THROW(LinearModel::parse(bad), std::invalid_argument) << bad;
}

TEST(Matrices, SymmetricTensorEntries) {
  const PointConfiguration pts = {{1, 2}, {3, 5}, {0, 1}};
  const auto m = symmetric_tensor_matrix(LabeledGraph::from_edges(3, {{0, 1}, {1, 2}}), 2, pts);
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 3u);
  // Columns (0,0), (0,1), (1,1).
  EXPECT_EQ(m.at(0, 0), 6u);
  EXPECT_EQ(m.at(0, 1), 11u);
  EXPECT_EQ(m.at(0, 2), 20u);
  EXPECT_EQ(m.at(1, 0), 0u);
  EXPECT_EQ(m.at(1, 1), 3u);
  EXPECT_EQ(m.at(1, 2), 10u);
}

TEST(Matrices, RigidityEntries) {
  const PointConfiguration pts = {{1, 2}, {4, 7}, {0, 0}};
  const auto m = rigidity_matrix(LabeledGraph::from_edges(3, {{0, 1}}), 2, pts);
  ASSERT_EQ(m.cols(), 6u);
  const PrimeField f;
  EXPECT_EQ(m.at(0, 0), f.from_int(-3));
  EXPECT_EQ(m.at(0, 1), f.from_int(-5));
  EXPECT_EQ(m.at(0, 2), 3u);
  EXPECT_EQ(m.at(0, 3), 5u);
  EXPECT_EQ(m.at(0, 4), 0u);
  EXPECT_THROW(rigidity_matrix(LabeledGraph(4), 2, pts), std::invalid_argument);
}

TEST(GenericRank, SpecExamples) {
  const auto s2 = sym(4, 2);
  EXPECT_EQ(s2.rank(LabeledGraph::complete(4)), 3);
  EXPECT_EQ(s2.rank(LabeledGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})), 2);
  EXPECT_EQ(sym(6, 4).rank(biclique(6, {0, 1, 2}, {3, 4, 5})), 8);
  EXPECT_EQ(s2.rank(EdgeSet{}), 0);
}

TEST(GenericRank, FullRankIdentities) {
  for (int t = 1; t <= 5; ++t)
    for (int n = t + 1; n <= 8; ++n) EXPECT_EQ(full_rank(sym(n, t)), t * (t + 1) / 2) << "S_" << t << " K_" << n;
  for (int d = 1; d <= 3; ++d)
    for (int n = d + 2; n <= 8; ++n) EXPECT_EQ(full_rank(rig(n, d)), d * n - d * (d + 1) / 2) << "R_" << d << " K_" << n;
}

TEST(GenericRank, LineRigidityIsGraphic) {
  for (int n = 3; n <= 6; ++n) {
    const auto table = rig(n, 1).to_explicit();
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << edge_count(n)); ++x)
      ASSERT_EQ(table.rank_of_mask(x), graphic_rank(n, EdgeSet::from_words(x))) << EdgeSet::from_words(x).to_string();
  }
}

TEST(GenericRank, PlaneRigidityMatchesLamanCount) {
  const auto r2 = rig(6, 2);
  std::mt19937_64 eng(17);
  for (int i = 0; i < 400; ++i) {
    const EdgeSet x = EdgeSet::from_words(eng() & ((1u << 15) - 1));
    ASSERT_EQ(r2.rank(x), laman_rank(6, x)) << x.to_string();
  }
}

TEST(GenericRank, SymmetricTensorOfDimensionOne) {
  const auto s1 = sym(5, 1);
  std::mt19937_64 eng(2);
  for (int i = 0; i < 50; ++i) {
    const EdgeSet x = EdgeSet::from_words(eng() & 1023u);
    EXPECT_EQ(s1.rank(x), x.empty() ? 0 : 1);
  }
}

TEST(GenericRank, AgreesWithFullSquareCoordinates) {
  std::mt19937_64 eng(23);
  for (int t = 2; t <= 5; ++t) {
    const int n = t + 2;
    const auto s = sym(n, t);
    for (int i = 0; i < 60; ++i) {
      const EdgeSet x = EdgeSet::from_words(eng()) & s.ground();
      EXPECT_EQ(s.rank(x), full_square_rank(n, t, x, s.config()));
    }
  }
}

TEST(GenericRank, ExplicitTableMatchesQueries) {
  const auto s = sym(5, 3);
  const auto table = s.to_explicit();
  EXPECT_FALSE(table.axiom_violation().has_value());
  for (std::uint32_t x = 0; x < 1024; x += 7) EXPECT_EQ(table.rank_of_mask(x), s.rank(EdgeSet::from_words(x)));
}

TEST(GenericRank, Deterministic) {
  const GenericLinearMatroid a(7, LinearModel::symmetric_tensor(4), FieldConfig{kMersenne61, 99});
  const GenericLinearMatroid b(7, LinearModel::symmetric_tensor(4), FieldConfig{kMersenne61, 99});
  std::mt19937_64 eng(1);
  for (int i = 0; i < 50; ++i) {
    const EdgeSet x = EdgeSet::from_words(eng()) & a.ground();
    EXPECT_EQ(a.rank_in_trial(x, 0), b.rank_in_trial(x, 0));
    EXPECT_EQ(a.rank_in_trial(x, 1), b.rank_in_trial(x, 1));
  }
}

TEST(GenericRank, OtherPrimeGivesSameRanks) {
  const auto s = sym(6, 3);
  const GenericLinearMatroid other(6, LinearModel::symmetric_tensor(3), FieldConfig{4294967311ULL, 5}, 3);
  std::mt19937_64 eng(12);
  for (int i = 0; i < 200; ++i) {
    const EdgeSet x = EdgeSet::from_words(eng()) & s.ground();
    EXPECT_EQ(s.rank(x), other.rank(x));
  }
}

TEST(GenericRank, ConcurrentQueriesMatchSequential) {
  const auto s = sym(7, 4);
  std::mt19937_64 eng(31);
  std::vector<EdgeSet> queries;
  for (int i = 0; i < 400; ++i) queries.push_back(EdgeSet::from_words(eng()) & s.ground());
  const auto fresh = sym(7, 4);
  std::vector<int> expected;
  for (const auto& q : queries) expected.push_back(fresh.rank_in_trial(q, 0));
  std::vector<int> got(queries.size());
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < queries.size(); i += 4) got[i] = s.rank(queries[i]);
    });
  for (auto& th : workers) th.join();
  EXPECT_EQ(got, expected);
}

TEST(GenericRank, RejectsBadInput) {
  EXPECT_THROW(GenericLinearMatroid(1, LinearModel::symmetric_tensor(2)), std::invalid_argument);
  EXPECT_THROW(GenericLinearMatroid(4, LinearModel::symmetric_tensor(2), FieldConfig{}, 0), std::invalid_argument);
  EXPECT_THROW(GenericLinearMatroid(4, LinearModel::symmetric_tensor(2), FieldConfig{1000000007ULL, 1}),
               std::invalid_argument);
  EXPECT_THROW(sym(4, 2).rank(EdgeSet::of({6})), std::out_of_range);
}

TEST(Duality, RigidityIsDualOfSymmetricTensorExhaustive) {
  for (int n = 4; n <= 6; ++n) {
    for (int d = 1; d <= n - 2; ++d) {
      const int t = n - d - 1;
      const auto r = rig(n, d).to_explicit();
      const auto s = sym(n, t).to_explicit();
      const std::uint32_t full = (std::uint32_t{1} << edge_count(n)) - 1;
      for (std::uint32_t x = 0; x <= full; ++x)
        ASSERT_EQ(r.rank_of_mask(x), std::popcount(x) - s.full_rank() + s.rank_of_mask(full & ~x))
            << "n=" << n << " d=" << d << " X=" << EdgeSet::from_words(x).to_string();
    }
  }
}

TEST(Axioms, SymmetricTensorCircuitsAndCocircuits) {
  for (int t = 2; t <= 4; ++t) {
    for (int n = t + 2; n <= 7; ++n) {
      const auto s = sym(n, t);
      // (R1*) rank, (R2*) cliques K_{n-t+1} are cocircuits, (R3*) stars K_{1,t+1} are circuits.
      EXPECT_EQ(full_rank(s), t * (t + 1) / 2);
      const auto all = iota_vertices(n);
      for_each_combination(all, n - t + 1, [&](const std::vector<int>& vs) {
        const EdgeSet k = clique_edges(n, vs);
        EXPECT_TRUE(is_cocircuit(s, k)) << "n=" << n << " t=" << t;
        EXPECT_TRUE(complement_is_hyperplane(s, k));
      });
      for (int c = 0; c < n; ++c) {
        std::vector<int> others;
        for (int v = 0; v < n; ++v)
          if (v != c) others.push_back(v);
        for_each_combination(others, t + 1, [&](const std::vector<int>& leaves) {
          EXPECT_TRUE(is_circuit(s, biclique(n, {c}, leaves).edges()));
        });
      }
    }
  }
}

TEST(Axioms, RigidityCircuitsAndCocircuits) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = d + 2; n <= 7; ++n) {
      const auto r = rig(n, d);
      const auto all = iota_vertices(n);
      // (R2) K_{d+2} is a circuit.
      for_each_combination(all, d + 2, [&](const std::vector<int>& vs) { EXPECT_TRUE(is_circuit(r, clique_edges(n, vs))); });
      // (R3) K_{1,n-d} is a cocircuit.
      for (int c = 0; c < n; ++c) {
        std::vector<int> others;
        for (int v = 0; v < n; ++v)
          if (v != c) others.push_back(v);
        for_each_combination(others, n - d, [&](const std::vector<int>& leaves) {
          EXPECT_TRUE(is_cocircuit(r, biclique(n, {c}, leaves).edges())) << "n=" << n << " d=" << d;
        });
      }
    }
  }
}

TEST(Axioms, RigidityBicliqueCocircuits) {
  for (int n = 5; n <= 7; ++n) {
    for (int d = 1; d <= n - 3; ++d) {
      const auto r = rig(n, d);
      const int total = n - d + 1;
      for (int a = 1; a <= total - 1; ++a) {
        const int b = total - a;
        if (a > b || a + b > n) continue;
        std::vector<int> side_a = iota_vertices(a), side_b;
        for (int i = 0; i < b; ++i) side_b.push_back(a + i);
        EXPECT_TRUE(is_cocircuit(r, biclique(n, side_a, side_b).edges())) << "n=" << n << " d=" << d << " a=" << a;
      }
    }
  }
}

TEST(Axioms, BicliqueCircuitsAndCyclicFlats) {
  for (int t = 4; t <= 5; ++t) {
    for (int n = t + 2; n <= 7; ++n) {
      const auto s = sym(n, t);
      for (int a = 1; a <= t; ++a) {
        for (int b = a; a + b <= n; ++b) {
          std::vector<int> side_a = iota_vertices(a), side_b;
          for (int i = 0; i < b; ++i) side_b.push_back(a + i);
          const EdgeSet k = biclique(n, side_a, side_b).edges();
          if (a + b == t + 2) {
            EXPECT_TRUE(is_circuit(s, k)) << "K_{" << a << "," << b << "} t=" << t;
            EXPECT_EQ(s.rank(k), a * b - 1);
          }
          if (a >= 3 && b <= t - 1 && a + b >= t + 2) {
            EXPECT_EQ(s.rank(k), a * b - choose2(a + b - t));
            EXPECT_TRUE(is_flat(s, k));
            EXPECT_TRUE(is_cyclic(s, k));
          }
        }
      }
      for (int c = 1; c <= t - 1; ++c) {
        const EdgeSet cone = detail::star_of(n, vertices_mask(iota_vertices(c)));
        EXPECT_EQ(s.rank(cone), c * t - choose2(c));
        EXPECT_TRUE(is_flat(s, cone));
        EXPECT_TRUE(is_cyclic(s, cone));
      }
    }
  }
}

TEST(Axioms, ConingLowersTheDimension) {
  for (int t = 2; t <= 5; ++t) {
    const int n = t + 2;
    const auto s = sym(n, t);
    const int v = n - 1;
    const EdgeSet star = vertex_star(n, v);
    const auto c = contract(s, star);
    EXPECT_EQ(full_rank(c), t * (t - 1) / 2);
    // Every K_{1,t} avoiding v becomes a circuit.
    for (int centre = 0; centre < v; ++centre) {
      std::vector<int> others;
      for (int w = 0; w < v; ++w)
        if (w != centre) others.push_back(w);
      for_each_combination(others, t, [&](const std::vector<int>& leaves) {
        EXPECT_TRUE(is_circuit(c, biclique(n, {centre}, leaves).edges())) << "t=" << t;
      });
    }
  }
}

TEST(Axioms, RigidityGluingClosure) {
  std::mt19937_64 eng(41);
  for (int d = 2; d <= 3; ++d) {
    const int n = 7;
    const auto r = rig(n, d);
    for (int trial = 0; trial < 40; ++trial) {
      // Two vertex sets sharing at most d-1 vertices, with random edges inside each.
      std::vector<int> perm = iota_vertices(n);
      std::shuffle(perm.begin(), perm.end(), eng);
      const int shared = static_cast<int>(eng() % static_cast<std::uint64_t>(d));
      const int size1 = 2 + static_cast<int>(eng() % 3);
      std::vector<int> v1(perm.begin(), perm.begin() + size1);
      std::vector<int> v2(perm.begin() + size1 - shared, perm.end());
      auto random_inside = [&](const std::vector<int>& vs) {
        EdgeSet e;
        clique_edges(n, vs).for_each([&](int x) {
          if (eng() % 3 != 0) e.insert(x);
        });
        return e;
      };
      const EdgeSet e1 = random_inside(v1), e2 = random_inside(v2);
      auto touched = [&](const EdgeSet& e) {
        std::vector<int> vs;
        for (int v : mask_vertices(LabeledGraph(n, e).support())) vs.push_back(v);
        return vs;
      };
      const EdgeSet bound = clique_edges(n, touched(e1)) | clique_edges(n, touched(e2));
      EXPECT_TRUE(closure(r, e1 | e2).is_subset_of(bound)) << "d=" << d;
    }
  }
}

}  // namespace
}  // namespace symtensor
