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


// Sparsity counts against the host-shape family, a brute-force second route
// for them, and valid vertex labellings.

#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symtensor/edge_set.hpp"
#include "symtensor/graphs.hpp"

namespace symtensor {

struct CtWitness {
  ShapeDescriptor shape;
  int weight = 0;
  EdgeSet subgraph;  // the edges of g inside the chosen copy
  ShapePlacement placement;
};

struct CtVerdict {
  bool independent = true;
  std::optional<CtWitness> witness;
};

/// Shapes, weights and all labeled copies for one (n, t), reusable across graphs.
class CtChecker {
 public:
  CtChecker(int n, int t) : n_(n), t_(t) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("CtChecker: n outside [2, 16]");
    for (const auto& sh : enumerate_shapes(n, t)) {
      if (sh.kind == ShapeKind::kEmpty) continue;  // weight 0 and nothing embeds
      entries_.push_back({sh, shape_weight(sh, t), shape_placements(n, sh)});
    }
  }

  int n() const { return n_; }
  int t() const { return t_; }

  /// The first violated shape in enumeration order, with its first copy of maximum overlap.
  CtVerdict check(const EdgeSet& g) const {
    const int m = g.size();
    for (const auto& e : entries_) {
      if (m <= e.weight) continue;
      const EmbeddingResult best = best_embedding(g, e.placements);
      if (best.edges > e.weight) return {false, CtWitness{e.shape, e.weight, g & best.placement.edges, best.placement}};
    }
    return {true, std::nullopt};
  }

  bool independent(const EdgeSet& g) const {
    const int m = g.size();
    for (const auto& e : entries_) {
      if (m <= e.weight) continue;
      for (const auto& p : e.placements)
        if ((g & p.edges).size() > e.weight) return false;
    }
    return true;
  }

 private:
  struct Entry {
    ShapeDescriptor shape;
    int weight;
    std::vector<ShapePlacement> placements;
  };
  int n_;
  int t_;
  std::vector<Entry> entries_;
};

inline CtVerdict is_ct_independent(const LabeledGraph& g, int t) { return CtChecker(g.n(), t).check(g.edges()); }

namespace detail {

/// Whether the graph with edge list `h` has an injective homomorphism into the
/// graph with adjacency masks `host` (subgraph, not induced).
inline bool embeds(const std::vector<Edge>& h, const std::vector<VertexMask>& host) {
  std::map<int, int> index;
  for (const Edge& e : h) {
    index.emplace(e.u, static_cast<int>(index.size()));
    index.emplace(e.v, static_cast<int>(index.size()));
  }
  const int k = static_cast<int>(index.size());
  const int hn = static_cast<int>(host.size());
  if (k > hn) return false;
  std::vector<VertexMask> adj(static_cast<std::size_t>(k), 0);
  for (const Edge& e : h) {
    const int a = index[e.u], b = index[e.v];
    adj[static_cast<std::size_t>(a)] |= VertexMask{1} << b;
    adj[static_cast<std::size_t>(b)] |= VertexMask{1} << a;
  }
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::popcount(adj[static_cast<std::size_t>(x)]) > std::popcount(adj[static_cast<std::size_t>(y)]);
  });
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  auto search = [&](auto&& self, int pos, VertexMask used) -> bool {
    if (pos == k) return true;
    const int v = order[static_cast<std::size_t>(pos)];
    const int need = std::popcount(adj[static_cast<std::size_t>(v)]);
    for (int w = 0; w < hn; ++w) {
      if (used & (VertexMask{1} << w)) continue;
      if (std::popcount(host[static_cast<std::size_t>(w)]) < need) continue;
      bool ok = true;
      for (int p = 0; p < pos && ok; ++p) {
        const int u = order[static_cast<std::size_t>(p)];
        if ((adj[static_cast<std::size_t>(v)] >> u) & 1u)
          ok = (host[static_cast<std::size_t>(w)] >> image[static_cast<std::size_t>(u)]) & 1u;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      if (self(self, pos + 1, used | (VertexMask{1} << w))) return true;
    }
    image[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return search(search, 0, 0);
}

inline std::vector<VertexMask> adjacency_masks(const LabeledGraph& g) {
  std::vector<VertexMask> adj(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  return adj;
}

/// The copy of sh on the lowest-numbered vertices: cone first, then A, then B.
inline LabeledGraph canonical_instance(int n, const ShapeDescriptor& sh) {
  VertexChoice vc;
  int next = 0;
  auto take = [&](int k) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i) out.push_back(next++);
    return out;
  };
  if (sh.kind == ShapeKind::kCliqueCone || sh.kind == ShapeKind::kCliqueConeBiclique) vc.cone = take(sh.s);
  if (sh.kind == ShapeKind::kCliqueConeBiclique) {
    vc.side_a = take(sh.a);
    vc.side_b = take(sh.b);
  }
  return instantiate_shape(n, sh, vc);
}

}  // namespace detail

inline constexpr int kBruteForceEdgeCap = 16;

/// Second route to the sparsity count: for every shape, tries every edge
/// subset one larger than its weight against a concrete copy of the shape
/// by backtracking subgraph search.
inline bool ct_independent_bruteforce(const LabeledGraph& g, int t) {
  if (g.num_edges() > kBruteForceEdgeCap)
    throw std::invalid_argument("ct_independent_bruteforce: more than " + std::to_string(kBruteForceEdgeCap) + " edges");
  const std::vector<Edge> edges = g.edge_list();
  const int m = static_cast<int>(edges.size());
  for (const auto& sh : enumerate_shapes(g.n(), t)) {
    const int w = shape_weight(sh, t);
    if (m <= w) continue;
    const auto host = detail::adjacency_masks(detail::canonical_instance(g.n(), sh));
    std::vector<int> pool(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pool[static_cast<std::size_t>(i)] = i;
    bool violated = false;
    for_each_combination(pool, w + 1, [&](const std::vector<int>& pick) {
      if (violated) return;
      std::vector<Edge> h;
      for (int i : pick) h.push_back(edges[static_cast<std::size_t>(i)]);
      if (detail::embeds(h, host)) violated = true;
    });
    if (violated) return false;
  }
  return true;
}

struct MinDependentDegrees {
  bool edge_condition = true;       // every edge has an endpoint of degree >= 2
  bool no_isolated_vertices = true;  // on the vertices spanned by the edges
  bool ok() const { return edge_condition && no_isolated_vertices; }
};

/// Degree conditions for a minimally dependent graph, evaluated on the
/// subgraph spanned by its edges (isolated vertices of the host are ignored).
inline MinDependentDegrees check_min_dependent_degrees(const LabeledGraph& g, int /*t*/) {
  MinDependentDegrees out;
  const VertexMask span = g.support();
  for (int v = 0; v < g.n(); ++v)
    if (((span >> v) & 1u) && g.degree(v) == 0) out.no_isolated_vertices = false;
  for (const Edge& e : g.edge_list())
    if (g.degree(e.u) < 2 && g.degree(e.v) < 2) out.edge_condition = false;
  return out;
}

inline constexpr int kInfLabel = INT_MAX;

/// Edges e_1..e_t (stored 0-based) and a label per vertex; kInfLabel is infinity.
struct Labelling {
  std::vector<Edge> edges;
  std::vector<int> label;
};

struct LabellingCheck {
  bool valid = true;
  int condition = 0;  // first violated condition 1..4; 0 for malformed input
  std::string detail;
};

inline std::string label_to_string(int l) { return l == kInfLabel ? "inf" : std::to_string(l); }

inline LabellingCheck is_valid_labelling(const LabeledGraph& g, const Labelling& lab, int t) {
  auto fail = [](int cond, std::string why) { return LabellingCheck{false, cond, std::move(why)}; };
  if (static_cast<int>(lab.edges.size()) != t) return fail(0, "expected " + std::to_string(t) + " edges");
  if (static_cast<int>(lab.label.size()) != g.n()) return fail(0, "expected one label per vertex");
  EdgeSet chosen;
  std::vector<int> position(static_cast<std::size_t>(edge_count(g.n())), -1);
  for (int i = 0; i < t; ++i) {
    const Edge& e = lab.edges[static_cast<std::size_t>(i)];
    if (!g.has_edge(e.u, e.v)) return fail(0, "e_" + std::to_string(i + 1) + " is not an edge of the graph");
    const int idx = edge_index(g.n(), e.u, e.v);
    if (chosen.contains(idx)) return fail(0, "e_" + std::to_string(i + 1) + " repeats an earlier edge");
    chosen.insert(idx);
    position[static_cast<std::size_t>(idx)] = i;
  }
  for (int v = 0; v < g.n(); ++v) {
    const int l = lab.label[static_cast<std::size_t>(v)];
    if (l != kInfLabel && (l < 1 || l > t - 1)) return fail(0, "label of vertex " + std::to_string(v) + " out of range");
  }
  auto L = [&](int v) { return lab.label[static_cast<std::size_t>(v)]; };
  for (int i = 1; i <= t - 1; ++i) {
    const Edge& e = lab.edges[static_cast<std::size_t>(i - 1)];
    const bool ok = (L(e.u) == i && L(e.v) == kInfLabel) || (L(e.v) == i && L(e.u) == kInfLabel);
    if (!ok) return fail(1, "e_" + std::to_string(i) + " needs one end labelled " + std::to_string(i) + " and one inf");
  }
  {
    const Edge& e = lab.edges[static_cast<std::size_t>(t - 1)];
    if (L(e.u) != kInfLabel || L(e.v) != kInfLabel) return fail(2, "both ends of e_t must be labelled inf");
  }
  VertexMask touched = 0;
  for (const Edge& e : lab.edges) touched |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
  for (int v = 0; v < g.n(); ++v)
    if (!((touched >> v) & 1u) && L(v) != t - 1)
      return fail(3, "vertex " + std::to_string(v) + " is off every e_i but not labelled t-1");
  for (int i = 1; i <= t; ++i) {
    const Edge& e = lab.edges[static_cast<std::size_t>(i - 1)];
    for (int w : {e.u, e.v}) {
      if (L(w) != kInfLabel) continue;
      for (int x = 0; x < g.n(); ++x) {
        if (x == w || !g.has_edge(w, x)) continue;
        const int pos = position[static_cast<std::size_t>(edge_index(g.n(), w, x))];
        if (pos >= i - 1) continue;  // wx is one of e_i..e_t, removed
        if (L(x) >= i)
          return fail(4, "neighbour " + std::to_string(x) + " of vertex " + std::to_string(w) + " has label " +
                             label_to_string(L(x)) + ", not below " + std::to_string(i));
      }
    }
  }
  return {};
}

struct LabellingResult {
  Labelling labelling;
  LabeledGraph reduced;  // g - {e_1, ..., e_t}
  char pattern = '?';    // 'a', 'b', 'c' (non-adjacent pair, t neighbours), 'e', 'f' (pair plus
                         // disjoint e_t), 'p' (path pairs, max degree two)
};

namespace detail {

inline std::optional<LabellingResult> finish_labelling(const LabeledGraph& g, int t, std::vector<Edge> edges,
                                                       const std::vector<int>& finite_ends, char pattern) {
  // finite_ends[i] is the endpoint of e_{i+1} labelled i+1 (i < t-1); every
  // other endpoint of a chosen edge is labelled infinity.
  Labelling lab{std::move(edges), std::vector<int>(static_cast<std::size_t>(g.n()), t - 1)};
  for (const Edge& e : lab.edges) {
    lab.label[static_cast<std::size_t>(e.u)] = kInfLabel;
    lab.label[static_cast<std::size_t>(e.v)] = kInfLabel;
  }
  for (std::size_t i = 0; i < finite_ends.size(); ++i)
    lab.label[static_cast<std::size_t>(finite_ends[i])] = static_cast<int>(i) + 1;
  if (!is_valid_labelling(g, lab, t).valid) return std::nullopt;
  LabeledGraph reduced = g;
  for (const Edge& e : lab.edges) reduced.remove_edge(e.u, e.v);
  return LabellingResult{std::move(lab), std::move(reduced), pattern};
}

/// First edge of g (canonical order) avoiding every vertex in `avoid`.
inline std::optional<Edge> edge_avoiding(const LabeledGraph& g, VertexMask avoid) {
  for (const Edge& e : g.edge_list())
    if (!((avoid >> e.u) & 1u) && !((avoid >> e.v) & 1u)) return e;
  return std::nullopt;
}

/// Edges v1->N1 (v1-only neighbours first, then common ones), then v2->N2\N1.
inline void pair_edges(int v1, VertexMask n1, int v2, VertexMask n2, std::vector<Edge>& edges,
                       std::vector<int>& finite) {
  for (int u : mask_vertices(n1 & ~n2)) {
    edges.push_back({v1, u});
    finite.push_back(u);
  }
  for (int u : mask_vertices(n1 & n2)) {
    edges.push_back({v1, u});
    finite.push_back(u);
  }
  for (int u : mask_vertices(n2 & ~n1)) {
    edges.push_back({v2, u});
    finite.push_back(u);
  }
}

inline std::optional<LabellingResult> path_pair_labelling(const LabeledGraph& g, int t) {
  if (g.max_degree() > 2) return std::nullopt;
  const int n = g.n();
  std::vector<VertexMask> adj = adjacency_masks(g);
  // Walk every path or cycle component, cutting it into vertex-disjoint
  // paths of length two; single-edge components are kept apart.
  std::vector<std::pair<Edge, Edge>> cherries;
  std::vector<Edge> singles;
  VertexMask seen = 0;
  auto walk = [&](int start) {
    std::vector<int> order{start};
    seen |= VertexMask{1} << start;
    int cur = start;
    while (true) {
      const VertexMask next = adj[static_cast<std::size_t>(cur)] & ~seen;
      if (next == 0) break;
      cur = std::countr_zero(next);
      seen |= VertexMask{1} << cur;
      order.push_back(cur);
    }
    if (order.size() == 2) {
      singles.push_back({order[0], order[1]});
      return;
    }
    for (std::size_t i = 0; i + 2 < order.size(); i += 3)
      cherries.push_back({{order[i], order[i + 1]}, {order[i + 1], order[i + 2]}});
  };
  for (int v = 0; v < n; ++v)
    if (!((seen >> v) & 1u) && std::popcount(adj[static_cast<std::size_t>(v)]) == 1) walk(v);
  for (int v = 0; v < n; ++v)
    if (!((seen >> v) & 1u) && adj[static_cast<std::size_t>(v)] != 0) walk(v);
  std::vector<Edge> edges;
  std::vector<int> finite;
  for (const auto& [first, second] : cherries) {
    // first = u-mid, second = mid-w; the middle vertex is the infinite end.
    edges.push_back(first);
    edges.push_back(second);
  }
  for (const Edge& e : singles) edges.push_back(e);
  if (static_cast<int>(edges.size()) < t) return std::nullopt;
  edges.resize(static_cast<std::size_t>(t));
  for (int i = 0; i + 1 < t; ++i) {
    const Edge& e = edges[static_cast<std::size_t>(i)];
    finite.push_back(i % 2 == 0 ? e.u : e.v);
  }
  return finish_labelling(g, t, std::move(edges), finite, 'p');
}

}  // namespace detail

/// Searches, in order: (a) a vertex of degree t; (b) a vertex of degree t-1
/// plus an edge missing its closed neighbourhood; (c) a non-adjacent pair
/// with t neighbours in total; (e) an adjacent pair with t-1 other
/// neighbours, e_t being the pair itself; (f) a non-adjacent pair with t-1
/// neighbours plus an edge missing all of them; (p) for maximum degree at
/// most two, paths of length two cut from the components. Every returned
/// labelling has passed is_valid_labelling.
inline std::optional<LabellingResult> find_valid_labelling(const LabeledGraph& g, int t) {
  if (t < 1 || t > 5) throw std::invalid_argument("find_valid_labelling: t must be in [1, 5]");
  const int n = g.n();
  const auto adj = detail::adjacency_masks(g);
  auto N = [&](int v) { return adj[static_cast<std::size_t>(v)]; };
  auto bit = [](int v) { return VertexMask{1} << v; };

  for (int v = 0; v < n; ++v) {
    if (std::popcount(N(v)) != t) continue;
    std::vector<Edge> edges;
    std::vector<int> finite;
    for (int u : mask_vertices(N(v))) edges.push_back({v, u});
    for (int i = 0; i + 1 < t; ++i) finite.push_back(edges[static_cast<std::size_t>(i)].v);
    if (auto r = detail::finish_labelling(g, t, edges, finite, 'a')) return r;
  }
  if (t >= 2) {
    for (int v = 0; v < n; ++v) {
      if (std::popcount(N(v)) != t - 1) continue;
      const auto et = detail::edge_avoiding(g, N(v) | bit(v));
      if (!et) continue;
      std::vector<Edge> edges;
      std::vector<int> finite;
      for (int u : mask_vertices(N(v))) {
        edges.push_back({v, u});
        finite.push_back(u);
      }
      edges.push_back(*et);
      if (auto r = detail::finish_labelling(g, t, edges, finite, 'b')) return r;
    }
  }
  for (int v1 = 0; v1 < n; ++v1) {
    for (int v2 = 0; v2 < n; ++v2) {
      if (v1 == v2 || (N(v1) & bit(v2)) || std::popcount(N(v1) | N(v2)) != t) continue;
      const VertexMask only2 = N(v2) & ~N(v1);
      if (only2 == 0) continue;
      // e_t must join v2 to a neighbour v1 does not see; take the largest.
      const int last = 31 - std::countl_zero(only2);
      std::vector<Edge> edges;
      std::vector<int> finite;
      detail::pair_edges(v1, N(v1), v2, N(v2) & ~bit(last), edges, finite);
      edges.push_back({v2, last});
      if (static_cast<int>(edges.size()) != t) continue;
      if (auto r = detail::finish_labelling(g, t, edges, finite, 'c')) return r;
    }
  }
  for (int v1 = 0; v1 < n; ++v1) {
    for (int v2 = 0; v2 < n; ++v2) {
      if (v1 == v2 || !(N(v1) & bit(v2))) continue;
      const VertexMask n1 = N(v1) & ~bit(v2), n2 = N(v2) & ~bit(v1);
      if (std::popcount(n1 | n2) != t - 1) continue;
      std::vector<Edge> edges;
      std::vector<int> finite;
      detail::pair_edges(v1, n1, v2, n2, edges, finite);
      edges.push_back({std::min(v1, v2), std::max(v1, v2)});
      if (auto r = detail::finish_labelling(g, t, edges, finite, 'e')) return r;
    }
  }
  for (int v1 = 0; v1 < n; ++v1) {
    for (int v2 = 0; v2 < n; ++v2) {
      if (v1 == v2 || (N(v1) & bit(v2)) || std::popcount(N(v1) | N(v2)) != t - 1) continue;
      const auto et = detail::edge_avoiding(g, N(v1) | N(v2) | bit(v1) | bit(v2));
      if (!et) continue;
      std::vector<Edge> edges;
      std::vector<int> finite;
      detail::pair_edges(v1, N(v1), v2, N(v2), edges, finite);
      edges.push_back(*et);
      if (auto r = detail::finish_labelling(g, t, edges, finite, 'f')) return r;
    }
  }
  return detail::path_pair_labelling(g, t);
}

}  // namespace symtensor
