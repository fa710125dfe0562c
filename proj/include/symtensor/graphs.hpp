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


// Labeled graphs on a fixed vertex set and the host-shape family used by the
// sparsity counts: empty graphs, complete graphs, cones K_s + ~K_{n-s} and
// coned bicliques K_s + (K_{a,b} u ~K_{n-a-b-s}).

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symtensor/edge_set.hpp"

namespace symtensor {

using VertexMask = std::uint32_t;

inline std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

inline VertexMask vertices_mask(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int v : vs) m |= VertexMask{1} << v;
  return m;
}

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n, EdgeSet edges = {}) : n_(n), edges_(edges) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("LabeledGraph: vertex count must be in [1, " + std::to_string(kMaxVertices) + "]");
    if (!edges.is_subset_of(EdgeSet::full(edge_count(n))))
      throw std::invalid_argument("LabeledGraph: edge index out of range");
  }

  static LabeledGraph from_edges(int n, const std::vector<Edge>& edges) {
    LabeledGraph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  static LabeledGraph complete(int n) { return LabeledGraph(n, EdgeSet::full(edge_count(n))); }

  int n() const { return n_; }
  const EdgeSet& edges() const { return edges_; }
  int num_edges() const { return edges_.size(); }

  void add_edge(int i, int j) { edges_.insert(checked_index(i, j)); }
  void remove_edge(int i, int j) { edges_.erase(checked_index(i, j)); }
  bool has_edge(int i, int j) const { return i != j && edges_.contains(checked_index(i, j)); }

  VertexMask neighbors(int v) const {
    VertexMask m = 0;
    for (int w = 0; w < n_; ++w)
      if (w != v && edges_.contains(edge_index(n_, v, w))) m |= VertexMask{1} << w;
    return m;
  }
  int degree(int v) const { return (edges_ & vertex_star(n_, v)).size(); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Endpoints of the edges, in canonical order.
  std::vector<Edge> edge_list() const {
    const auto all = canonical_edges(n_);
    std::vector<Edge> out;
    edges_.for_each([&](int e) { out.push_back(all[static_cast<std::size_t>(e)]); });
    return out;
  }

  /// Vertices incident to at least one edge.
  VertexMask support() const {
    VertexMask m = 0;
    for (const Edge& e : edge_list()) m |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
    return m;
  }

  bool operator==(const LabeledGraph&) const = default;

 private:
  int checked_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
      throw std::invalid_argument("edge " + std::to_string(i) + "-" + std::to_string(j) + " invalid for n=" +
                                  std::to_string(n_));
    return edge_index(n_, i, j);
  }

  int n_ = 1;
  EdgeSet edges_;
};

enum class ShapeKind : int { kEmpty = 0, kComplete = 1, kCliqueCone = 2, kCliqueConeBiclique = 3 };

/// A member of the host family; s, a, b are unused (zero) where they do not apply.
struct ShapeDescriptor {
  ShapeKind kind = ShapeKind::kEmpty;
  int s = 0;
  int a = 0;
  int b = 0;

  static constexpr ShapeDescriptor empty() { return {ShapeKind::kEmpty, 0, 0, 0}; }
  static constexpr ShapeDescriptor complete() { return {ShapeKind::kComplete, 0, 0, 0}; }
  static constexpr ShapeDescriptor cone(int s) { return {ShapeKind::kCliqueCone, s, 0, 0}; }
  static constexpr ShapeDescriptor biclique(int s, int a, int b) {
    return {ShapeKind::kCliqueConeBiclique, s, std::min(a, b), std::max(a, b)};
  }

  auto operator<=>(const ShapeDescriptor&) const = default;

  std::string kind_name() const {
    switch (kind) {
      case ShapeKind::kEmpty: return "Empty";
      case ShapeKind::kComplete: return "Complete";
      case ShapeKind::kCliqueCone: return "CliqueCone";
      case ShapeKind::kCliqueConeBiclique: return "CliqueConeBiclique";
    }
    return "?";
  }

  /// Short human form, e.g. "K_2+~K", "K_1+(K_{3,3}u~K)".
  std::string to_string() const {
    switch (kind) {
      case ShapeKind::kEmpty: return "~K_n";
      case ShapeKind::kComplete: return "K_n";
      case ShapeKind::kCliqueCone: return "K_" + std::to_string(s) + "+~K";
      case ShapeKind::kCliqueConeBiclique: {
        std::string core = "K_{" + std::to_string(a) + "," + std::to_string(b) + "}u~K";
        return s == 0 ? core : "K_" + std::to_string(s) + "+(" + core + ")";
      }
    }
    return "?";
  }
};

/// Whether sh is a member of the family for (n, t).
inline bool shape_is_valid(const ShapeDescriptor& sh, int n, int t) {
  switch (sh.kind) {
    case ShapeKind::kEmpty: return true;
    case ShapeKind::kComplete: return true;
    case ShapeKind::kCliqueCone: return sh.s >= 1 && sh.s <= t - 1 && sh.s <= n;
    case ShapeKind::kCliqueConeBiclique:
      return sh.s >= 0 && sh.a >= 3 && sh.b >= sh.a && sh.a + sh.b + sh.s >= t + 2 && sh.b + sh.s <= t - 1 &&
             sh.a + sh.b + sh.s <= n;
  }
  return false;
}

/// The host family for n vertices, in the order Empty, Complete, cones by s,
/// coned bicliques by (s, a, b) with a <= b. Shapes needing more than n
/// vertices are left out.
inline std::vector<ShapeDescriptor> enumerate_shapes(int n, int t) {
  if (t < 1 || t > n - 1)
    throw std::invalid_argument("enumerate_shapes: need 1 <= t <= n-1 (n=" + std::to_string(n) +
                                ", t=" + std::to_string(t) + ")");
  std::vector<ShapeDescriptor> out = {ShapeDescriptor::empty(), ShapeDescriptor::complete()};
  for (int s = 1; s <= t - 1; ++s) out.push_back(ShapeDescriptor::cone(s));
  for (int s = 0; s + 3 <= t - 1; ++s) {
    for (int a = 3; a + s <= t - 1; ++a) {
      for (int b = a; b + s <= t - 1; ++b) {
        if (a + b + s >= t + 2 && a + b + s <= n) out.push_back(ShapeDescriptor::biclique(s, a, b));
      }
    }
  }
  return out;
}

constexpr int choose2(int k) { return k * (k - 1) / 2; }

inline int shape_weight(const ShapeDescriptor& sh, int t) {
  switch (sh.kind) {
    case ShapeKind::kEmpty: return 0;
    case ShapeKind::kComplete: return t * (t + 1) / 2;
    case ShapeKind::kCliqueCone: return sh.s * t - choose2(sh.s);
    case ShapeKind::kCliqueConeBiclique:
      return sh.a * sh.b - choose2(sh.a + sh.b - (t - sh.s)) + sh.s * t - choose2(sh.s);
  }
  return 0;
}

/// Vertex sets fixing one copy of a shape: the cone apex set S and the two
/// biclique sides A, B (unused sets are empty).
struct ShapePlacement {
  VertexMask cone = 0;
  VertexMask side_a = 0;
  VertexMask side_b = 0;
  EdgeSet edges;
};

namespace detail {

inline EdgeSet star_of(int n, VertexMask s) {
  EdgeSet out;
  for (int v : mask_vertices(s)) out |= vertex_star(n, v);
  return out;
}

inline EdgeSet between(int n, VertexMask a, VertexMask b) {
  EdgeSet out;
  for (int u : mask_vertices(a))
    for (int v : mask_vertices(b)) out.insert(edge_index(n, u, v));
  return out;
}

template <class Fn>
void for_each_mask_subset(VertexMask pool, int k, Fn&& fn) {
  for_each_combination(mask_vertices(pool), k, [&](const std::vector<int>& c) { fn(vertices_mask(c)); });
}

}  // namespace detail

/// Every labeled copy of sh in K_n, in lexicographic order of (S, A, B) by
/// sorted vertex lists. For a == b only the copy with min A < min B is listed.
inline std::vector<ShapePlacement> shape_placements(int n, const ShapeDescriptor& sh) {
  std::vector<ShapePlacement> out;
  const VertexMask all = n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  switch (sh.kind) {
    case ShapeKind::kEmpty: out.push_back({}); break;
    case ShapeKind::kComplete: out.push_back({0, 0, 0, EdgeSet::full(edge_count(n))}); break;
    case ShapeKind::kCliqueCone:
      detail::for_each_mask_subset(all, sh.s, [&](VertexMask s) { out.push_back({s, 0, 0, detail::star_of(n, s)}); });
      break;
    case ShapeKind::kCliqueConeBiclique:
      detail::for_each_mask_subset(all, sh.s, [&](VertexMask s) {
        const EdgeSet cone_edges = detail::star_of(n, s);
        detail::for_each_mask_subset(all & ~s, sh.a, [&](VertexMask a) {
          detail::for_each_mask_subset(all & ~s & ~a, sh.b, [&](VertexMask b) {
            if (sh.a == sh.b && std::countr_zero(b) < std::countr_zero(a)) return;
            out.push_back({s, a, b, cone_edges | detail::between(n, a, b)});
          });
        });
      });
      break;
  }
  return out;
}

/// Largest number of edges of g in a single copy of sh, with the first copy
/// (in shape_placements order) attaining it.
struct EmbeddingResult {
  int edges = 0;
  ShapePlacement placement;
};

inline EmbeddingResult best_embedding(const EdgeSet& g, const std::vector<ShapePlacement>& placements) {
  EmbeddingResult best{-1, {}};
  for (const auto& p : placements) {
    const int c = (g & p.edges).size();
    if (c > best.edges) best = {c, p};
  }
  if (best.edges < 0) best.edges = 0;
  return best;
}

inline int max_embeddable_edges(const LabeledGraph& g, const ShapeDescriptor& sh, int t) {
  if (!shape_is_valid(sh, g.n(), t))
    throw std::invalid_argument("max_embeddable_edges: " + sh.to_string() + " is not a shape for this (n, t)");
  switch (sh.kind) {
    case ShapeKind::kEmpty: return 0;
    case ShapeKind::kComplete: return g.num_edges();
    default: return best_embedding(g.edges(), shape_placements(g.n(), sh)).edges;
  }
}

/// Vertex sets chosen for instantiate_shape; entries that the shape does not
/// use must be empty.
struct VertexChoice {
  std::vector<int> cone;
  std::vector<int> side_a;
  std::vector<int> side_b;
};

inline LabeledGraph instantiate_shape(int n, const ShapeDescriptor& sh, const VertexChoice& vc = {}) {
  VertexMask seen = 0;
  auto take = [&](const std::vector<int>& vs) {
    for (int v : vs) {
      if (v < 0 || v >= n) throw std::invalid_argument("instantiate_shape: vertex out of range");
      if (seen & (VertexMask{1} << v)) throw std::invalid_argument("instantiate_shape: vertex sets overlap");
      seen |= VertexMask{1} << v;
    }
    return vertices_mask(vs);
  };
  auto expect_size = [](const std::vector<int>& vs, int k, const char* what) {
    if (static_cast<int>(vs.size()) != k)
      throw std::invalid_argument(std::string("instantiate_shape: wrong size for ") + what);
  };
  const VertexMask s = take(vc.cone);
  const VertexMask a = take(vc.side_a);
  const VertexMask b = take(vc.side_b);
  switch (sh.kind) {
    case ShapeKind::kEmpty:
    case ShapeKind::kComplete:
      expect_size(vc.cone, 0, "cone");
      expect_size(vc.side_a, 0, "side A");
      expect_size(vc.side_b, 0, "side B");
      return sh.kind == ShapeKind::kEmpty ? LabeledGraph(n) : LabeledGraph::complete(n);
    case ShapeKind::kCliqueCone:
      expect_size(vc.cone, sh.s, "cone");
      expect_size(vc.side_a, 0, "side A");
      expect_size(vc.side_b, 0, "side B");
      return LabeledGraph(n, detail::star_of(n, s));
    case ShapeKind::kCliqueConeBiclique: {
      expect_size(vc.cone, sh.s, "cone");
      const bool direct = static_cast<int>(vc.side_a.size()) == sh.a && static_cast<int>(vc.side_b.size()) == sh.b;
      const bool swapped = static_cast<int>(vc.side_a.size()) == sh.b && static_cast<int>(vc.side_b.size()) == sh.a;
      if (!direct && !swapped) throw std::invalid_argument("instantiate_shape: wrong biclique side sizes");
      return LabeledGraph(n, detail::star_of(n, s) | detail::between(n, a, b));
    }
  }
  return LabeledGraph(n);
}

}  // namespace symtensor
