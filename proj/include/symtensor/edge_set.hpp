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

// Fixed-width edge sets over the canonical edge indexing of K_n.
//
// Edge ij (0-based, i < j) of K_n has index i*(2n-i-1)/2 + (j-i-1), i.e. the
// upper triangle of the adjacency matrix read row by row. Every file format
// and every table in the library uses this order.

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symtensor {

/// A subset of a ground set with at most 128 elements.
class EdgeSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr EdgeSet() = default;

  static constexpr EdgeSet from_words(std::uint64_t lo, std::uint64_t hi = 0) {
    EdgeSet s;
    s.words_ = {lo, hi};
    return s;
  }

  /// The set {0, 1, ..., m-1}.
  static constexpr EdgeSet full(int m) {
    if (m < 0 || m > kCapacity) throw std::out_of_range("EdgeSet::full: size out of range");
    EdgeSet s;
    if (m >= 64) {
      s.words_[0] = ~std::uint64_t{0};
      s.words_[1] = m == 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (m - 64)) - 1);
    } else {
      s.words_[0] = m == 0 ? 0 : ((std::uint64_t{1} << m) - 1);
    }
    return s;
  }

  static EdgeSet of(std::initializer_list<int> elements) {
    EdgeSet s;
    for (int e : elements) s.insert(e);
    return s;
  }

  constexpr bool contains(int e) const {
    return (words_[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1u;
  }
  constexpr void insert(int e) { words_[static_cast<std::size_t>(e >> 6)] |= std::uint64_t{1} << (e & 63); }
  constexpr void erase(int e) { words_[static_cast<std::size_t>(e >> 6)] &= ~(std::uint64_t{1} << (e & 63)); }

  constexpr EdgeSet with(int e) const {
    EdgeSet s = *this;
    s.insert(e);
    return s;
  }
  constexpr EdgeSet without(int e) const {
    EdgeSet s = *this;
    s.erase(e);
    return s;
  }

  constexpr int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  constexpr bool is_subset_of(const EdgeSet& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }
  constexpr bool intersects(const EdgeSet& other) const {
    return ((words_[0] & other.words_[0]) | (words_[1] & other.words_[1])) != 0;
  }

  constexpr EdgeSet operator|(const EdgeSet& o) const { return from_words(words_[0] | o.words_[0], words_[1] | o.words_[1]); }
  constexpr EdgeSet operator&(const EdgeSet& o) const { return from_words(words_[0] & o.words_[0], words_[1] & o.words_[1]); }
  constexpr EdgeSet operator^(const EdgeSet& o) const { return from_words(words_[0] ^ o.words_[0], words_[1] ^ o.words_[1]); }
  /// Set difference.
  constexpr EdgeSet operator-(const EdgeSet& o) const { return from_words(words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]); }
  constexpr EdgeSet& operator|=(const EdgeSet& o) { return *this = *this | o; }
  constexpr EdgeSet& operator&=(const EdgeSet& o) { return *this = *this & o; }
  constexpr EdgeSet& operator-=(const EdgeSet& o) { return *this = *this - o; }

  constexpr bool operator==(const EdgeSet&) const = default;
  /// Orders by the 128-bit value; used only for deterministic containers.
  constexpr bool operator<(const EdgeSet& o) const {
    return words_[1] != o.words_[1] ? words_[1] < o.words_[1] : words_[0] < o.words_[0];
  }

  constexpr std::uint64_t low_word() const { return words_[0]; }
  constexpr std::uint64_t high_word() const { return words_[1]; }

  /// The set as a 32-bit mask; the caller guarantees every element is < 32.
  constexpr std::uint32_t to_mask32() const { return static_cast<std::uint32_t>(words_[0]); }

  /// Smallest element, or -1 for the empty set.
  constexpr int first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  template <class Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_elem = true;
    for_each([&](int e) {
      if (!first_elem) s += ",";
      s += std::to_string(e);
      first_elem = false;
    });
    return s + "}";
  }

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept {
    std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ULL;
    h ^= (s.high_word() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

inline constexpr int kMaxVertices = 16;  // C(16,2) = 120 <= EdgeSet::kCapacity

constexpr int edge_count(int n) { return n * (n - 1) / 2; }

/// Canonical index of edge {i, j} in K_n.
constexpr int edge_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

struct Edge {
  int u = 0;
  int v = 0;
  constexpr bool operator==(const Edge&) const = default;
  constexpr bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

/// Endpoints of every edge of K_n in canonical order.
inline std::vector<Edge> canonical_edges(int n) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

/// Edges of K_n incident to vertex v.
inline EdgeSet vertex_star(int n, int v) {
  EdgeSet s;
  for (int w = 0; w < n; ++w)
    if (w != v) s.insert(edge_index(n, v, w));
  return s;
}

/// K(X): edges of K_n with both ends in the vertex set.
inline EdgeSet clique_edges(int n, const std::vector<int>& vertices) {
  EdgeSet s;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) s.insert(edge_index(n, vertices[a], vertices[b]));
  return s;
}

/// Calls fn(std::vector<int> const&) for every k-subset of `pool`, in
/// lexicographic order of positions.
template <class Fn>
void for_each_combination(const std::vector<int>& pool, int k, Fn&& fn) {
  const std::size_t n = pool.size();
  if (k < 0 || static_cast<std::size_t>(k) > n) return;
  const auto kk = static_cast<std::size_t>(k);
  std::vector<std::size_t> idx(kk);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<int> chosen(kk);
  while (true) {
    for (std::size_t i = 0; i < kk; ++i) chosen[i] = pool[idx[i]];
    fn(std::as_const(chosen));
    std::size_t i = kk;
    while (i > 0 && idx[i - 1] == n - kk + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < kk; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<int> iota_vertices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace symtensor
