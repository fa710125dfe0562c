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


// Verification suites shared by the CLI and the acceptance runner. Each suite
// returns a deterministic JSON payload (no timings) and the first
// counterexample it met, if any.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"
#include "symtensor/cyclic_flats.hpp"
#include "symtensor/edge_set.hpp"
#include "symtensor/erection.hpp"
#include "symtensor/exactfield.hpp"
#include "symtensor/geometric.hpp"
#include "symtensor/graph_io.hpp"
#include "symtensor/graphs.hpp"
#include "symtensor/matroid.hpp"
#include "symtensor/parallel.hpp"
#include "symtensor/sparsity.hpp"

namespace symtensor {

using Json = nlohmann::ordered_json;

struct SuiteParams {
  std::optional<int> n;
  std::optional<int> t;
  std::optional<int> d;
  std::optional<long long> samples;
  std::uint64_t seed = kDefaultSeed;
  int trials = 2;
  std::uint64_t prime = kMersenne61;
  int jobs = 1;

  FieldConfig field() const { return {prime, seed}; }
};

struct SuiteOutcome {
  SuiteOutcome() = default;
  explicit SuiteOutcome(std::string name) : suite(std::move(name)) {}

  std::string suite;
  bool passed = true;
  std::string summary;
  Json facts = Json::object();
  std::optional<Json> counterexample;

  void fail(Json ce) {
    passed = false;
    if (!counterexample) counterexample = std::move(ce);
  }

  Json to_json() const {
    Json j;
    j["suite"] = suite;
    j["passed"] = passed;
    j["summary"] = summary;
    j["facts"] = facts;
    j["counterexample"] = counterexample ? *counterexample : Json(nullptr);
    return j;
  }
};

/// Runs several parts under one name; facts keep the parts in order.
inline SuiteOutcome combine(std::string name, const std::vector<SuiteOutcome>& parts) {
  SuiteOutcome out{std::move(name)};
  out.facts["parts"] = Json::array();
  for (const auto& p : parts) {
    out.facts["parts"].push_back(p.to_json());
    if (!p.passed) out.fail(*p.counterexample);
    out.summary += (out.summary.empty() ? "" : "; ") + p.summary;
  }
  return out;
}

inline Json edges_json(int n, const EdgeSet& s) {
  const auto all = canonical_edges(n);
  Json j = Json::array();
  s.for_each([&](int e) { j.push_back({all[static_cast<std::size_t>(e)].u, all[static_cast<std::size_t>(e)].v}); });
  return j;
}

inline Json shape_json(const ShapeDescriptor& sh) {
  Json j;
  j["kind"] = sh.kind_name();
  if (sh.kind == ShapeKind::kCliqueCone || sh.kind == ShapeKind::kCliqueConeBiclique) j["s"] = sh.s;
  if (sh.kind == ShapeKind::kCliqueConeBiclique) {
    j["a"] = sh.a;
    j["b"] = sh.b;
  }
  return j;
}

inline Json ct_verdict_json(int n, const CtVerdict& v) {
  Json j;
  j["independent"] = v.independent;
  if (v.witness) {
    const CtWitness& w = *v.witness;
    j["shape"] = shape_json(w.shape);
    j["weight"] = w.weight;
    j["H_edges"] = edges_json(n, w.subgraph);
    j["cover_set"] = mask_vertices(w.placement.cone);
    j["biclique_sides"] = {mask_vertices(w.placement.side_a), mask_vertices(w.placement.side_b)};
  }
  return j;
}

namespace detail {

/// Smallest index in [0, total) where ok(i) is false, scanning in parallel.
template <class Ok>
std::optional<std::int64_t> first_failure(std::int64_t total, int jobs, Ok&& ok) {
  std::vector<std::int64_t> firsts(static_cast<std::size_t>(std::max(jobs, 1)), -1);
  parallel_chunks(0, total, jobs, [&](int j, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      if (!ok(i)) {
        firsts[static_cast<std::size_t>(j)] = i;
        return;
      }
    }
  });
  for (std::int64_t f : firsts)
    if (f >= 0) return f;
  return std::nullopt;
}

/// Each element of {0..m-1} kept with probability 1/2.
inline std::vector<EdgeSet> coin_subsets(int m, long long count, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<EdgeSet> out(static_cast<std::size_t>(count));
  for (auto& x : out)
    for (int e = 0; e < m; ++e)
      if (eng() >> 63) x.insert(e);
  return out;
}

/// A size drawn uniformly from [0, max_size], then a uniform subset of that size.
inline std::vector<EdgeSet> sized_subsets(int m, int max_size, long long count, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> size_dist(0, std::min(m, max_size));
  std::vector<int> pool = iota_vertices(m);
  std::vector<EdgeSet> out(static_cast<std::size_t>(count));
  for (auto& x : out) {
    const int k = size_dist(eng);
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, m - 1);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(eng))]);
      x.insert(pool[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

/// Every labeled K_{a,b} (a, b >= 1) in K_n, each edge set once.
inline std::vector<EdgeSet> labeled_bicliques(int n, int a, int b) {
  std::set<EdgeSet> seen;
  std::vector<EdgeSet> out;
  const auto all = iota_vertices(n);
  for_each_combination(all, a, [&](const std::vector<int>& as) {
    std::vector<int> rest;
    for (int v : all)
      if (std::find(as.begin(), as.end(), v) == as.end()) rest.push_back(v);
    for_each_combination(rest, b, [&](const std::vector<int>& bs) {
      EdgeSet s;
      for (int u : as)
        for (int v : bs) s.insert(edge_index(n, u, v));
      if (seen.insert(s).second) out.push_back(s);
    });
  });
  return out;
}

inline int choose2(int k) { return k * (k - 1) / 2; }

inline GenericLinearMatroid tensor(int n, int t, const SuiteParams& p) {
  return GenericLinearMatroid(n, LinearModel::symmetric_tensor(t), p.field(), p.trials);
}

inline GenericLinearMatroid rigidity(int n, int d, const SuiteParams& p) {
  return GenericLinearMatroid(n, LinearModel::rigidity(d), p.field(), p.trials);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Full ranks of S_t(K_n) and R_d(K_n).

inline SuiteOutcome rank_identities_suite(const SuiteParams& p) {
  SuiteOutcome out{"ranks"};
  int checked = 0;
  for (int t = 1; t <= 5; ++t)
    for (int n = t + 1; n <= 8; ++n) {
      const int r = full_rank(detail::tensor(n, t, p));
      ++checked;
      if (r != t * (t + 1) / 2) out.fail({{"model", "S:" + std::to_string(t)}, {"n", n}, {"rank", r}, {"expected", t * (t + 1) / 2}});
    }
  for (int d = 1; d <= 3; ++d)
    for (int n = d + 2; n <= 8; ++n) {
      const int r = full_rank(detail::rigidity(n, d, p));
      const int expected = d * n - d * (d + 1) / 2;
      ++checked;
      if (r != expected) out.fail({{"model", "R:" + std::to_string(d)}, {"n", n}, {"rank", r}, {"expected", expected}});
    }
  out.facts["full_rank_checks"] = checked;
  out.summary = std::to_string(checked) + " full-rank identities" + (out.passed ? " hold" : " checked, mismatch found");
  return out;
}

// ---------------------------------------------------------------------------
// r_{R_d}(X) = |X| - r_{S_t}(E) + r_{S_t}(E - X), t = n - d - 1.

inline SuiteOutcome duality_case(int n, int d, std::optional<long long> samples, const SuiteParams& p) {
  SuiteOutcome out{"duality"};
  const int t = n - d - 1;
  if (d < 1 || t < 1) throw std::invalid_argument("duality: need d >= 1 and t = n-d-1 >= 1");
  const auto s = detail::tensor(n, t, p);
  const auto r = detail::rigidity(n, d, p);
  const int m = edge_count(n);
  const EdgeSet ground = EdgeSet::full(m);
  const int full_s = s.rank(ground);
  const bool exhaustive = !samples && m <= 15;
  std::vector<EdgeSet> sample;
  if (!exhaustive) sample = detail::coin_subsets(m, samples.value_or(10000), p.seed + 7919 * static_cast<std::uint64_t>(d));
  const std::int64_t total = exhaustive ? (std::int64_t{1} << m) : static_cast<std::int64_t>(sample.size());
  auto subset = [&](std::int64_t i) {
    return exhaustive ? EdgeSet::from_words(static_cast<std::uint64_t>(i)) : sample[static_cast<std::size_t>(i)];
  };
  auto ok = [&](std::int64_t i) {
    const EdgeSet x = subset(i);
    return r.rank(x) == x.size() - full_s + s.rank(ground - x);
  };
  const auto bad = detail::first_failure(total, p.jobs, ok);
  out.facts = {{"n", n}, {"d", d}, {"t", t}, {"mode", exhaustive ? "exhaustive" : "sampled"},
               {"subsets", total}, {"rank_S", full_s}, {"rank_R", r.rank(ground)}, {"mismatches", bad ? 1 : 0}};
  if (bad) {
    const EdgeSet x = subset(*bad);
    out.fail({{"n", n}, {"d", d}, {"edges", edges_json(n, x)}, {"rank_R", r.rank(x)},
              {"dual_formula", x.size() - full_s + s.rank(ground - x)}});
  }
  out.summary = "R_" + std::to_string(d) + "(K_" + std::to_string(n) + ") = S_" + std::to_string(t) + "* on " +
                std::to_string(total) + (exhaustive ? " subsets (exhaustive)" : " sampled subsets") +
                (out.passed ? "" : ": MISMATCH");
  return out;
}

inline SuiteOutcome duality_suite(const SuiteParams& p) {
  std::vector<int> ns = p.n ? std::vector<int>{*p.n} : std::vector<int>{5, 6, 7};
  std::vector<SuiteOutcome> parts;
  for (int n : ns) {
    std::vector<int> ds;
    if (p.d) ds = {*p.d};
    else if (p.t) ds = {n - *p.t - 1};
    else
      for (int d = 1; d <= n - 2; ++d) ds.push_back(d);
    for (int d : ds) parts.push_back(duality_case(n, d, p.samples, p));
  }
  return combine("duality", parts);
}

// ---------------------------------------------------------------------------
// Stars, cliques and bicliques in S_t(K_n).

inline SuiteOutcome axioms_case(int n, int t, const SuiteParams& p) {
  SuiteOutcome out{"axioms"};
  const auto s = detail::tensor(n, t, p);
  long long stars = 0, cliques = 0, circuits = 0, flats = 0;
  if (n >= t + 2) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> others;
      for (int w = 0; w < n; ++w)
        if (w != v) others.push_back(w);
      for_each_combination(others, t + 1, [&](const std::vector<int>& leaves) {
        EdgeSet x;
        for (int w : leaves) x.insert(edge_index(n, v, w));
        ++stars;
        if (!is_circuit(s, x)) out.fail({{"claim", "star is a circuit"}, {"n", n}, {"t", t}, {"edges", edges_json(n, x)}});
      });
    }
  }
  for_each_combination(iota_vertices(n), n - t + 1, [&](const std::vector<int>& vs) {
    const EdgeSet x = clique_edges(n, vs);
    ++cliques;
    if (!is_cocircuit(s, x)) out.fail({{"claim", "clique is a cocircuit"}, {"n", n}, {"t", t}, {"edges", edges_json(n, x)}});
  });
  for (int a = 1; a <= (t + 2) / 2; ++a) {
    const int b = t + 2 - a;
    if (a + b > n) continue;
    for (const EdgeSet& x : detail::labeled_bicliques(n, a, b)) {
      ++circuits;
      const int r = s.rank(x);
      if (r != a * b - 1 || !is_circuit(s, x))
        out.fail({{"claim", "biclique is a circuit of rank ab-1"}, {"n", n}, {"t", t}, {"a", a}, {"b", b}, {"rank", r},
                  {"edges", edges_json(n, x)}});
    }
  }
  for (int a = 3; a <= t - 1; ++a)
    for (int b = a; b <= t - 1; ++b) {
      if (a + b < t + 2 || a + b > n) continue;
      const int expected = a * b - detail::choose2(a + b - t);
      for (const EdgeSet& x : detail::labeled_bicliques(n, a, b)) {
        ++flats;
        const int r = s.rank(x);
        if (r != expected || !is_flat(s, x) || !is_cyclic(s, x))
          out.fail({{"claim", "biclique is a cyclic flat"}, {"n", n}, {"t", t}, {"a", a}, {"b", b}, {"rank", r},
                    {"expected", expected}, {"edges", edges_json(n, x)}});
      }
    }
  out.facts = {{"n", n}, {"t", t}, {"star_circuits", stars}, {"clique_cocircuits", cliques},
               {"biclique_circuits", circuits}, {"biclique_cyclic_flats", flats}};
  out.summary = "S_" + std::to_string(t) + "(K_" + std::to_string(n) + "): " +
                std::to_string(stars + cliques + circuits + flats) + " labeled copies" +
                (out.passed ? " behave as claimed" : ", FAILURE");
  return out;
}

inline SuiteOutcome axioms_suite(const SuiteParams& p) {
  std::vector<SuiteOutcome> parts;
  if (p.n && p.t) {
    parts.push_back(axioms_case(*p.n, *p.t, p));
  } else {
    for (int t = 1; t <= 5; ++t)
      for (int n = std::max(t + 1, 3); n <= 7; ++n)
        if ((!p.t || *p.t == t) && (!p.n || *p.n == n)) parts.push_back(axioms_case(n, t, p));
  }
  return combine("axioms", parts);
}

// ---------------------------------------------------------------------------
// Combinatorial verdict against generic rank.

inline SuiteOutcome characterization_case(int n, int t, std::optional<long long> samples, const SuiteParams& p) {
  SuiteOutcome out{"characterization"};
  const int m = edge_count(n);
  const CtChecker ct(n, t);
  const auto s = detail::tensor(n, t, p);
  const bool exhaustive = !samples && m <= 15;
  std::optional<ExplicitMatroid> table;
  std::vector<EdgeSet> sample;
  if (exhaustive) table = s.to_explicit();
  else
    sample = detail::sized_subsets(m, t * (t + 1) / 2 + 1, samples.value_or(100000), p.seed);
  const std::int64_t total = exhaustive ? (std::int64_t{1} << m) : static_cast<std::int64_t>(sample.size());
  auto subset = [&](std::int64_t i) {
    return exhaustive ? EdgeSet::from_words(static_cast<std::uint64_t>(i)) : sample[static_cast<std::size_t>(i)];
  };
  auto generic_rank = [&](const EdgeSet& x) { return table ? table->rank(x) : s.rank(x); };
  const auto bad = detail::first_failure(total, p.jobs, [&](std::int64_t i) {
    const EdgeSet x = subset(i);
    const bool combinatorial = ct.independent(x);
    return combinatorial == (generic_rank(x) == x.size());
  });
  long long independent = 0;
  for (std::int64_t i = 0; i < (bad ? *bad : total); ++i) {
    const EdgeSet x = subset(i);
    independent += generic_rank(x) == x.size();
  }
  out.facts = {{"n", n}, {"t", t}, {"mode", exhaustive ? "exhaustive" : "sampled"}, {"subsets", total},
               {"independent", independent}, {"mismatches", bad ? 1 : 0}};
  if (bad) {
    const EdgeSet x = subset(*bad);
    out.fail({{"n", n}, {"t", t}, {"edges", edges_json(n, x)}, {"generic_rank", generic_rank(x)},
              {"combinatorial", ct_verdict_json(n, ct.check(x))}});
  }
  out.summary = "t=" + std::to_string(t) + ", n=" + std::to_string(n) + ": " + std::to_string(total) +
                (exhaustive ? " subsets (exhaustive)" : " sampled subsets") +
                (out.passed ? ", verdicts agree" : ", MISMATCH");
  return out;
}

inline SuiteOutcome characterization_suite(const SuiteParams& p) {
  std::vector<SuiteOutcome> parts;
  if (p.t) {
    parts.push_back(characterization_case(p.n.value_or(*p.t + 2), *p.t, p.samples, p));
  } else {
    for (int t = 1; t <= 4; ++t) parts.push_back(characterization_case(t + 2, t, std::nullopt, p));
    parts.push_back(characterization_case(7, 5, p.samples.value_or(100000), p));
  }
  return combine("characterization", parts);
}

// ---------------------------------------------------------------------------
// (K_6 - e) u (K_6 - f) at t = 7.

inline LabeledGraph t7_counterexample_graph() {
  LabeledGraph g(12);
  for (int base : {0, 6})
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (!(i == 0 && j == 1)) g.add_edge(base + i, base + j);
  return g;
}

inline SuiteOutcome counterexample_t7_suite(const SuiteParams& p) {
  SuiteOutcome out{"counterexample-t7"};
  const LabeledGraph g = t7_counterexample_graph();
  const CtVerdict v = is_ct_independent(g, 7);
  const auto s = detail::tensor(12, 7, p);
  const int r = s.rank(g.edges());
  const bool circuit = is_circuit(s, g.edges());
  out.facts = {{"graph", graph_to_json(g)}, {"t", 7}, {"edges", g.num_edges()}, {"ct_independent", v.independent},
               {"rank", r}, {"circuit", circuit}};
  if (!v.independent || r != 27 || !circuit)
    out.fail({{"ct", ct_verdict_json(12, v)}, {"rank", r}, {"circuit", circuit}});
  out.summary = "rank " + std::to_string(r) + " of " + std::to_string(g.num_edges()) + " edges, " +
                (circuit ? "a circuit" : "not a circuit") + ", " +
                (v.independent ? "C_7-independent" : "C_7-dependent");
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic-flat constructions.

inline Json violation_json(const RankedFamily& fam, const CyclicFlatReport& rep, int n) {
  Json j = Json::array();
  for (const auto& v : rep.violations) {
    Json e{{"axiom", v.axiom}, {"detail", v.detail}};
    if (v.first >= 0) e["first"] = edges_json(n, fam.members[static_cast<std::size_t>(v.first)].set);
    if (v.second >= 0) e["second"] = edges_json(n, fam.members[static_cast<std::size_t>(v.second)].set);
    j.push_back(e);
  }
  return j;
}

inline SuiteOutcome mtn_case(int t, int n) {
  SuiteOutcome out{"mtn"};
  const MtnSpec spec{t, n};
  const RankedFamily fam = mtn_family(spec);
  const CyclicFlatReport rep = check_cyclic_flat_axioms(fam);
  out.facts = {{"t", t}, {"n", n}, {"tau", spec.tau()}, {"cyclic_flats", fam.members.size()}, {"Z0", rep.z0},
               {"Z1", rep.z1}, {"Z2", rep.z2}, {"Z3", rep.z3}};
  if (!rep.ok()) {
    out.fail({{"t", t}, {"n", n}, {"violations", violation_json(fam, rep, n)}});
  } else {
    const BuiltMatroid built = build_mtn(spec);
    out.facts["rank"] = built.matroid.full_rank();
    if (built.matroid.full_rank() != spec.f(spec.tau()))
      out.fail({{"t", t}, {"n", n}, {"rank", built.matroid.full_rank()}, {"expected", spec.f(spec.tau())}});
  }
  out.summary = "M_{" + std::to_string(t) + "," + std::to_string(n) + "}" +
                (out.passed ? " passes Z0-Z3, rank " + std::to_string(spec.f(spec.tau())) : " FAILS");
  return out;
}

inline SuiteOutcome mtn_suite(const SuiteParams& p) {
  std::vector<std::pair<int, int>> cases = {{3, 5}, {4, 6}, {5, 6}, {5, 7}};
  if (p.t && p.n) cases = {{*p.t, *p.n}};
  std::vector<SuiteOutcome> parts;
  for (auto [t, n] : cases) parts.push_back(mtn_case(t, n));
  return combine("mtn", parts);
}

/// N(n): axioms, rank 10, and each listed member a cyclic flat of its rank.
inline SuiteOutcome remark_construction_suite(int n = 7) {
  SuiteOutcome out{"remarkN"};
  const RankedFamily fam = remark_n_family(n);
  const CyclicFlatReport rep = check_cyclic_flat_axioms(fam);
  out.facts = {{"n", n}, {"cyclic_flats", fam.members.size()}, {"Z0", rep.z0}, {"Z1", rep.z1}, {"Z2", rep.z2},
               {"Z3", rep.z3}};
  if (!rep.ok()) {
    out.fail({{"violations", violation_json(fam, rep, n)}});
    out.summary = "N(" + std::to_string(n) + ") FAILS the cyclic-flat axioms";
    return out;
  }
  const BuiltMatroid built = build_remark_n(n);
  const ExplicitMatroid& m = built.matroid;
  std::map<int, int> by_rank;
  for (const auto& z : fam.members) {
    if (z.set.empty() || z.set == m.ground()) continue;
    ++by_rank[z.rank];
    if (m.rank(z.set) != z.rank || !is_flat(m, z.set) || !is_cyclic(m, z.set))
      out.fail({{"claim", "listed member is a cyclic flat of its rank"}, {"edges", edges_json(n, z.set)},
                {"listed_rank", z.rank}, {"rank", m.rank(z.set)}});
  }
  Json ranks = Json::object();
  for (auto [r, c] : by_rank) ranks[std::to_string(r)] = c;
  out.facts["rank"] = m.full_rank();
  out.facts["proper_flats_by_rank"] = ranks;
  std::vector<int> listed;
  for (auto [r, c] : by_rank) listed.push_back(r);
  if (m.full_rank() != 10 || listed != std::vector<int>{4, 7, 8, 9})
    out.fail({{"rank", m.full_rank()}, {"flat_ranks", listed}});
  out.summary = "N(" + std::to_string(n) + ") passes Z0-Z3, rank " + std::to_string(m.full_rank()) +
                ", proper cyclic flat ranks 4,7,8,9" + (out.passed ? "" : " (FAIL)");
  return out;
}

/// Rank-8 truncations of N(7) and M_{5,7}, circuit containment, and the val bracket.
inline SuiteOutcome remark_bracket_suite(const SuiteParams& p) {
  SuiteOutcome out{"N-bracket"};
  const int n = 7;
  const ExplicitMatroid nm = build_remark_n(n).matroid;
  const ExplicitMatroid mm = build_mtn({5, n}).matroid;
  const ExplicitMatroid nt = truncate(truncate(nm));
  const ExplicitMatroid mt = truncate(mm);
  const std::int64_t total = std::int64_t{1} << nm.ground_size();
  const auto bad = detail::first_failure(total, p.jobs, [&](std::int64_t i) {
    const auto x = static_cast<std::uint32_t>(i);
    return nt.rank_of_mask(x) == mt.rank_of_mask(x);
  });
  if (bad) {
    const EdgeSet x = EdgeSet::from_words(static_cast<std::uint64_t>(*bad));
    out.fail({{"claim", "rank-8 truncations agree"}, {"edges", edges_json(n, x)}, {"rank_N8", nt.rank(x)},
              {"rank_M8", mt.rank(x)}});
  }
  const std::vector<EdgeSet> circuits = nonspanning_circuits(mm);
  std::map<int, int> circuit_ranks;
  for (const EdgeSet& c : circuits) {
    ++circuit_ranks[mm.rank(c)];
    if (!is_circuit_mask(nm, c.to_mask32()))
      out.fail({{"claim", "nonspanning circuit of M_{5,7} is a circuit of N"}, {"edges", edges_json(n, c)}});
  }
  Json cr = Json::object();
  for (auto [r, c] : circuit_ranks) cr[std::to_string(r)] = c;
  // Every pattern set is a circuit of N, so val over them bounds rank N from above.
  const int lower = nm.full_rank();
  const ValSearch upper = val_upper(nm.ground(), circuits, 200000, lower);
  if (upper.best < lower)
    out.fail({{"claim", "val is at least rank N"}, {"val_upper", upper.best}, {"rank_N", lower}});
  out.facts = {{"n", n},
               {"subsets", total},
               {"truncations_agree", !bad.has_value()},
               {"nonspanning_circuits_M", circuits.size()},
               {"circuit_ranks_M", cr},
               {"rank_N", lower},
               {"rank_M", mm.full_rank()},
               {"val_lower", lower},
               {"val_upper", upper.best},
               {"val_upper_search_complete", !upper.exhausted_budget}};
  if (lower <= mm.full_rank()) out.fail({{"claim", "val bound exceeds rank M"}, {"val_lower", lower}});
  out.summary = "truncations agree on " + std::to_string(total) + " subsets; val in [" + std::to_string(lower) + ", " +
                std::to_string(upper.best) + "] > " + std::to_string(mm.full_rank()) + " = rank M_{5,7}" +
                (out.passed ? "" : " (FAIL)");
  return out;
}

inline SuiteOutcome remark_suite(const SuiteParams& p) {
  return combine("remarkN", {remark_construction_suite(7), remark_bracket_suite(p)});
}

// ---------------------------------------------------------------------------
// Free elevations of uniform star matroids.

/// Equality with M_{t,n} is asserted when n >= 2*tau; below that the
/// comparison is reported only. For t = 3 the first erection must be trivial.
inline SuiteOutcome elevation_case(int n, int t) {
  SuiteOutcome out{"elevation"};
  const ExplicitMatroid u = uniform_star_matroid(n, t);
  const ElevationResult el = free_elevation(u);
  const MtnSpec spec{t, n};
  const ExplicitMatroid target = build_mtn(spec).matroid;
  const EqualityResult eq = matroids_equal(el.matroid, target, Exhaustive{});
  const bool claimed = n >= 2 * spec.tau();
  out.facts = {{"n", n}, {"t", t}, {"ranks", el.ranks}, {"trivial_erection", el.ranks.size() == 1},
               {"equals_mtn", eq.equal}, {"claim_applies", claimed}, {"subsets", eq.compared}};
  if (t == 3 && el.ranks.size() != 1)
    out.fail({{"n", n}, {"t", t}, {"claim", "free erection is trivial"}, {"ranks", el.ranks}});
  if (claimed && !eq.equal)
    out.fail({{"n", n}, {"t", t}, {"edges", edges_json(n, *eq.witness)}, {"rank_elevation", el.matroid.rank(*eq.witness)},
              {"rank_mtn", target.rank(*eq.witness)}});
  const std::string mtn = "M_{" + std::to_string(t) + "," + std::to_string(n) + "}";
  out.summary = "elevation " + std::string(eq.equal ? "==" : "!=") + " " + mtn + ", rank " +
                std::to_string(el.matroid.full_rank()) + (el.ranks.size() == 1 ? " (trivial erection)" : "");
  return out;
}

inline SuiteOutcome elevation_suite(const SuiteParams& p) {
  std::vector<std::pair<int, int>> cases = {{6, 4}, {6, 5}, {5, 3}, {6, 3}};
  if (p.n && p.t) cases = {{*p.n, *p.t}};
  std::vector<SuiteOutcome> parts;
  for (auto [n, t] : cases) parts.push_back(elevation_case(n, t));
  return combine("elevation", parts);
}

/// t = 4, n = 6: the free elevation of the rank-5 star matroid and S_4(K_6).
inline SuiteOutcome two_maximal_suite(const SuiteParams& p) {
  SuiteOutcome out{"two-maximal"};
  const int n = 6;
  const ExplicitMatroid u = uniform_star_matroid(n, 5);
  std::set<EdgeSet> stars;
  for (int v = 0; v < n; ++v) stars.insert(vertex_star(n, v));
  const auto nsc = nonspanning_circuits(u);
  if (std::set<EdgeSet>(nsc.begin(), nsc.end()) != stars)
    out.fail({{"claim", "nonspanning circuits of the rank-5 matroid are the K_{1,5} stars"}, {"count", nsc.size()}});
  const ElevationResult el = free_elevation(u);
  const ExplicitMatroid s4 = detail::tensor(n, 4, p).to_explicit();
  bool stars_el = true, stars_s4 = true;
  for (const EdgeSet& s : stars) {
    stars_el &= is_circuit_mask(el.matroid, s.to_mask32());
    stars_s4 &= is_circuit_mask(s4, s.to_mask32());
  }
  out.facts = {{"n", n},
               {"t", 4},
               {"start_rank", u.full_rank()},
               {"elevation_ranks", el.ranks},
               {"rank_elevation", el.matroid.full_rank()},
               {"rank_S4", s4.full_rank()},
               {"stars_circuits_in_elevation", stars_el},
               {"stars_circuits_in_S4", stars_s4}};
  if (el.matroid.full_rank() > 9 || s4.full_rank() != 10 || !stars_el || !stars_s4)
    out.fail({{"rank_elevation", el.matroid.full_rank()}, {"rank_S4", s4.full_rank()},
              {"stars_circuits_in_elevation", stars_el}, {"stars_circuits_in_S4", stars_s4}});
  out.summary = "free elevation rank " + std::to_string(el.matroid.full_rank()) + " <= 9 < " +
                std::to_string(s4.full_rank()) + " = rank S_4(K_6); K_{1,5} stars are circuits of both" +
                (out.passed ? "" : " (FAIL)");
  return out;
}

// ---------------------------------------------------------------------------
// Property suites.

inline SuiteOutcome table_axioms_part(const SuiteParams& p) {
  SuiteOutcome out{"table-axioms"};
  std::vector<std::pair<std::string, ExplicitMatroid>> tables;
  for (auto [n, t] : std::vector<std::pair<int, int>>{{5, 3}, {5, 4}, {6, 3}, {6, 4}, {6, 5}})
    tables.emplace_back("uniform_star(" + std::to_string(n) + "," + std::to_string(t) + ")", uniform_star_matroid(n, t));
  for (auto [t, n] : std::vector<std::pair<int, int>>{{3, 5}, {4, 6}, {5, 6}, {5, 7}})
    tables.emplace_back("M_{" + std::to_string(t) + "," + std::to_string(n) + "}", build_mtn({t, n}).matroid);
  tables.emplace_back("N(7)", build_remark_n(7).matroid);
  for (auto [n, t] : std::vector<std::pair<int, int>>{{6, 4}, {6, 5}})
    tables.emplace_back("elevation(" + std::to_string(n) + "," + std::to_string(t) + ")",
                        free_elevation(uniform_star_matroid(n, t)).matroid);
  for (int n = 3; n <= 6; ++n) {
    for (int t = 1; t <= 4; ++t) tables.emplace_back("S_" + std::to_string(t) + "(K_" + std::to_string(n) + ")",
                                                     detail::tensor(n, t, p).to_explicit());
    for (int d = 1; d <= 3; ++d) tables.emplace_back("R_" + std::to_string(d) + "(K_" + std::to_string(n) + ")",
                                                     detail::rigidity(n, d, p).to_explicit());
  }
  for (const auto& [name, m] : tables)
    if (auto v = m.axiom_violation()) out.fail({{"table", name}, {"violation", *v}});
  out.facts = {{"tables", tables.size()}};
  out.summary = std::to_string(tables.size()) + " rank tables satisfy the rank axioms" + (out.passed ? "" : " (FAIL)");
  return out;
}

inline SuiteOutcome oracle_agreement_part(const SuiteParams& p) {
  SuiteOutcome out{"ct-oracle-agreement"};
  long long graphs = 0;
  for (int n = 3; n <= 6; ++n)
    for (int t = 1; t <= std::min(4, n - 1); ++t) {
      const CtChecker ct(n, t);
      const std::int64_t total = std::int64_t{1} << edge_count(n);
      const auto bad = detail::first_failure(total, p.jobs, [&](std::int64_t i) {
        const EdgeSet x = EdgeSet::from_words(static_cast<std::uint64_t>(i));
        return ct.independent(x) == ct_independent_bruteforce(LabeledGraph(n, x), t);
      });
      graphs += total;
      if (bad) {
        const EdgeSet x = EdgeSet::from_words(static_cast<std::uint64_t>(*bad));
        out.fail({{"n", n}, {"t", t}, {"edges", edges_json(n, x)}, {"fast", ct.independent(x)}});
      }
    }
  out.facts = {{"graphs", graphs}};
  out.summary = "shape checker matches brute force on " + std::to_string(graphs) + " labeled graphs" +
                (out.passed ? "" : " (FAIL)");
  return out;
}

inline SuiteOutcome double_dual_part(const SuiteParams& p) {
  SuiteOutcome out{"double-dual"};
  long long compared = 0;
  auto check = [&](const std::string& name, const auto& m) {
    using M = std::decay_t<decltype(m)>;
    const DualOracle<M> dual(m);
    const DualOracle<DualOracle<M>> dual2(dual);
    const EqualityResult eq = matroids_equal(dual2, m, Exhaustive{});
    compared += eq.compared;
    if (!eq.equal) out.fail({{"matroid", name}, {"set", eq.witness->to_string()}});
  };
  for (int n = 3; n <= 6; ++n)
    for (int t = 1; t <= 4; ++t) check("S_" + std::to_string(t) + "(K_" + std::to_string(n) + ")", detail::tensor(n, t, p));
  check("M_{4,6}", build_mtn({4, 6}).matroid);
  check("uniform_star(6,5)", uniform_star_matroid(6, 5));
  out.facts = {{"subsets", compared}};
  out.summary = "(M*)* = M on " + std::to_string(compared) + " subsets" + (out.passed ? "" : " (FAIL)");
  return out;
}

/// A random graph with `m` edges and maximum degree <= 3, or nothing if the
/// greedy draw gets stuck.
inline std::optional<LabeledGraph> random_cubic_bounded_graph(int n, int m, std::mt19937_64& eng) {
  LabeledGraph g(n);
  for (int k = 0; k < m; ++k) {
    std::vector<Edge> cands;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!g.has_edge(i, j) && g.degree(i) < 3 && g.degree(j) < 3) cands.push_back({i, j});
    if (cands.empty()) return std::nullopt;
    const Edge e = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(eng)];
    g.add_edge(e.u, e.v);
  }
  return g;
}

inline SuiteOutcome labelling_part(const SuiteParams& p) {
  SuiteOutcome out{"labelling-certificates"};
  const long long count = p.samples.value_or(1000);
  std::mt19937_64 eng(p.seed);
  std::map<std::pair<int, int>, std::unique_ptr<GenericLinearMatroid>> cache;
  auto tensor = [&](int n, int t) -> const GenericLinearMatroid& {
    auto& slot = cache[{n, t}];
    if (!slot) slot = std::make_unique<GenericLinearMatroid>(n, LinearModel::symmetric_tensor(t), p.field(), p.trials);
    return *slot;
  };
  long long labelled = 0, premise = 0, certified = 0;
  std::map<char, int> patterns;
  for (long long i = 0; i < count; ++i) {
    const int t = std::uniform_int_distribution<int>(2, 5)(eng);
    const int m = t * (t + 1) / 2;
    const int lo = std::max(t + 2, (2 * m + 2) / 3);
    std::optional<LabeledGraph> g;
    while (!g) g = random_cubic_bounded_graph(std::uniform_int_distribution<int>(lo, 14)(eng), m, eng);
    const auto lab = find_valid_labelling(*g, t);
    if (!lab) continue;
    ++labelled;
    ++patterns[lab->pattern];
    const LabellingCheck chk = is_valid_labelling(*g, lab->labelling, t);
    if (!chk.valid) {
      out.fail({{"claim", "returned labelling is valid"}, {"graph", graph_to_json(*g)}, {"t", t}, {"detail", chk.detail}});
      continue;
    }
    if (tensor(g->n(), t - 1).rank(lab->reduced) != lab->reduced.num_edges()) continue;
    ++premise;
    const int r = tensor(g->n(), t).rank(*g);
    if (r == m) ++certified;
    else
      out.fail({{"claim", "labelled graph over a base is a base"}, {"graph", graph_to_json(*g)}, {"t", t}, {"rank", r},
                {"pattern", std::string(1, lab->pattern)}});
  }
  Json pj = Json::object();
  for (auto [c, k] : patterns) pj[std::string(1, c)] = k;
  out.facts = {{"graphs", count}, {"labelled", labelled}, {"reduced_is_base", premise}, {"certified", certified},
               {"patterns", pj}};
  out.summary = std::to_string(certified) + "/" + std::to_string(premise) + " labelling certificates lift to bases (" +
                std::to_string(count) + " random graphs)";
  return out;
}

inline SuiteOutcome properties_suite(const SuiteParams& p) {
  return combine("properties", {table_axioms_part(p), oracle_agreement_part(p), double_dual_part(p), labelling_part(p)});
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"duality",   "characterization", "axioms",      "mtn",
                                                 "elevation", "remarkN",          "counterexample-t7",
                                                 "ranks",     "two-maximal",      "properties"};
  return names;
}

/// Throws std::invalid_argument for an unknown suite name.
inline SuiteOutcome run_suite(const std::string& name, const SuiteParams& p) {
  if (name == "duality") return duality_suite(p);
  if (name == "characterization") return characterization_suite(p);
  if (name == "axioms") return axioms_suite(p);
  if (name == "mtn") return mtn_suite(p);
  if (name == "elevation") return elevation_suite(p);
  if (name == "remarkN") return remark_suite(p);
  if (name == "counterexample-t7") return counterexample_t7_suite(p);
  if (name == "ranks") return rank_identities_suite(p);
  if (name == "two-maximal") return two_maximal_suite(p);
  if (name == "properties") return properties_suite(p);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace symtensor
