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


#include "symtensor/suites.hpp"

#include <numeric>
#include <set>

#include <gtest/gtest.h>

namespace symtensor {
namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Suites, FirstFailureIsSmallestIndexForAnyJobCount) {
  std::mt19937_64 eng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t total = 1 + static_cast<std::int64_t>(eng() % 500);
    std::set<std::int64_t> bad;
    for (int k = 0; k < 3; ++k)
      if (eng() % 2) bad.insert(static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(total)));
    for (int jobs : {1, 2, 3, 7}) {
      const auto got = detail::first_failure(total, jobs, [&](std::int64_t i) { return !bad.count(i); });
      if (bad.empty()) EXPECT_FALSE(got.has_value());
      else
        EXPECT_EQ(got, *bad.begin());
    }
  }
}

TEST(Suites, SizedSubsetsStayInRangeAndRepeat) {
  const auto a = detail::sized_subsets(21, 16, 2000, 11);
  const auto b = detail::sized_subsets(21, 16, 2000, 11);
  EXPECT_EQ(a, b);
  std::set<int> sizes;
  for (const auto& x : a) {
    EXPECT_TRUE(x.is_subset_of(EdgeSet::full(21)));
    EXPECT_LE(x.size(), 16);
    sizes.insert(x.size());
  }
  EXPECT_EQ(sizes.size(), 17u);  // every size 0..16 drawn
  EXPECT_NE(detail::sized_subsets(21, 16, 50, 12), std::vector<EdgeSet>(a.begin(), a.begin() + 50));
}

TEST(Suites, LabeledBicliqueCounts) {
  for (int n = 3; n <= 7; ++n)
    for (int a = 1; a <= 3; ++a)
      for (int b = a; a + b <= n; ++b) {
        const long long expected = binom(n, a) * binom(n - a, b) / (a == b ? 2 : 1);
        const auto copies = detail::labeled_bicliques(n, a, b);
        EXPECT_EQ(static_cast<long long>(copies.size()), expected) << n << " " << a << " " << b;
        for (const auto& x : copies) EXPECT_EQ(x.size(), a * b);
      }
}

TEST(Suites, CounterexampleGraphShape) {
  const LabeledGraph g = t7_counterexample_graph();
  EXPECT_EQ(g.n(), 12);
  EXPECT_EQ(g.num_edges(), 28);
  for (int u = 0; u < 6; ++u)
    for (int v = 6; v < 12; ++v) EXPECT_FALSE(g.has_edge(u, v));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(6, 7));
}

TEST(Suites, RandomBoundedGraphs) {
  std::mt19937_64 eng(5);
  int built = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 6 + static_cast<int>(eng() % 8);
    const int m = static_cast<int>(eng() % (3 * n / 2 + 1));
    if (auto g = random_cubic_bounded_graph(n, m, eng)) {
      ++built;
      EXPECT_EQ(g->num_edges(), m);
      EXPECT_LE(g->max_degree(), 3);
    }
  }
  EXPECT_GT(built, 150);
}

TEST(Suites, VerdictJsonCarriesWitness) {
  const LabeledGraph star = LabeledGraph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const Json j = ct_verdict_json(6, is_ct_independent(star, 4));
  EXPECT_FALSE(j["independent"].get<bool>());
  EXPECT_EQ(j["shape"]["kind"], "CliqueCone");
  EXPECT_EQ(j["shape"]["s"], 1);
  EXPECT_EQ(j["cover_set"], Json::array({0}));
  EXPECT_EQ(j["H_edges"].size(), 5u);
  const Json k = ct_verdict_json(6, is_ct_independent(LabeledGraph::from_edges(6, {{0, 1}}), 4));
  EXPECT_TRUE(k["independent"].get<bool>());
  EXPECT_FALSE(k.contains("shape"));
}

TEST(Suites, CombineKeepsFirstCounterexample) {
  SuiteOutcome a("a"), b("b"), c("c");
  a.summary = "one";
  b.summary = "two";
  b.fail({{"which", "b"}});
  c.fail({{"which", "c"}});
  const SuiteOutcome all = combine("all", {a, b, c});
  EXPECT_FALSE(all.passed);
  EXPECT_EQ((*all.counterexample)["which"], "b");
  EXPECT_EQ(all.facts["parts"].size(), 3u);
  EXPECT_TRUE(combine("ok", {a}).passed);
}

TEST(Suites, SmallCasesPass) {
  SuiteParams p;
  EXPECT_TRUE(duality_case(4, 1, std::nullopt, p).passed);
  EXPECT_TRUE(axioms_case(5, 3, p).passed);
  EXPECT_TRUE(characterization_case(5, 3, std::nullopt, p).passed);
  EXPECT_TRUE(mtn_case(3, 5).passed);
  EXPECT_THROW(duality_case(4, 3, std::nullopt, p), std::invalid_argument);
}

TEST(Suites, ElevationBelowClaimedRangeIsReportedNotAsserted) {
  const SuiteOutcome out = elevation_case(5, 4);
  EXPECT_TRUE(out.passed);
  EXPECT_FALSE(out.facts["claim_applies"].get<bool>());
  const SuiteOutcome top = elevation_case(6, 4);
  EXPECT_TRUE(top.facts["claim_applies"].get<bool>());
  EXPECT_EQ(top.facts["ranks"], Json::array({4, 5, 6}));
  EXPECT_EQ(top.summary, "elevation == M_{4,6}, rank 6");
}

TEST(Suites, ReportsDoNotDependOnJobs) {
  SuiteParams one, many;
  many.jobs = 4;
  EXPECT_EQ(characterization_case(6, 4, std::nullopt, one).to_json().dump(),
            characterization_case(6, 4, std::nullopt, many).to_json().dump());
  EXPECT_EQ(duality_case(7, 2, 500, one).to_json().dump(), duality_case(7, 2, 500, many).to_json().dump());
}

TEST(Suites, SeedChangesSamplesNotVerdicts) {
  SuiteParams a, b;
  b.seed = 99;
  const SuiteOutcome x = characterization_case(7, 5, 3000, a);
  const SuiteOutcome y = characterization_case(7, 5, 3000, b);
  EXPECT_TRUE(x.passed);
  EXPECT_TRUE(y.passed);
  EXPECT_NE(x.facts["independent"], y.facts["independent"]);
}

TEST(Suites, NamedDispatch) {
  SuiteParams p;
  EXPECT_EQ(run_suite("counterexample-t7", p).summary, "rank 27 of 28 edges, a circuit, C_7-independent");
  EXPECT_THROW(run_suite("nope", p), std::invalid_argument);
  EXPECT_EQ(suite_names().size(), 10u);
}

}  // namespace
}  // namespace symtensor
