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


#include "symtensor/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

namespace symtensor {
namespace {

TEST(GraphIo, JsonParsesToCanonicalBits) {
  const auto g = parse_graph(R"({"n": 4, "edges": [[0,1],[2,3],[1,3]]})");
  EXPECT_EQ(g.n(), 4);
  // idx(0,1)=0, idx(1,3)=4, idx(2,3)=5 for n=4.
  EXPECT_EQ(g.edges(), EdgeSet::of({0, 4, 5}));
}

TEST(GraphIo, CompactParsesToCanonicalBits) {
  const auto g = parse_graph("5: 0-4, 1-2,3-4");
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.edges(), EdgeSet::of({3, 4, 9}));
  EXPECT_EQ(parse_graph("3:").num_edges(), 0);
  EXPECT_EQ(parse_graph(R"({"n": 3})").num_edges(), 0);
}

TEST(GraphIo, RoundTrips) {
  std::mt19937_64 eng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(eng() % kMaxVertices);
    LabeledGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (eng() % 3 == 0) g.add_edge(i, j);
    EXPECT_EQ(parse_graph(graph_to_json(g).dump()), g);
    EXPECT_EQ(parse_graph(graph_to_compact(g)), g);
  }
}

TEST(GraphIo, SerializationIsStable) {
  const auto g = LabeledGraph::from_edges(4, {{2, 3}, {0, 1}});
  EXPECT_EQ(graph_to_json(g).dump(), R"({"n":4,"edges":[[0,1],[2,3]]})");
  EXPECT_EQ(graph_to_compact(g), "4: 0-1,2-3");
}

TEST(GraphIo, RejectsMalformedInput) {
  for (const char* bad : {"", "   ", "{", R"({"edges": []})", R"({"n": "4"})", R"({"n": 4, "edges": [[0]]})",
                          R"({"n": 4, "edges": [[0, 4]]})", R"({"n": 4, "edges": [[1, 1]]})", R"({"n": 0})",
                          R"({"n": 17})", R"({"n": 4, "edges": {}})", "4 0-1", "4: 0-1,2", "x: 0-1", "4: 0-1a",
                          "4: 0--1"}) {
    EXPECT_THROW(parse_graph(bad), GraphParseError) << "input: " << bad;
  }
}

TEST(GraphIo, ReadsFiles) {
  const std::string path = ::testing::TempDir() + "graph_io_test.json";
  {
    std::ofstream out(path);
    out << "{\"n\": 3,\n \"edges\": [[0, 2]]}\n";
  }
  EXPECT_EQ(read_graph_file(path), LabeledGraph::from_edges(3, {{0, 2}}));
  std::remove(path.c_str());
  EXPECT_THROW(read_graph_file(path), GraphParseError);
}

}  // namespace
}  // namespace symtensor
