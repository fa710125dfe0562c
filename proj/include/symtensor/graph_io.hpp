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


// Text formats for graphs: a JSON object {"n": 6, "edges": [[0,1],[1,2]]}
// or the compact line "6: 0-1,1-2". Vertices are 0-based.

#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "symtensor/graphs.hpp"

namespace symtensor {

class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int parse_int_token(const std::string& tok, const std::string& context) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw GraphParseError("expected an integer in " + context + ", got '" + tok + "'");
  }
  if (pos != tok.size()) throw GraphParseError("trailing characters in " + context + ": '" + tok + "'");
  return v;
}

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline LabeledGraph build_graph(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > kMaxVertices)
    throw GraphParseError("vertex count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVertices) + "]");
  LabeledGraph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
      throw GraphParseError("invalid edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    g.add_edge(e.u, e.v);
  }
  return g;
}

}  // namespace detail

inline LabeledGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw GraphParseError("graph JSON needs an integer field \"n\"");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw GraphParseError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw GraphParseError("each edge must be a pair of integers");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
  }
  return detail::build_graph(j["n"].get<int>(), edges);
}

inline LabeledGraph parse_graph_compact(const std::string& text) {
  const std::string line = detail::trim(text);
  const auto colon = line.find(':');
  if (colon == std::string::npos) throw GraphParseError("compact graph needs 'n: i-j,...'");
  const int n = detail::parse_int_token(detail::trim(line.substr(0, colon)), "vertex count");
  std::vector<Edge> edges;
  std::stringstream rest(line.substr(colon + 1));
  std::string tok;
  while (std::getline(rest, tok, ',')) {
    tok = detail::trim(tok);
    if (tok.empty()) continue;
    const auto dash = tok.find('-');
    if (dash == std::string::npos) throw GraphParseError("edge token '" + tok + "' lacks '-'");
    edges.push_back({detail::parse_int_token(detail::trim(tok.substr(0, dash)), "edge"),
                     detail::parse_int_token(detail::trim(tok.substr(dash + 1)), "edge")});
  }
  return detail::build_graph(n, edges);
}

/// Dispatches on the first non-blank character: '{' means JSON.
inline LabeledGraph parse_graph(const std::string& text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw GraphParseError("empty graph description");
  return s.front() == '{' ? parse_graph_json(s) : parse_graph_compact(s);
}

inline LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline nlohmann::ordered_json graph_to_json(const LabeledGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edge_list()) j["edges"].push_back({e.u, e.v});
  return j;
}

inline std::string graph_to_compact(const LabeledGraph& g) {
  std::string s = std::to_string(g.n()) + ":";
  bool first = true;
  for (const Edge& e : g.edge_list()) {
    s += first ? " " : ",";
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return s;
}

}  // namespace symtensor
