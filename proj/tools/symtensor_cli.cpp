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


// symtensor_cli: JSON reports on stdout, human summary on stderr.
// Exit codes: 0 pass/independent, 1 fail/dependent, 2 usage or input error,
// 3 genericity failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symtensor/suites.hpp"

namespace {

using namespace symtensor;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGenericity = 3;

struct Options {
  std::optional<int> n, t, d;
  std::optional<long long> samples;
  std::optional<std::uint64_t> seed;
  int trials = 2;
  std::uint64_t prime = kMersenne61;
  int jobs = default_jobs();
  bool pretty = false;
  bool timing = false;
  std::string save_table, load_table;

  std::string graph_file, model = "S:2", suite;
  std::string check_file, build;
  bool uniform_star = false;
  std::optional<int> cap;
  std::string pattern, target, from;
  long long budget = 1000000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("MDL_SEED")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("MDL_SEED is not an unsigned integer: '" + std::string(env) + "'");
  }
  return kDefaultSeed;
}

SuiteParams params_of(const Options& o) {
  SuiteParams p;
  p.n = o.n;
  p.t = o.t;
  p.d = o.d;
  p.samples = o.samples;
  p.seed = resolve_seed(o);
  p.trials = o.trials;
  p.prime = o.prime;
  p.jobs = o.jobs;
  FieldConfig{p.prime, p.seed}.validate();
  if (p.trials < 1) throw UsageError("--trials must be at least 1");
  return p;
}

Json parameters_json(const Options& o, const SuiteParams& p) {
  Json j;
  j["n"] = o.n ? Json(*o.n) : Json(nullptr);
  j["t"] = o.t ? Json(*o.t) : Json(nullptr);
  j["d"] = o.d ? Json(*o.d) : Json(nullptr);
  j["seed"] = p.seed;
  j["trials"] = p.trials;
  j["prime"] = p.prime;
  return j;
}

/// The invocation without flags that cannot change the payload.
std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--timing" || a == "--json") continue;
    if (a == "--jobs") {
      ++i;
      continue;
    }
    if (a.rfind("--jobs=", 0) == 0) continue;
    out += (out.empty() ? "" : " ") + a;
  }
  return out;
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

ExplicitMatroid load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table file '" + path + "'");
  try {
    return ExplicitMatroid::load(in);
  } catch (const std::exception& e) {
    throw UsageError("table file '" + path + "': " + e.what());
  }
}

void save_table(const ExplicitMatroid& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write table file '" + path + "'");
  m.save(out);
}

LabeledGraph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

struct Result {
  Json payload;
  std::string summary;
  int code = kExitPass;
};

Result cmd_check_ct(const Options& o) {
  const int t = require(o.t, "--t");
  if (t < 1) throw UsageError("--t must be at least 1");
  const LabeledGraph g = load_graph(o.graph_file);
  const CtVerdict v = is_ct_independent(g, t);
  Json j{{"graph", graph_to_json(g)}, {"edges", g.num_edges()}};
  j.update(ct_verdict_json(g.n(), v));
  std::string summary = v.independent ? "C_" + std::to_string(t) + "-independent"
                                      : "C_" + std::to_string(t) + "-dependent: " +
                                            std::to_string(v.witness->subgraph.size()) + " edges in a copy of " +
                                            v.witness->shape.to_string() + " of weight " +
                                            std::to_string(v.witness->weight);
  return {j, summary, v.independent ? kExitPass : kExitFail};
}

Result cmd_verify(const Options& o, const SuiteParams& p) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UsageError("unknown suite '" + o.suite + "'");
  if (o.samples && *o.samples > 100000)
    std::cerr << "warning: --samples " << *o.samples << " exceeds the default scale; expect a longer run\n";
  const SuiteOutcome out = run_suite(o.suite, p);
  return {out.to_json(), (out.passed ? "PASS " : "FAIL ") + out.suite + ": " + out.summary,
          out.passed ? kExitPass : kExitFail};
}

Result cmd_rank(const Options& o, const SuiteParams& p) {
  LinearModel model;
  try {
    model = LinearModel::parse(o.model);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const LabeledGraph g = load_graph(o.graph_file);
  const GenericLinearMatroid m(g.n(), model, p.field(), p.trials);
  const int r = m.rank(g);
  const int full = full_rank(m);
  const bool independent = r == g.num_edges();
  const bool spanning = r == full;
  const bool circuit = !g.edges().empty() && is_circuit(m, g.edges());
  Json j{{"graph", graph_to_json(g)}, {"model", model.to_string()}, {"edges", g.num_edges()}, {"rank", r},
         {"full_rank", full}, {"independent", independent}, {"spanning", spanning},
         {"base", independent && spanning}, {"circuit", circuit}};
  std::string summary = "rank " + std::to_string(r) + " of " + std::to_string(g.num_edges()) + " edges under " +
                        model.to_string() + (independent ? ", independent" : "") + (spanning ? ", spanning" : "") +
                        (circuit ? ", circuit" : "");
  return {j, summary, independent ? kExitPass : kExitFail};
}

Result cmd_cyclic_flats(const Options& o) {
  RankedFamily fam;
  int n = 0;
  std::string what;
  if (!o.check_file.empty()) {
    n = require(o.n, "--n");
    std::ifstream in(o.check_file);
    if (!in) throw UsageError("cannot open family file '" + o.check_file + "'");
    try {
      fam = load_family(in, edge_count(n));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    what = o.check_file;
  } else if (o.build == "mtn") {
    n = require(o.n, "--n");
    try {
      fam = mtn_family({require(o.t, "--t"), n});
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    what = "M_{" + std::to_string(*o.t) + "," + std::to_string(n) + "}";
  } else if (o.build == "remarkN") {
    n = o.n.value_or(7);
    try {
      fam = remark_n_family(n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    what = "N(" + std::to_string(n) + ")";
  } else {
    throw UsageError("cyclic-flats needs --check FILE or --build mtn|remarkN");
  }
  const CyclicFlatReport rep = check_cyclic_flat_axioms(fam);
  Json j{{"family", what}, {"members", fam.members.size()}, {"Z0", rep.z0}, {"Z1", rep.z1}, {"Z2", rep.z2},
         {"Z3", rep.z3}, {"violation_count", rep.violation_count}, {"violations", violation_json(fam, rep, n)}};
  if (!rep.ok()) return {j, what + " FAILS the cyclic-flat axioms", kExitFail};
  const auto lattice = CyclicFlatLattice::verify(fam);
  j["rank"] = lattice.rank(lattice.ground());
  if (!o.save_table.empty()) save_table(lattice.to_explicit(), o.save_table);
  return {j, what + " passes Z0-Z3, rank " + std::to_string(j["rank"].get<int>()), kExitPass};
}

ExplicitMatroid start_matroid(const Options& o) {
  if (!o.load_table.empty()) return load_table(o.load_table);
  if (!o.uniform_star) throw UsageError("need --uniform-star (with --n, --t) or --load-table FILE");
  const int n = require(o.n, "--n");
  const int t = require(o.t, "--t");
  if (t < 3 || n < t + 1 || edge_count(n) > ExplicitMatroid::kMaxGround)
    throw UsageError("uniform star matroid needs t >= 3, n >= t+1 and at most 22 edges");
  return uniform_star_matroid(n, t);
}

void check_engine_size(const ExplicitMatroid& m) {
  if (m.ground_size() > SubsetTables::kMaxGround)
    throw UsageError("erection engine handles at most " + std::to_string(SubsetTables::kMaxGround) + " elements");
}

Result cmd_elevate(const Options& o) {
  const ExplicitMatroid m = start_matroid(o);
  check_engine_size(m);
  const ElevationResult el = free_elevation(m, o.cap);
  Json j{{"ground_size", m.ground_size()}, {"ranks", el.ranks}, {"final_rank", el.matroid.full_rank()},
         {"stopped_at_cap", el.stopped_at_cap}};
  if (o.uniform_star && o.n && o.t && *o.n >= *o.t + 1) {
    const ExplicitMatroid target = build_mtn({*o.t, *o.n}).matroid;
    j["equals_mtn"] = matroids_equal(el.matroid, target, Exhaustive{}).equal;
  }
  if (!o.save_table.empty()) save_table(el.matroid, o.save_table);
  std::string ranks;
  for (int r : el.ranks) ranks += (ranks.empty() ? "" : " -> ") + std::to_string(r);
  return {j, "free elevation ranks " + ranks + (el.stopped_at_cap ? " (stopped at cap)" : ""), kExitPass};
}

Result cmd_erect(const Options& o) {
  const ExplicitMatroid m = start_matroid(o);
  check_engine_size(m);
  const ErectionResult er = free_erection(m);
  Json j{{"ground_size", m.ground_size()}, {"rank", m.full_rank()}, {"erection_rank", er.matroid.full_rank()},
         {"trivial", er.trivial}, {"closure_size", er.closure_size}};
  if (!o.save_table.empty()) save_table(er.matroid, o.save_table);
  return {j, er.trivial ? "free erection is trivial" : "free erection has rank " + std::to_string(er.matroid.full_rank()),
          kExitPass};
}

Result cmd_val(const Options& o) {
  if (o.pattern.rfind("star:", 0) != 0) throw UsageError("--pattern must be star:<t>");
  int t = 0;
  try {
    t = std::stoi(o.pattern.substr(5));
  } catch (const std::exception&) {
    throw UsageError("--pattern must be star:<t>");
  }
  const LabeledGraph f = load_graph(o.target);
  const int n = f.n();
  if (t < 1 || t > n - 1) throw UsageError("star size out of range for the target graph");
  const std::vector<EdgeSet> patterns = star_pattern(n, t);
  const ValSearch vs = val_upper(f.edges(), patterns, o.budget);
  Json seq = Json::array();
  for (const auto& x : vs.sequence.members) seq.push_back(edges_json(n, x));
  Json j{{"target", graph_to_json(f)}, {"pattern", o.pattern}, {"val_upper", vs.best}, {"sequence", seq},
         {"extensions", vs.extensions}, {"budget_exhausted", vs.exhausted_budget}};
  std::string summary = "val <= " + std::to_string(vs.best);
  if (!o.from.empty()) {
    const LabeledGraph f0 = load_graph(o.from);
    if (f0.n() != n) throw UsageError("--from and --target graphs differ in vertex count");
    const auto ws = weakly_saturated_sequence(f0.edges(), f.edges(), patterns);
    j["weakly_saturated_from"] = graph_to_json(f0);
    j["weakly_saturated"] = ws.has_value();
    if (ws) {
      j["weakly_saturated_length"] = ws->members.size();
      summary += "; target is weakly saturated from the start graph (" + std::to_string(ws->members.size()) + " steps)";
    } else {
      summary += "; target is not reachable by a weakly saturated sequence";
    }
  }
  return {j, summary, kExitPass};
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "base seed (default 1, or MDL_SEED)");
  sub->add_option("--trials", o.trials, "independent realizations; all must agree")->capture_default_str();
  sub->add_option("--prime", o.prime, "field modulus, a prime above 2^31")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "worker threads for subset sweeps")->check(CLI::PositiveNumber);
  sub->add_flag("--json", o.pretty, "indent the JSON report");
  sub->add_flag("--timing", o.timing, "print wall time to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Symmetric tensor matroid toolkit"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check-ct", "C_t-independence of a graph");
  check->add_option("graph", o.graph_file, "graph file")->required();
  check->add_option("--t", o.t, "tensor order")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required();
  verify->add_option("--n", o.n);
  verify->add_option("--t", o.t);
  verify->add_option("--d", o.d);
  verify->add_option("--samples", o.samples, "sampled subsets (suite default if omitted)");

  auto* rank = app.add_subcommand("rank", "generic rank of a graph");
  rank->add_option("graph", o.graph_file, "graph file")->required();
  rank->add_option("--model", o.model, "S:<t> or R:<d>")->capture_default_str();

  auto* flats = app.add_subcommand("cyclic-flats", "check or build a lattice of cyclic flats");
  flats->add_option("--check", o.check_file, "family file: one '<rank> <edge indices>' per line");
  flats->add_option("--build", o.build, "mtn or remarkN");
  flats->add_option("--n", o.n);
  flats->add_option("--t", o.t);
  flats->add_option("--save-table", o.save_table);

  auto* elevate = app.add_subcommand("elevate", "free elevation");
  auto* erect = app.add_subcommand("erect", "one free erection");
  for (auto* sub : {elevate, erect}) {
    sub->add_flag("--uniform-star", o.uniform_star, "start from the uniform star matroid on K_n");
    sub->add_option("--n", o.n);
    sub->add_option("--t", o.t);
    sub->add_option("--load-table", o.load_table);
    sub->add_option("--save-table", o.save_table);
  }
  elevate->add_option("--cap", o.cap, "stop once this rank is reached");

  auto* valc = app.add_subcommand("val", "upper bound on val for a target graph");
  valc->add_option("--pattern", o.pattern, "star:<t>")->required();
  valc->add_option("--target", o.target, "target graph file")->required();
  valc->add_option("--from", o.from, "start graph for a weakly saturated sequence");
  valc->add_option("--budget", o.budget, "search extensions")->capture_default_str();

  for (auto* sub : {check, verify, rank, flats, elevate, erect, valc}) add_common(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Result res;
  SuiteParams p;
  try {
    p = params_of(o);
    if (*check) res = cmd_check_ct(o);
    else if (*verify) res = cmd_verify(o, p);
    else if (*rank) res = cmd_rank(o, p);
    else if (*flats) res = cmd_cyclic_flats(o);
    else if (*elevate) res = cmd_elevate(o);
    else if (*erect) res = cmd_erect(o);
    else res = cmd_val(o);
  } catch (const GenericityFailure& e) {
    Json j{{"command", command_echo(argc, argv)}, {"parameters", parameters_json(o, p)},
           {"error", "genericity failure"}, {"detail", e.what()}};
    std::cout << j.dump(o.pretty ? 2 : -1) << "\n";
    std::cerr << "genericity failure: " << e.what() << "\nrerun with a different --seed or a larger --prime\n";
    return kExitGenericity;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Json report;
  report["command"] = command_echo(argc, argv);
  report["parameters"] = parameters_json(o, p);
  report["result"] = res.payload;
  std::cout << report.dump(o.pretty ? 2 : -1) << "\n";
  std::cerr << res.summary << "\n";
  if (o.timing)
    std::cerr << "wall time " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " s\n";
  return res.code;
}
