// Command-line front end.  Subcommands:
//
//   gen         graph generators (families, fixtures, seeded random)
//   check       metric / structural property checks on a graph file
//   guard       one-cop guarding: exact solve or adversarial simulation
//   simulate    shorthand for `guard --mode simulate`
//   copnum      exact cop number by iterated game solving
//   verify-mgp  layered-construction verdicts (exact and scripted)
//
// Every command prints one JSON report to stdout.  Reports are byte-stable
// for fixed inputs and seeds; wall-clock timing is added only under
// --timing.  Exit codes: 0 ok (and --expect matched), 1 verdict mismatch,
// 2 usage or input error, 3 state budget exhausted.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cops/backbone.hpp"
#include "cops/characterize.hpp"
#include "cops/cop_game.hpp"
#include "cops/distance.hpp"
#include "cops/families.hpp"
#include "cops/graph.hpp"
#include "cops/guard.hpp"
#include "cops/guard_game.hpp"
#include "cops/io.hpp"
#include "cops/mgp_strategy.hpp"
#include "cops/random_families.hpp"
#include "cops/structure.hpp"
#include "cops/subgraph.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cops;

constexpr const char* kSchema = "cops-report/1";
constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

// Flags shared by all subcommands.
struct Common {
  bool timing = false;
  std::string expect;  // empty = no expectation
  Clock::time_point start = Clock::now();
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--timing", c.timing,
                "add wall-clock elapsed_ms to the report");
  cmd->add_option("--expect", c.expect,
                  "expected verdict; exit 1 when the report disagrees");
}

// Prints the report and resolves the exit code against --expect.
int finish(ordered_json& report, const Common& c, const std::string& verdict) {
  if (c.timing) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  Clock::now() - c.start)
                  .count();
    report["elapsed_ms"] = static_cast<double>(us) / 1000.0;
  }
  std::cout << report.dump(2) << '\n';
  if (!c.expect.empty() && c.expect != verdict) {
    std::cerr << "expected verdict '" << c.expect << "', got '" << verdict
              << "'\n";
    return kExitMismatch;
  }
  return kExitOk;
}

ordered_json new_report(const char* command) {
  ordered_json rep;
  rep["schema"] = kSchema;
  rep["version"] = kVersion;
  rep["command"] = command;
  return rep;
}

std::vector<long long> parse_int_list(const std::string& text,
                                      const char* flag, size_t min_count,
                                      size_t max_count) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item +
                       "' is not an integer");
    }
  }
  if (out.size() < min_count || out.size() > max_count)
    throw UsageError(std::string(flag) + ": expected between " +
                     std::to_string(min_count) + " and " +
                     std::to_string(max_count) + " comma-separated values");
  return out;
}

std::vector<Vertex> parse_vertex_list(const std::string& text,
                                      const char* flag) {
  auto raw = parse_int_list(text, flag, 1, 100000);
  std::vector<Vertex> out;
  out.reserve(raw.size());
  for (long long v : raw) {
    if (v < 0 || v > std::numeric_limits<Vertex>::max())
      throw UsageError(std::string(flag) + ": vertex id " + std::to_string(v) +
                       " out of range");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  try {
    return read_graph(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

// Graph input for commands that accept either a file or a named fixture.
// figure1 carries its guarded subgraph; petersen carries none.
struct GraphInput {
  Graph g;
  std::string source;
  std::vector<Vertex> default_subgraph;
};

GraphInput resolve_input(const std::string& path, const std::string& fixture) {
  if (path.empty() == fixture.empty())
    throw UsageError("give exactly one of: graph file, --fixture");
  GraphInput in;
  if (!path.empty()) {
    in.g = load_graph(path);
    in.source = path;
    return in;
  }
  if (fixture == "figure1") {
    Figure1 fig = figure1_instance();
    in.g = std::move(fig.g);
    in.default_subgraph = std::move(fig.h_vertices);
  } else if (fixture == "petersen") {
    in.g = gen_gp(5, 2).graph;
  } else {
    throw UsageError("--fixture: unknown fixture '" + fixture +
                     "' (known: figure1, petersen)");
  }
  in.source = "fixture:" + fixture;
  return in;
}

ordered_json violation_json(const Violation& v) {
  ordered_json w;
  w["vertices"] = v.vertices;
  w["detail"] = v.detail;
  return w;
}

// ---------------------------------------------------------------- gen ----

struct GenOpts {
  Common common;
  std::string path_n, cycle_n, complete_n;
  std::string gp, mgp, fixture, blowup;
  std::string random_block, random_vertebrate, random_connected, random_host;
  std::string base_file;
  std::string output, coords;
};

int run_gen(const GenOpts& o) {
  int sources = 0;
  for (const std::string* s :
       {&o.path_n, &o.cycle_n, &o.complete_n, &o.gp, &o.mgp, &o.fixture,
        &o.blowup, &o.random_block, &o.random_vertebrate, &o.random_connected,
        &o.random_host})
    sources += s->empty() ? 0 : 1;
  if (sources != 1)
    throw UsageError("gen: give exactly one generator "
                     "(--path, --cycle, --complete, --gp, --mgp, --fixture, "
                     "--blow-up, --random-block, --random-vertebrate, "
                     "--random-connected, --random-host)");

  Graph g;
  std::string generator;
  std::vector<LayerCoord> coords;
  std::vector<Vertex> subgraph;  // emitted as a comment when nonempty

  auto single = [](const std::string& text, const char* flag) {
    return parse_int_list(text, flag, 1, 1)[0];
  };
  if (!o.path_n.empty()) {
    g = path_graph(static_cast<int>(single(o.path_n, "--path")));
    generator = "path(" + o.path_n + ")";
  } else if (!o.cycle_n.empty()) {
    g = cycle_graph(static_cast<int>(single(o.cycle_n, "--cycle")));
    generator = "cycle(" + o.cycle_n + ")";
  } else if (!o.complete_n.empty()) {
    g = complete_graph(static_cast<int>(single(o.complete_n, "--complete")));
    generator = "complete(" + o.complete_n + ")";
  } else if (!o.gp.empty() || !o.mgp.empty()) {
    MgpInstance inst;
    if (!o.gp.empty()) {
      auto v = parse_int_list(o.gp, "--gp", 2, 2);
      inst = gen_gp(static_cast<int>(v[0]), static_cast<int>(v[1]));
      generator = "gp(" + o.gp + ")";
    } else {
      auto v = parse_int_list(o.mgp, "--mgp", 3, 3);
      inst = gen_mgp(static_cast<int>(v[0]), static_cast<int>(v[1]),
                     static_cast<int>(v[2]));
      generator = "mgp(" + o.mgp + ")";
    }
    coords = inst.labeling.coords();
    g = std::move(inst.graph);
  } else if (!o.fixture.empty()) {
    GraphInput in = resolve_input("", o.fixture);
    g = std::move(in.g);
    subgraph = std::move(in.default_subgraph);
    generator = in.source;
    if (o.fixture == "petersen") coords = MgpLabeling{5, 2, 1}.coords();
  } else if (!o.blowup.empty()) {
    if (o.base_file.empty())
      throw UsageError("--blow-up requires --base FILE (the block graph)");
    BlowupSpec spec;
    spec.base = load_graph(o.base_file);
    std::stringstream ss(o.blowup);
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t colon = item.find(':');
      if (colon == std::string::npos)
        throw UsageError("--blow-up: expected vertex:size, got '" + item +
                         "'");
      auto cut = parse_int_list(item.substr(0, colon), "--blow-up", 1, 1)[0];
      auto size = parse_int_list(item.substr(colon + 1), "--blow-up", 1, 1)[0];
      spec.sizes[static_cast<Vertex>(cut)] = static_cast<int>(size);
    }
    g = blow_up(spec).graph;
    generator = "blow-up(" + o.blowup + " of " + o.base_file + ")";
  } else if (!o.random_block.empty()) {
    auto v = parse_int_list(o.random_block, "--random-block", 3, 3);
    g = random_block_graph(static_cast<uint64_t>(v[0]), static_cast<int>(v[1]),
                           static_cast<int>(v[2]));
    generator = "random-block(" + o.random_block + ")";
  } else if (!o.random_vertebrate.empty()) {
    auto v = parse_int_list(o.random_vertebrate, "--random-vertebrate", 1, 5);
    RandomVertebrateParams params;
    if (v.size() > 1) params.base_budget = static_cast<int>(v[1]);
    if (v.size() > 2) params.max_clique = static_cast<int>(v[2]);
    if (v.size() > 3) params.max_blow = static_cast<int>(v[3]);
    if (v.size() > 4) params.extra_vertices = static_cast<int>(v[4]);
    RandomVertebrate rv =
        random_vertebrate_graph(static_cast<uint64_t>(v[0]), params);
    g = std::move(rv.graph);
    subgraph = std::move(rv.backbone);
    generator = "random-vertebrate(" + o.random_vertebrate + ")";
  } else if (!o.random_connected.empty()) {
    auto v = parse_int_list(o.random_connected, "--random-connected", 2, 4);
    uint64_t num = v.size() > 2 ? static_cast<uint64_t>(v[2]) : 1;
    uint64_t den = v.size() > 3 ? static_cast<uint64_t>(v[3]) : 3;
    g = random_connected_graph(static_cast<uint64_t>(v[0]),
                               static_cast<int>(v[1]), num, den);
    generator = "random-connected(" + o.random_connected + ")";
  } else {
    if (o.base_file.empty())
      throw UsageError("--random-host requires --base FILE (the subgraph)");
    auto v = parse_int_list(o.random_host, "--random-host", 2, 2);
    Graph h = load_graph(o.base_file);
    g = random_host(static_cast<uint64_t>(v[0]), h, static_cast<int>(v[1]));
    for (Vertex u = 0; u < h.n(); ++u) subgraph.push_back(u);
    generator = "random-host(" + o.random_host + " around " + o.base_file +
                ")";
  }

  std::ostringstream text;
  if (!subgraph.empty()) {
    text << "# subgraph";
    for (Vertex v : subgraph) text << ' ' << v;
    text << '\n';
  }
  write_graph(text, g);

  if (!o.coords.empty()) {
    if (coords.empty())
      throw UsageError("--coords: this generator has no layer coordinates");
    std::ofstream out(o.coords);
    if (!out) throw UsageError("cannot write coords file '" + o.coords + "'");
    write_layer_coords(out, coords);
  }

  if (o.output.empty()) {
    std::cout << text.str();
    return kExitOk;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write output file '" + o.output + "'");
  out << text.str();

  ordered_json rep = new_report("gen");
  rep["generator"] = generator;
  rep["vertices"] = g.n();
  rep["edges"] = g.m();
  rep["output"] = o.output;
  if (!o.coords.empty()) rep["coords"] = o.coords;
  if (!subgraph.empty()) rep["subgraph"] = subgraph;
  return finish(rep, o.common, std::to_string(g.n()));
}

// -------------------------------------------------------------- check ----

struct CheckOpts {
  Common common;
  std::string file, fixture, property, subgraph;
};

int run_check(const CheckOpts& o) {
  GraphInput in = resolve_input(o.file, o.fixture);
  const Graph& g = in.g;
  std::vector<Vertex> sub = in.default_subgraph;
  if (!o.subgraph.empty()) sub = parse_vertex_list(o.subgraph, "--subgraph");

  ordered_json rep = new_report("check");
  rep["input"] = in.source;
  rep["property"] = o.property;

  bool holds = false;
  ordered_json witness = nullptr;
  ordered_json certificate = nullptr;

  if (o.property == "p1" || o.property == "p2") {
    DistanceMatrix d = all_pairs_distances(g);
    auto viol = o.property == "p1" ? check_p1(g, d) : check_p2(g, d);
    holds = !viol.has_value();
    if (viol) witness = violation_json(*viol);
  } else if (o.property == "p3" || o.property == "backbone") {
    DistanceMatrix d = all_pairs_distances(g);
    if (!sub.empty()) {
      BackboneCheck chk = verify_backbone(g, d, sub);
      holds = chk.ok;
      if (chk.violation) witness = violation_json(*chk.violation);
      if (chk.certificate) {
        certificate = ordered_json{{"backbone", chk.certificate->backbone},
                                   {"guard_set", chk.certificate->guard_set},
                                   {"stage", "declared"}};
      }
      rep["status"] = holds ? "found" : "none";
    } else {
      BackboneSearch search = find_backbone(g, d);
      holds = search.status == BackboneStatus::Found;
      rep["status"] = search.status == BackboneStatus::Found ? "found"
                      : search.status == BackboneStatus::None ? "none"
                                                              : "unknown";
      if (search.certificate) {
        certificate =
            ordered_json{{"backbone", search.certificate->backbone},
                         {"guard_set", search.certificate->guard_set},
                         {"stage", search.stage}};
      }
    }
  } else if (o.property == "block-graph") {
    auto viol = is_block_graph(g);
    holds = !viol.has_value();
    if (viol) witness = violation_json(*viol);
  } else if (o.property == "extended-block-graph") {
    ExtendedBlockResult res = is_extended_block_graph(g);
    holds = res.holds;
    if (res.violation) witness = violation_json(*res.violation);
    if (res.holds)
      certificate = ordered_json{{"joint_blocks", res.joints.joint_blocks},
                                 {"joints", res.joints.joints}};
  } else if (o.property == "dismantlable") {
    // With a subgraph the check applies to the induced subgraph; its
    // certificate is in induced-graph ids (positions within --subgraph).
    DismantleResult res = sub.empty()
                              ? is_dismantlable(g)
                              : is_dismantlable(
                                    SubgraphView(g, sub).induced_graph());
    holds = res.dismantlable;
    certificate = ordered_json{{"order", res.order}};
  } else if (o.property == "isometric") {
    if (sub.empty())
      throw UsageError("check --property isometric requires --subgraph");
    DistanceMatrix d = all_pairs_distances(g);
    IsometryReport r = is_isometric(g, d, SubgraphView(g, sub));
    holds = r.isometric;
    if (!r.isometric)
      witness = ordered_json{{"vertices", {r.u, r.v}},
                             {"distance_in_subgraph", r.dist_sub},
                             {"distance_in_host", r.dist_parent}};
  } else {
    throw UsageError(
        "--property: unknown property '" + o.property +
        "' (known: p1, p2, p3, block-graph, extended-block-graph, backbone, "
        "dismantlable, isometric)");
  }

  rep["holds"] = holds;
  rep["witness"] = witness;
  rep["certificate"] = certificate;
  return finish(rep, o.common, holds ? "true" : "false");
}

// -------------------------------------------------------------- guard ----

struct GuardOpts {
  Common common;
  std::string file, fixture, subgraph, mode = "solve", forcing = "helper";
  std::string trace_file;
  int max_rounds = 0;  // 0 = |V|^2
  int cop_start = -1;
};

ordered_json trace_json(const GuardTrace& trace) {
  ordered_json steps = ordered_json::array();
  for (const GuardStep& s : trace.steps) {
    ordered_json step;
    step["round"] = s.round;
    step["robber"] = s.robber;
    step["cop"] = s.cop;
    step["case"] = to_string(s.tag);
    step["f"] = s.f;
    if (s.helper != kNoVertex) step["helper"] = s.helper;
    steps.push_back(std::move(step));
  }
  return steps;
}

int run_guard(const GuardOpts& o) {
  GraphInput in = resolve_input(o.file, o.fixture);
  const Graph& g = in.g;
  std::vector<Vertex> sub = in.default_subgraph;
  if (!o.subgraph.empty()) sub = parse_vertex_list(o.subgraph, "--subgraph");
  if (sub.empty())
    throw UsageError("guard: --subgraph required (this input has no default)");
  if (o.mode != "solve" && o.mode != "simulate")
    throw UsageError("--mode: expected solve or simulate");
  if (o.forcing != "helper" && o.forcing != "restless")
    throw UsageError("--forcing: expected helper or restless");

  ordered_json rep = new_report("guard");
  rep["input"] = in.source;
  rep["subgraph"] = sub;
  rep["mode"] = o.mode;

  if (o.mode == "solve") {
    GuardGameResult res = solve_guard_game(g, sub, sub);
    bool cop = res.winner() == GuardWinner::Cop;
    rep["winner"] = cop ? "cop" : "robber";
    if (res.cop_start())
      rep["cop_start"] = *res.cop_start();
    else
      rep["cop_start"] = nullptr;
    return finish(rep, o.common, cop ? "cop" : "robber");
  }

  GuardArena arena(g, sub, sub);
  Forcing forcing =
      o.forcing == "helper" ? Forcing::HelperCop : Forcing::Restless;
  std::optional<Vertex> c0;
  if (o.cop_start >= 0) c0 = o.cop_start;

  GuardAudit audit;
  GuardTrace trace{};
  try {
    audit = audit_guard(arena, forcing, c0);

    // Replay the audit's longest adversarial line; once it ends (or when
    // every placement was already safe and there is no line) the robber
    // stays put, or walks to its first neighbor where staying is illegal.
    Vertex cop0 = c0.value_or(arena.region().front());
    Vertex r0 = audit.worst_start;
    if (r0 == kNoVertex) {
      const DistanceMatrix& d = arena.dist();
      r0 = cop0 == 0 ? 1 : 0;
      for (Vertex v = 0; v < g.n(); ++v)
        if (v != cop0 && d(cop0, v) > d(cop0, r0)) r0 = v;
    }
    RobberPolicy robber = [moves = audit.worst_moves,
                           restless = forcing == Forcing::Restless](
                              const GuardArena& a, Vertex, Vertex r, Vertex,
                              int round) {
      size_t i = static_cast<size_t>(round - 1);
      if (i < moves.size()) return moves[i];
      return restless ? a.g().neighbors(r).front() : r;
    };
    int max_rounds = o.max_rounds > 0 ? o.max_rounds : g.n() * g.n();
    trace = simulate_guard(arena, robber, forcing, max_rounds, r0, cop0);
  } catch (const std::runtime_error& e) {
    // The move rule found no admissible step from some reachable state:
    // this region cannot guard the subgraph, and the failing state is the
    // evidence. Reported as a verdict, not an input error.
    rep["forcing"] = o.forcing;
    rep["outcome"] = "strategy-breakdown";
    rep["winner"] = "robber";
    rep["defect"] = e.what();
    return finish(rep, o.common, "robber");
  }

  bool cop_ok = trace.outcome == GuardOutcome::Guarded ||
                trace.outcome == GuardOutcome::Captured;
  rep["forcing"] = o.forcing;
  rep["cop_start"] = trace.cop_start;
  rep["robber_start"] = trace.robber_start;
  if (trace.helper_start != kNoVertex) rep["helper_start"] = trace.helper_start;
  rep["outcome"] = to_string(trace.outcome);
  rep["winner"] = cop_ok ? "cop" : "robber";
  rep["rounds"] = trace.steps.size();
  rep["audit"] = ordered_json{{"escaped", audit.escaped},
                              {"monotone", audit.monotone},
                              {"post_safe", audit.post_safe},
                              {"longest_rounds", audit.max_rounds}};
  if (o.trace_file.empty()) {
    rep["trace"] = trace_json(trace);
  } else {
    std::ofstream out(o.trace_file);
    if (!out)
      throw UsageError("cannot write trace file '" + o.trace_file + "'");
    out << trace_json(trace).dump(2) << '\n';
    rep["trace_file"] = o.trace_file;
  }
  return finish(rep, o.common, cop_ok ? "cop" : "robber");
}

// ------------------------------------------------------------- copnum ----

struct CopnumOpts {
  Common common;
  std::string file, fixture, trace_file;
  int max_cops = 3;
  uint64_t budget = 50'000'000;
};

ordered_json mgp_trace_json(const std::vector<MgpTraceStep>& trace) {
  ordered_json steps = ordered_json::array();
  for (const MgpTraceStep& s : trace)
    steps.push_back(ordered_json{{"cops", s.cops}, {"robber", s.robber}});
  return steps;
}

int run_copnum(const CopnumOpts& o) {
  if (o.max_cops < 1) throw UsageError("--max-cops must be >= 1");
  GraphInput in = resolve_input(o.file, o.fixture);

  ordered_json rep = new_report("copnum");
  rep["input"] = in.source;
  rep["max_cops"] = o.max_cops;
  rep["budget"] = o.budget;

  ordered_json levels = ordered_json::array();
  std::optional<int> verdict;
  for (int k = 1; k <= o.max_cops; ++k) {
    GameTable table = solve_k_cops(in.g, k, o.budget);
    levels.push_back(ordered_json{{"cops", k},
                                  {"cop_wins", table.cop_player_wins()},
                                  {"states", table.state_count()}});
    if (table.cop_player_wins()) {
      verdict = k;
      if (!o.trace_file.empty()) {
        std::ofstream out(o.trace_file);
        if (!out)
          throw UsageError("cannot write trace file '" + o.trace_file + "'");
        out << mgp_trace_json(capture_trace(in.g, table)).dump(2) << '\n';
        rep["trace_file"] = o.trace_file;
      }
      break;
    }
  }
  rep["levels"] = levels;
  if (verdict)
    rep["verdict"] = *verdict;
  else
    rep["verdict"] = nullptr;
  return finish(rep, o.common,
                verdict ? std::to_string(*verdict) : "none");
}

// --------------------------------------------------------- verify-mgp ----

struct VerifyMgpOpts {
  Common common;
  int n = 0, k = 0, t = 0;
  std::string method = "both";
  std::string trace_file;
  uint64_t budget = 50'000'000;
};

int run_verify_mgp(const VerifyMgpOpts& o) {
  MgpMethod method;
  if (o.method == "exact")
    method = MgpMethod::Exact;
  else if (o.method == "scripted")
    method = MgpMethod::Scripted;
  else if (o.method == "both")
    method = MgpMethod::Both;
  else
    throw UsageError("--method: expected exact, scripted, or both");

  MgpVerifyReport r = verify_mgp_theorem(o.n, o.k, o.t, method, o.budget);

  ordered_json rep = new_report("verify-mgp");
  rep["n"] = o.n;
  rep["k"] = o.k;
  rep["t"] = o.t;
  rep["method"] = o.method;

  ordered_json gs;
  gs["vertices"] = r.guard_set.vertices;
  gs["block_graph"] = r.guard_set.block_graph;
  gs["isometric"] = r.guard_set.isometric;
  gs["violation"] =
      r.guard_set.violation.empty() ? ordered_json(nullptr)
                                    : ordered_json(r.guard_set.violation);
  rep["guard_set"] = gs;

  if (r.exact_ran) {
    ordered_json ex;
    ex["robber_wins_two_cops"] = r.robber_wins_k2;
    ex["cop_wins_three_cops"] = r.cop_wins_k3;
    ex["cop_number"] = r.exact_cop_number ? ordered_json(*r.exact_cop_number)
                                          : ordered_json(nullptr);
    ex["states_two_cops"] = r.exact_states_k2;
    ex["states_three_cops"] = r.exact_states_k3;
    rep["exact"] = ex;
  } else {
    rep["exact"] = nullptr;
  }

  if (r.scripted_ran) {
    ordered_json sc;
    sc["certified"] = r.scripted_certified;
    sc["states"] = r.scripted_states;
    sc["capture_rounds"] = r.scripted_capture_rounds >= 0
                               ? ordered_json(r.scripted_capture_rounds)
                               : ordered_json(nullptr);
    sc["failure"] = r.scripted_failure.empty()
                        ? ordered_json(nullptr)
                        : ordered_json(r.scripted_failure);
    rep["scripted"] = sc;
  } else {
    rep["scripted"] = nullptr;
  }

  rep["falsification"] = r.falsification;
  if (!r.falsification_trace.empty()) {
    if (o.trace_file.empty()) {
      rep["falsification_trace"] = mgp_trace_json(r.falsification_trace);
    } else {
      std::ofstream out(o.trace_file);
      if (!out)
        throw UsageError("cannot write trace file '" + o.trace_file + "'");
      out << mgp_trace_json(r.falsification_trace).dump(2) << '\n';
      rep["trace_file"] = o.trace_file;
    }
  }
  rep["summary"] = r.summary;

  std::string verdict;
  if (r.exact_ran)
    verdict = r.exact_cop_number ? std::to_string(*r.exact_cop_number)
                                 : "above-3";
  else
    verdict = r.scripted_certified ? "certified" : "not-certified";
  return finish(rep, o.common, verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pursuit games, guardable subgraphs, and layered graph "
               "families"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GenOpts gen;
  CLI::App* cgen = app.add_subcommand("gen", "generate a graph file");
  cgen->add_option("--path", gen.path_n, "path on N vertices");
  cgen->add_option("--cycle", gen.cycle_n, "cycle on N vertices");
  cgen->add_option("--complete", gen.complete_n, "complete graph on N");
  cgen->add_option("--gp", gen.gp, "n,k outer/skip cycles construction");
  cgen->add_option("--mgp", gen.mgp, "n,k,t layered construction");
  cgen->add_option("--fixture", gen.fixture, "figure1 or petersen");
  cgen->add_option("--blow-up", gen.blowup,
                   "cut:size,... clique expansion (with --base)");
  cgen->add_option("--random-block", gen.random_block,
                   "seed,budget,max_clique");
  cgen->add_option("--random-vertebrate", gen.random_vertebrate,
                   "seed[,base,max_clique,max_blow,extra]");
  cgen->add_option("--random-connected", gen.random_connected,
                   "seed,n[,num,den edge probability]");
  cgen->add_option("--random-host", gen.random_host,
                   "seed,extra anchored around --base");
  cgen->add_option("--base", gen.base_file,
                   "base graph file for --blow-up / --random-host");
  cgen->add_option("-o,--output", gen.output, "write the graph here");
  cgen->add_option("--coords", gen.coords, "layer coordinate side file");
  add_common(cgen, gen.common);

  CheckOpts check;
  CLI::App* ccheck = app.add_subcommand("check", "check a graph property");
  ccheck->add_option("file", check.file, "graph file");
  ccheck->add_option("--fixture", check.fixture, "figure1 or petersen");
  ccheck->add_option("--property", check.property,
                     "p1 | p2 | p3 | block-graph | extended-block-graph | "
                     "backbone | dismantlable | isometric")
      ->required();
  ccheck->add_option("--subgraph", check.subgraph,
                     "comma-separated vertex ids");
  add_common(ccheck, check.common);

  GuardOpts guard;
  CLI::App* cguard =
      app.add_subcommand("guard", "one-cop guarding of an isometric subgraph");
  GuardOpts sim;
  CLI::App* csim = app.add_subcommand(
      "simulate", "adversarial guard simulation (guard --mode simulate)");
  for (auto [cmd, opt] : {std::pair{cguard, &guard}, std::pair{csim, &sim}}) {
    cmd->add_option("file", opt->file, "graph file");
    cmd->add_option("--fixture", opt->fixture, "figure1 or petersen");
    cmd->add_option("--subgraph", opt->subgraph,
                    "comma-separated vertex ids of the guarded subgraph");
    if (opt == &guard)
      cmd->add_option("--mode", opt->mode, "solve | simulate");
    cmd->add_option("--forcing", opt->forcing, "helper | restless");
    cmd->add_option("--max-rounds", opt->max_rounds,
                    "simulation round budget (default |V|^2)");
    cmd->add_option("--cop-start", opt->cop_start, "initial cop vertex");
    cmd->add_option("--trace-file", opt->trace_file,
                    "write the simulation trace to a side file");
    add_common(cmd, opt->common);
  }
  sim.mode = "simulate";

  CopnumOpts copnum;
  CLI::App* ccop = app.add_subcommand("copnum", "exact cop number");
  ccop->add_option("file", copnum.file, "graph file");
  ccop->add_option("--fixture", copnum.fixture, "figure1 or petersen");
  ccop->add_option("--max-cops", copnum.max_cops, "largest team to try");
  ccop->add_option("--budget", copnum.budget, "state budget per solve");
  ccop->add_option("--trace-file", copnum.trace_file,
                   "write a capture replay for the winning team here");
  add_common(ccop, copnum.common);

  VerifyMgpOpts vm;
  CLI::App* cvm = app.add_subcommand(
      "verify-mgp", "three-cop verdicts for the layered construction");
  cvm->add_option("--n", vm.n, "column count")->required();
  cvm->add_option("--k", vm.k, "skip")->required();
  cvm->add_option("--t", vm.t, "extra layer count")->required();
  cvm->add_option("--method", vm.method, "exact | scripted | both");
  cvm->add_option("--budget", vm.budget, "state budget per exact solve");
  cvm->add_option("--trace-file", vm.trace_file,
                  "write any falsification trace to a side file");
  add_common(cvm, vm.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cgen->parsed()) return run_gen(gen);
    if (ccheck->parsed()) return run_check(check);
    if (cguard->parsed()) return run_guard(guard);
    if (csim->parsed()) return run_guard(sim);
    if (ccop->parsed()) return run_copnum(copnum);
    if (cvm->parsed()) return run_verify_mgp(vm);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
