// forcelab: zero forcing laboratory command line.
//
// Exit codes: 0 success, 1 stall or failed verification, 2 usage or parse
// error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "forcelab/constructions.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/forts.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/graph_io.hpp"
#include "forcelab/solver.hpp"
#include "forcelab/verify.hpp"

namespace {

using namespace forcelab;
using nlohmann::json;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCap = 3 };

struct Global {
  std::string format;
  int threads = 1;
  std::uint64_t seed = 1;
};

int env_threads() {
  const char* text = std::getenv("FORCELAB_THREADS");
  if (text == nullptr) return 1;
  int value = 0;
  const std::string_view s(text);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1) {
    throw ParseError("FORCELAB_THREADS must be a positive integer, got '" + std::string(s) + "'");
  }
  return value;
}

bool json_out(const Global& g, bool json_default) {
  return g.format.empty() ? json_default : g.format == "json";
}

std::string set_text(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ", ";
    first = false;
    out += g.has_labels() ? g.label(v).to_string() : std::to_string(v);
  });
  return out + "}";
}

json fort_list(const std::vector<Fort>& forts) {
  json out = json::array();
  for (const auto& f : forts) out.push_back(io::to_json(f.vertices));
  return out;
}

// "0,3,5" or "p1,p2"; tokens may also be repeated flags.
VertexSet parse_blue(const Graph& g, const std::vector<std::string>& items) {
  VertexSet blue = g.empty_set();
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      unsigned long long id = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
      if (ec == std::errc{} && ptr == token.data() + token.size()) {
        if (id >= g.order()) {
          throw ParseError("vertex " + token + " out of range 0.." + std::to_string(g.order() - 1));
        }
        blue.insert(static_cast<Vertex>(id));
        continue;
      }
      std::optional<Vertex> found;
      try {
        found = g.find(VertexLabel::parse(token));
      } catch (const Error&) {
      }
      if (!found) throw ParseError("unknown vertex '" + token + "'");
      blue.insert(*found);
    }
  }
  return blue;
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<int> params;
  std::string out;
  std::string labels_out;
};

Graph generate(const GenArgs& a) {
  auto need = [&](std::size_t k, const char* usage) {
    if (a.params.size() != k) {
      throw ParameterError(a.family + " takes " + std::to_string(k) + " parameter(s): " + usage);
    }
  };
  if (a.family == "peony") {
    need(3, "m r s");
    return make_peony({a.params[0], a.params[1], a.params[2]});
  }
  if (a.family == "web") {
    need(2, "m r");
    return make_web({a.params[0], a.params[1]});
  }
  if (a.family == "prism") {
    need(2, "m r");
    return make_cycle_path_product(a.params[0], a.params[1]);
  }
  if (a.family == "path") {
    need(1, "n");
    return make_path(a.params[0]);
  }
  need(1, "n");
  return make_cycle(a.params[0]);
}

int cmd_gen(const Global& global, const GenArgs& a) {
  const Graph g = generate(a);
  std::string body;
  if (json_out(global, false)) {
    body = io::to_json(g).dump(2) + "\n";
  } else {
    body = io::to_edge_list(g);
  }
  if (a.out.empty() || a.out == "-") {
    std::cout << body;
  } else {
    std::ofstream file(a.out);
    if (!file) throw ParseError("cannot write '" + a.out + "'");
    file << body;
  }
  if (json_out(global, false)) return kOk;
  std::string sidecar = a.labels_out;
  if (sidecar.empty() && !a.out.empty() && a.out != "-") sidecar = io::sidecar_path(a.out).string();
  if (sidecar.empty()) return kOk;
  if (!g.has_labels()) {
    // A leftover sidecar would be picked up when the file is read back.
    if (a.labels_out.empty()) std::filesystem::remove(sidecar);
    return kOk;
  }
  std::ofstream file(sidecar);
  if (!file) throw ParseError("cannot write '" + sidecar + "'");
  file << io::labels_json(g).dump() << "\n";
  return kOk;
}

// --- closure -----------------------------------------------------------

struct ClosureArgs {
  std::string graph;
  std::string labels;
  std::vector<std::string> blue;
  std::string policy = "eager";
  bool trace = false;
};

int cmd_closure(const Global& global, const ClosureArgs& a) {
  const Graph g = io::load_graph(a.graph, a.labels);
  const VertexSet blue = parse_blue(g, a.blue);
  const ForcePolicy policy = a.policy == "eager"     ? ForcePolicy::AllEager
                             : a.policy == "max"     ? ForcePolicy::MaxConcurrent
                                                     : ForcePolicy::Sequential;
  const Chronology c = run_chronology(g, blue, policy);
  const VertexSet final_blue = c.final_blue();
  const bool complete = final_blue.count() == g.order();
  std::optional<Fort> fort;
  if (!complete) fort = extract_fort_from_failure(g, blue);

  if (a.trace) {
    json steps = json::array();
    for (const auto& step : c.steps) {
      json forces = json::array();
      for (const auto& f : step) forces.push_back({{"from", f.from}, {"to", f.to}});
      steps.push_back(forces);
    }
    std::cout << json{{"initial", io::to_json(c.initial)}, {"steps", steps}}.dump() << "\n";
    if (fort) std::cerr << "stalled; fort certificate " << set_text(g, fort->vertices) << "\n";
  } else if (json_out(global, false)) {
    json doc{{"graph", g.name()},
             {"initial", io::to_json(blue)},
             {"final_blue", io::to_json(final_blue)},
             {"complete", complete},
             {"steps", c.steps.size()},
             {"policy", a.policy}};
    doc["fort"] = fort ? io::to_json(fort->vertices) : json(nullptr);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "graph:   " << g.name() << "\n"
              << "initial: " << set_text(g, blue) << "\n"
              << "blue:    " << set_text(g, final_blue) << "\n"
              << "steps:   " << c.steps.size() << "\n"
              << "status:  " << (complete ? "forcing" : "stalled") << "\n";
    if (fort) std::cout << "fort:    " << set_text(g, fort->vertices) << "\n";
  }
  return complete ? kOk : kNegative;
}

// --- solve -------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  std::string labels;
  std::string algorithm = "fortbb";
  std::size_t cap = kDefaultExhaustiveCap;
  std::uint64_t time_limit_ms = 0;
};

int cmd_solve(const Global& global, const SolveArgs& a) {
  const Graph g = io::load_graph(a.graph, a.labels);
  SolveOptions opts;
  opts.cap = a.cap;
  opts.threads = global.threads;
  if (a.time_limit_ms > 0) opts.time_limit = std::chrono::milliseconds(a.time_limit_ms);
  const Algorithm alg = a.algorithm == "exhaustive" ? Algorithm::Exhaustive : Algorithm::FortBB;
  const SolveReport r = solve(g, alg, opts);

  if (json_out(global, true)) {
    json doc{{"graph", g.name()},
             {"z", r.z},
             {"witness", io::to_json(r.witness)},
             {"algorithm", to_string(r.algorithm)},
             {"lower_bound_forts", fort_list(r.lower_bound_forts)},
             {"stats",
              {{"nodes", r.stats.nodes},
               {"closures", r.stats.closures},
               {"wall_ms", r.stats.wall_ms},
               {"threads", global.threads}}},
             {"complete", r.complete},
             {"lower_bound", r.lower_bound},
             {"upper_bound", r.upper_bound}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "graph:     " << g.name() << " (n=" << g.order() << ", e=" << g.size() << ")\n"
              << "z:         " << r.z << (r.complete ? "" : " (upper bound, interrupted)") << "\n"
              << "witness:   " << set_text(g, r.witness) << "\n"
              << "algorithm: " << to_string(r.algorithm) << "\n"
              << "bounds:    " << r.lower_bound << ".." << r.upper_bound << "\n"
              << "forts:     " << r.lower_bound_forts.size() << "\n"
              << "nodes:     " << r.stats.nodes << "\n"
              << "closures:  " << r.stats.closures << "\n"
              << "wall_ms:   " << r.stats.wall_ms << "\n";
  }
  return kOk;
}

// --- verify ------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string m;
  std::string r;
  std::string s;
};

int cmd_verify(const Global& global, const VerifyArgs& a) {
  verify::Options opts;
  opts.threads = global.threads;
  opts.seed = global.seed;
  auto range = [](const std::string& text, const char* fallback) {
    return verify::Range::parse(text.empty() ? fallback : text);
  };
  verify::Report report;
  if (a.suite == "peony") {
    report = verify::peony_suite(range(a.m, "3..4"), range(a.r, "2..3"), range(a.s, "1..2"), opts);
  } else if (a.suite == "web") {
    report = verify::web_suite(range(a.m, "3..10"), range(a.r, "1..3"), opts);
  } else if (a.suite == "prism") {
    report = verify::prism_suite(range(a.m, "3..8"), range(a.r, "1..3"), opts);
  } else {
    report = verify::core_suite(opts);
  }
  if (json_out(global, false)) {
    json doc = report.to_json();
    doc["suite"] = a.suite;
    doc["seed"] = global.seed;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << report.to_text();
    std::cout << "seed " << global.seed << "\n";
  }
  return report.all_pass() ? kOk : kNegative;
}

// --- forts -------------------------------------------------------------

struct FortsArgs {
  std::string graph;
  std::string labels;
  std::size_t max_size = 0;
  bool minimal = false;
  std::size_t cap = kDefaultFortEnumerationCap;
};

int cmd_forts(const Global& global, const FortsArgs& a) {
  const Graph g = io::load_graph(a.graph, a.labels);
  const std::size_t max_size = a.max_size == 0 ? g.order() : a.max_size;
  const auto forts = a.minimal ? enumerate_minimal_forts(g, max_size, a.cap, global.threads)
                               : enumerate_forts(g, max_size, a.cap, global.threads);
  const char* key = a.minimal ? "minimal_forts" : "forts";
  if (json_out(global, true)) {
    std::cout << json{{"graph", g.name()}, {key, fort_list(forts)}, {"count", forts.size()}}.dump(2)
              << "\n";
  } else {
    std::cout << key << " of " << g.name() << ": " << forts.size() << "\n";
    for (const auto& f : forts) std::cout << "  " << set_text(g, f.vertices) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forcelab: zero forcing laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  Global global;
  try {
    global.threads = env_threads();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", global.threads, "Worker threads (default FORCELAB_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "Seed for randomised suites");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("family", gen.family)->required()->check(CLI::IsMember({"peony", "web", "prism", "path", "cycle"}));
  gen_cmd->add_option("params", gen.params, "Family parameters")->required();
  gen_cmd->add_option("-o,--out", gen.out, "Output path (default stdout)");
  gen_cmd->add_option("--labels-out", gen.labels_out, "Label sidecar path");

  ClosureArgs clo;
  auto* clo_cmd = app.add_subcommand("closure", "Run the forcing process from a blue set");
  clo_cmd->add_option("graph", clo.graph, "Graph file ('-' for stdin)")->required();
  clo_cmd->add_option("--blue", clo.blue, "Initial blue vertices (ids or labels, comma separated)")
      ->delimiter(',');
  clo_cmd->add_option("--policy", clo.policy)->check(CLI::IsMember({"eager", "max", "sequential"}));
  clo_cmd->add_flag("--trace", clo.trace, "Emit the chronology as JSON");
  clo_cmd->add_option("--labels", clo.labels, "Label sidecar path");

  SolveArgs sol;
  auto* sol_cmd = app.add_subcommand("solve", "Compute the zero forcing number");
  sol_cmd->add_option("graph", sol.graph, "Graph file ('-' for stdin)")->required();
  sol_cmd->add_option("--algorithm", sol.algorithm)->check(CLI::IsMember({"fortbb", "exhaustive"}));
  sol_cmd->add_option("--cap", sol.cap, "Vertex cap for the exhaustive search");
  sol_cmd->add_option("--time-limit", sol.time_limit_ms, "Milliseconds before fortbb reports bounds");
  sol_cmd->add_option("--labels", sol.labels, "Label sidecar path");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  ver_cmd->add_option("suite", ver.suite)->required()->check(CLI::IsMember({"peony", "web", "prism", "core"}));
  ver_cmd->add_option("--m", ver.m, "Range a..b");
  ver_cmd->add_option("--r", ver.r, "Range a..b");
  ver_cmd->add_option("--s", ver.s, "Range a..b");

  FortsArgs frt;
  auto* frt_cmd = app.add_subcommand("forts", "Enumerate forts");
  frt_cmd->add_option("graph", frt.graph, "Graph file ('-' for stdin)")->required();
  frt_cmd->add_option("--max-size", frt.max_size, "Largest fort size (default n)");
  frt_cmd->add_flag("--minimal", frt.minimal, "Only inclusion-minimal forts");
  frt_cmd->add_option("--cap", frt.cap, "Vertex cap");
  frt_cmd->add_option("--labels", frt.labels, "Label sidecar path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(global, gen);
    if (*clo_cmd) return cmd_closure(global, clo);
    if (*sol_cmd) return cmd_solve(global, sol);
    if (*ver_cmd) return cmd_verify(global, ver);
    if (*frt_cmd) return cmd_forts(global, frt);
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
