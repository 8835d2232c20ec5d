#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "forcelab/forcing.hpp"
#include "forcelab/graph_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("forcelab_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& env = {}) {
  const auto out = scratch() / "stdout";
  const auto err = scratch() / "stderr";
  const std::string cmd = env + " '" FORCELAB_CLI_PATH "' " + args + " > '" + out.string() +
                          "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string gen(const std::string& family, const std::string& file) {
  const auto path = (scratch() / file).string();
  const Run r = run("gen " + family + " -o '" + path + "'");
  REQUIRE(r.code == 0);
  return path;
}

}  // namespace

TEST_CASE("gen writes edge lists and sidecars") {
  const auto py = gen("peony 6 3 4", "py634.txt");
  const auto g = forcelab::io::load_graph(py);
  CHECK(g.order() == 79);
  CHECK(g.has_labels());
  CHECK(g.label(0).to_string() == "c");
  CHECK(fs::exists(py + ".labels.json"));

  CHECK(forcelab::io::load_graph(gen("web 5 3", "wb53.txt")).order() == 20);

  const Run p1 = run("gen path 1");
  CHECK(p1.code == 0);
  CHECK(p1.out.rfind("1 0\n", 0) == 0);
}

TEST_CASE("gen output round trips with invariants intact") {
  for (const std::string family : {"peony 3 2 2", "web 7 2", "prism 5 2", "cycle 6", "path 4"}) {
    CAPTURE(family);
    const auto g = forcelab::io::load_graph(gen(family, "rt.txt"));
    std::size_t total = 0;
    for (forcelab::Vertex v = 0; v < g.order(); ++v) total += forcelab::degree(g, v);
    CHECK(total == 2 * g.size());
    const Run j = run("gen " + family + " --format json");
    REQUIRE(j.code == 0);
    const auto doc = json::parse(j.out);
    CHECK(doc["n"] == g.order());
    CHECK(doc["edges"].size() == g.size());
    CHECK(forcelab::io::from_json(doc).edges() == g.edges());
  }
}

TEST_CASE("gen parameter errors exit 2") {
  const Run bad = run("gen peony 2 2 1");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("m >= 3") != std::string::npos);
  CHECK(run("gen web 3").code == 2);
  CHECK(run("gen star 3").code == 2);
}

TEST_CASE("closure") {
  const auto p5 = gen("path 5", "p5.txt");
  const Run ok = run("closure '" + p5 + "' --blue 0 --trace");
  CHECK(ok.code == 0);
  const auto trace = json::parse(ok.out);
  CHECK(trace.size() == 2);
  CHECK(trace["initial"] == json::array({0}));
  CHECK(trace["steps"].size() == 4);
  CHECK(trace["steps"][0][0] == json{{"from", 0}, {"to", 1}});

  const auto c5 = gen("cycle 5", "c5.txt");
  const Run stall = run("closure '" + c5 + "' --blue 0 --format json");
  CHECK(stall.code == 1);
  const auto doc = json::parse(stall.out);
  CHECK(doc["complete"] == false);
  CHECK(doc["fort"].size() == 4);

  const auto py = gen("peony 3 2 1", "py321.txt");
  const Run eq = run("closure '" + py + "' --blue v1_2_1,v2_2_1,v3_1_1,v3_2_1,c,u1");
  CHECK(eq.code == 0);
  CHECK(eq.out.find("forcing") != std::string::npos);

  CHECK(run("closure '" + p5 + "' --blue 9").code == 2);
  CHECK(run("closure '" + p5 + "' --blue q7").code == 2);
  CHECK(run("closure '" + p5 + "' --blue 0 --policy fastest").code == 2);
}

TEST_CASE("closure trace replays as a valid chronology") {
  const auto web = gen("web 9 3", "wb93.txt");
  const Run r = run("closure '" + web + "' --blue p1,p2,p3,p4,p5,p6 --policy max --trace");
  REQUIRE(r.code == 0);
  const auto trace = json::parse(r.out);
  const auto g = forcelab::io::load_graph(web);
  forcelab::Chronology c{forcelab::VertexSet(g.order()), {}};
  for (auto v : trace["initial"]) c.initial.insert(v.get<forcelab::Vertex>());
  for (const auto& step : trace["steps"]) {
    c.steps.emplace_back();
    for (const auto& f : step) c.steps.back().push_back({f["from"], f["to"]});
  }
  CHECK(forcelab::validate_chronology(g, c).valid);
  CHECK(c.final_blue().count() == g.order());
}

TEST_CASE("solve") {
  const Run w = run("solve '" + gen("web 3 1", "wb31.txt") + "'");
  REQUIRE(w.code == 0);
  const auto doc = json::parse(w.out);
  for (const char* key : {"graph", "z", "witness", "algorithm", "lower_bound_forts", "stats"})
    CHECK(doc.contains(key));
  CHECK(doc["z"] == 2);
  CHECK(doc["algorithm"] == "fortbb");
  CHECK(doc["witness"].size() == 2);

  const auto py = gen("peony 3 2 2", "py322.txt");
  CHECK(json::parse(run("solve '" + py + "' --algorithm exhaustive").out)["z"] == 6);
  const Run threaded = run("solve '" + py + "' --algorithm exhaustive --threads 3");
  CHECK(json::parse(threaded.out)["stats"]["threads"] == 3);
  const Run env = run("solve '" + py + "' --algorithm exhaustive", "FORCELAB_THREADS=2");
  CHECK(json::parse(env.out)["stats"]["threads"] == 2);
  CHECK(run("solve '" + py + "'", "FORCELAB_THREADS=zero").code == 2);

  const auto prism = gen("prism 4 2", "prism42.txt");
  CHECK(json::parse(run("solve '" + prism + "'").out)["z"] == 4);

  const auto big = gen("path 40", "p40.txt");
  CHECK(run("solve '" + big + "' --algorithm exhaustive").code == 3);
  CHECK(run("solve '" + big + "' --algorithm exhaustive --cap 40").code == 0);
  CHECK(run("solve '" + big + "' --algorithm magic").code == 2);
  CHECK(run("solve '" + (scratch() / "nope.txt").string() + "'").code == 2);
}

TEST_CASE("solve reads stdin") {
  const auto p5 = gen("path 5", "p5.txt");
  const Run r = run("solve - < '" + p5 + "'");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["z"] == 1);
}

TEST_CASE("forts") {
  const auto p2 = gen("path 2", "p2.txt");
  const auto doc = json::parse(run("forts '" + p2 + "' --minimal").out);
  CHECK(doc["count"] == 1);
  CHECK(doc["minimal_forts"] == json::array({json::array({0, 1})}));

  const auto c4 = gen("cycle 4", "c4.txt");
  const auto forts = json::parse(run("forts '" + c4 + "' --minimal").out)["minimal_forts"];
  CHECK(std::find(forts.begin(), forts.end(), json::array({0, 2})) != forts.end());
  CHECK(std::find(forts.begin(), forts.end(), json::array({1, 3})) != forts.end());

  const auto py = gen("peony 3 2 1", "py321.txt");
  const auto small = json::parse(run("forts '" + py + "' --minimal --max-size 2").out)["minimal_forts"];
  // S_{1,1} ∪ S_{1,2} = {v1_1_1, v1_2_1} = {4, 5}.
  CHECK(std::find(small.begin(), small.end(), json::array({4, 5})) != small.end());

  const auto all = json::parse(run("forts '" + c4 + "'").out);
  CHECK(all.contains("forts"));
  CHECK(all["count"].get<int>() > 2);

  CHECK(run("forts '" + gen("path 21", "p21.txt") + "'").code == 3);
}

TEST_CASE("verify") {
  const Run peony = run("verify peony --m 3..4 --r 2..3 --s 1..2 --format json");
  CHECK(peony.code == 0);
  const auto doc = json::parse(peony.out);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["failures"] == 0);
  CHECK(doc["seed"] == 1);

  const Run core = run("verify core --seed 7");
  CHECK(core.code == 0);
  CHECK(core.out.find("seed 7") != std::string::npos);

  const Run web = run("verify web --m 3..9 --r 1..3");
  CHECK(web.code == 0);
  CHECK(web.out.find("FAIL") == std::string::npos);

  CHECK(run("verify prism --m 3..5 --r 1..2").code == 0);
  CHECK(run("verify peony --m 3..x").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("solve").code == 2);
  CHECK(run("gen path 3 --frobnicate").code == 2);
  CHECK(run("gen path 3 --format yaml").code == 2);
  CHECK(run("--help").code == 0);
}
