#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "riccigap/generators.hpp"
#include "riccigap/graph_io.hpp"
#include "riccigap/parallel.hpp"
#include "riccigap/rational.hpp"
#include "test_util.hpp"

using namespace riccigap;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

/// Runs the CLI with stdout captured to a scratch file.
RunResult run_cli(const std::string& args) {
  const std::string out_file = std::string(CLI_SCRATCH_DIR) + "/cli_stdout.txt";
  const std::string command =
      std::string(RICCI_GAP_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

std::string scratch_path(const std::string& name) {
  return std::string(CLI_SCRATCH_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("thread count resolution: flag beats env beats hardware") {
  setenv("RICCI_GAP_THREADS", "3", 1);
  CHECK(resolve_thread_count(0) == 3);
  CHECK(resolve_thread_count(5) == 5);
  unsetenv("RICCI_GAP_THREADS");
  CHECK(resolve_thread_count(0) >= 1);
}

TEST_CASE("parse_rational accepts fractions, decimals, integers") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("0.001") == Rational(1, 1000));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational(" 5/10 ") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("graph json round trip and rejection") {
  const Graph g = make_prism(4);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[0,0]]}"), InputError);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[0,1],[1,0]]}"), InputError);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[0,5]]}"), InputError);
  CHECK_THROWS_AS(graph_from_json("{\"edges\": []}"), InputError);
  CHECK_THROWS_AS(graph_from_json("not json"), InputError);
}

TEST_CASE("edge list parsing: indices and names") {
  const Graph numeric = graph_from_edge_list("0 1\n1 2\n\n# comment\n2 3\n");
  CHECK(numeric.vertex_count() == 4);
  CHECK(numeric.edge_count() == 3);

  // names map in sorted order: alpha=0, beta=1, gamma=2
  const Graph named = graph_from_edge_list("beta alpha\ngamma beta\n");
  CHECK(named.vertex_count() == 3);
  CHECK(named.has_edge(0, 1));
  CHECK(named.has_edge(1, 2));
  CHECK_FALSE(named.has_edge(0, 2));

  CHECK_THROWS_AS(graph_from_edge_list("0 1 2\n"), InputError);
}

TEST_CASE("family manifest parsing") {
  const std::string path = scratch_path("families.json");
  write_file(path,
             "{\"families\": [{\"family\": \"cycle\", \"n\": 5},"
             " {\"family\": \"random_regular\", \"n\": 10, \"d\": 3, \"seed\": 4}]}");
  const auto specs = family_specs_from_json_file(path);
  REQUIRE(specs.size() == 2);
  CHECK(generate(specs[0]) == make_cycle(5));
  CHECK(generate(specs[1]) == make_random_regular(10, 3, 4));
}

TEST_CASE("cli: generate emits valid graph json") {
  const RunResult r = run_cli("generate --family prism --n 3");
  CHECK(r.exit_code == 0);
  CHECK(graph_from_json(r.output) == make_prism(3));
}

TEST_CASE("cli: curvature on K5") {
  write_file(scratch_path("k5.json"), graph_to_json(make_complete(5)));
  const RunResult r = run_cli("curvature --in " + scratch_path("k5.json"));
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "u,v,kappa_num,kappa_den");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.substr(line.size() - 4) == ",5,8");
    ++rows;
  }
  CHECK(rows == 10);
}

TEST_CASE("cli: spectrum count-above") {
  write_file(scratch_path("torus12.json"), graph_to_json(make_torus2d(12)));
  const RunResult r =
      run_cli("spectrum --in " + scratch_path("torus12.json") + " --count-above 0.9");
  CHECK(r.exit_code == 0);
  int count = 0;
  for (double lambda : testutil::torus_spectrum(12)) {
    if (lambda > 0.9) ++count;
  }
  CHECK(std::stoi(r.output) == count);
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli("curvature --in " + scratch_path("missing.json")).exit_code == 2);
  CHECK(run_cli("generate --family random_regular --n 10 --d 3").exit_code == 2);  // no seed
  CHECK(run_cli("generate --family nosuch --n 3").exit_code == 2);
  CHECK(run_cli("generate --family regular_tree_truncation --d 3 --depth 40").exit_code == 3);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  write_file(scratch_path("big.json"), graph_to_json(make_cycle(5001)));
  CHECK(run_cli("spectrum --in " + scratch_path("big.json")).exit_code == 3);
}

TEST_CASE("cli: byte-identical reruns and thread independence") {
  const std::string a = run_cli("generate --family random_regular --n 60 --d 3 --seed 5").output;
  const std::string b = run_cli("generate --family random_regular --n 60 --d 3 --seed 5").output;
  CHECK(a == b);
  CHECK_FALSE(a.empty());

  write_file(scratch_path("rr.json"), a);
  const std::string c1 =
      run_cli("curvature --in " + scratch_path("rr.json") + " --threads 1").output;
  const std::string c4 =
      run_cli("curvature --in " + scratch_path("rr.json") + " --threads 4").output;
  CHECK(c1 == c4);
}

TEST_CASE("cli: run manifest written next to --out") {
  const std::string out = scratch_path("prism.json");
  const RunResult r = run_cli("generate --family prism --n 4 --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(graph_from_json(read_file(out)) == make_prism(4));
  const std::string manifest = read_file(out + ".manifest.json");
  CHECK(manifest.find("\"tool\": \"ricci_gap\"") != std::string::npos);
  CHECK(manifest.find("\"version\"") != std::string::npos);
  CHECK(manifest.find("\"arithmetic_mode\"") != std::string::npos);
}

TEST_CASE("cli: walk meet requires a seed") {
  write_file(scratch_path("c6.json"), graph_to_json(make_cycle(6)));
  CHECK(run_cli("walk --in " + scratch_path("c6.json") + " --meet 0 2 --trials 10 --horizon 10")
            .exit_code == 2);
  const RunResult ok = run_cli("walk --in " + scratch_path("c6.json") +
                               " --meet 0 2 --trials 10 --horizon 50 --seed 1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.substr(0, 7) == "t,tail\n");
}

TEST_CASE("cli: profile census and compare") {
  write_file(scratch_path("c6.json"), graph_to_json(make_cycle(6)));
  write_file(scratch_path("c100.json"), graph_to_json(make_cycle(100)));
  const RunResult census = run_cli("profile --in " + scratch_path("c6.json") + " --depth 2");
  CHECK(census.exit_code == 0);
  CHECK(census.output.find("\"classes\"") != std::string::npos);

  const RunResult compare = run_cli("profile --in " + scratch_path("c6.json") + " --depth 3 " +
                                    "--compare " + scratch_path("c100.json"));
  CHECK(compare.exit_code == 0);
  CHECK(compare.output.find("3,1/1") != std::string::npos);   // tv_3 = 1
  CHECK(compare.output.find("0,0/1") != std::string::npos);   // tv_0 = 0
}

TEST_CASE("cli: trichotomy json on the torus") {
  write_file(scratch_path("torus12.json"), graph_to_json(make_torus2d(12)));
  const RunResult r = run_cli("trichotomy --in " + scratch_path("torus12.json") +
                              " --delta 4 --rho 0.9 --eps 0.001");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"expansion_clause\": {\"fired\": true") != std::string::npos);
  CHECK(r.output.find("\"curvature_clause\": {\"fired\": false") != std::string::npos);
}
