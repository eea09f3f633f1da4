#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exitCode = -1;
  std::string output;  // stdout and stderr interleaved
};

// Runs the installed command line binary through the shell and captures
// everything it prints together with its exit code.
RunResult runCli(const std::string& args) {
  std::string cmd = std::string(BANDLAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.output.append(buf.data(), got);
  }
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exitCode = WEXITSTATUS(status);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// DOT node statements: lines carrying a label but no arrow.
int countDotNodes(const std::string& text) {
  int n = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("[label=") != std::string::npos &&
        line.find("->") == std::string::npos) {
      ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("word problem verdicts drive the exit code") {
  RunResult r = runCli("wp --word aa --in L");
  CHECK(r.exitCode == 0);
  CHECK(r.output == "trivial lamps=[];shift=0\n");

  CHECK(runCli("wp --word a --in L").exitCode == 1);
  CHECK(runCli("wp --word aXxa --in L").exitCode == 0);

  // relator(2) is one of the level-3 defining relations but not a
  // consequence of the level-2 ones.
  r = runCli("wp --word 'aX^2ax^2aX^2ax^2' --in G1:2");
  CHECK(r.exitCode == 1);
  CHECK(r.output.rfind("nontrivial ", 0) == 0);
  CHECK(runCli("wp --word 'aX^2ax^2aX^2ax^2' --in G1:3").exitCode == 0);
  CHECK(runCli("wp --word 'aX^2ax^2aX^2ax^2' --in L").exitCode == 0);
  CHECK(runCli("wp --word aa --in G1:1").exitCode == 0);

  CHECK(runCli("wp --word xtXT --in E").exitCode == 0);
  CHECK(runCli("wp --word XaxaTat --in E").exitCode == 0);
  CHECK(runCli("wp --word taT --in E").exitCode == 1);
}

TEST_CASE("usage and parse problems exit with code 2") {
  CHECK(runCli("wp --word 'a a' --in L").exitCode == 0);  // whitespace skipped
  CHECK(runCli("wp --word zz --in L").exitCode == 2);
  CHECK(runCli("wp --word aa --in M").exitCode == 2);
  CHECK(runCli("wp --word aa --in G1:0x").exitCode == 2);
  CHECK(runCli("wp --word tat --in L").exitCode == 2);    // t outside L
  CHECK(runCli("wp --word tat --in G1:1").exitCode == 2);
  CHECK(runCli("wp --in L").exitCode == 2);               // --word required
  CHECK(runCli("wp --word aa --in L --frobnicate x").exitCode == 2);
  CHECK(runCli("frobnicate").exitCode == 2);
  CHECK(runCli("").exitCode == 2);
  CHECK(runCli("--help").exitCode == 0);
  CHECK(runCli("experiment --level 0 --base 1 --push 1 --beta-len 1 --ball 1")
            .exitCode == 2);
}

TEST_CASE("caret powers expand before word parsing") {
  CHECK(runCli("wp --word 'x^3X^3' --in L").exitCode == 0);
  CHECK(runCli("wp --word 'a^2' --in L").exitCode == 0);
  CHECK(runCli("wp --word 'x^-2x^2' --in L").exitCode == 0);
  CHECK(runCli("wp --word 'a^0' --in L").exitCode == 0);
  CHECK(runCli("wp --word 'x^+1X' --in L").exitCode == 0);

  CHECK(runCli("wp --word '^2' --in L").exitCode == 2);
  CHECK(runCli("wp --word 'x^' --in L").exitCode == 2);
  CHECK(runCli("wp --word 'x^y' --in L").exitCode == 2);
  CHECK(runCli("wp --word 'x^-' --in L").exitCode == 2);
}

TEST_CASE("ball exports are deterministic and sized correctly") {
  RunResult dot = runCli("ball --radius 1 --level 2 --dot -");
  CHECK(dot.exitCode == 0);
  CHECK(countDotNodes(dot.output) == 4);
  CHECK(runCli("ball --radius 1 --level 2 --dot -").output == dot.output);

  RunResult json = runCli("ball --radius 2 --level 2 --json -");
  CHECK(json.exitCode == 0);
  CHECK(runCli("ball --radius 2 --level 2 --json -").output == json.output);
  auto parsed = nlohmann::json::parse(json.output);
  CHECK(parsed.at("vertices").size() == 10);

  RunResult summary = runCli("ball --radius 1 --level 2");
  CHECK(summary.exitCode == 0);
  CHECK(summary.output.rfind("radius=1 level=2 vertices=4", 0) == 0);
}

TEST_CASE("fill exports feed the band reporter") {
  std::string diagramPath = "cli_fill_diagram.json";
  RunResult r = runCli("fill --word aa --level 1 --max-area 4 --json " +
                       diagramPath);
  CHECK(r.exitCode == 0);
  CHECK(r.output == "found area=1 states=1\n");

  RunResult bands = runCli("bands --diagram " + diagramPath);
  CHECK(bands.exitCode == 0);
  auto report = nlohmann::json::parse(bands.output);
  REQUIRE(report.at("bands").size() == 1);
  CHECK(report["bands"][0]["side_x_exponent_sums"] ==
        nlohmann::json::array({0, 0}));
  CHECK(runCli("bands --diagram " + diagramPath).output == bands.output);

  // Repeated fills produce byte-identical artifacts.
  CHECK(runCli("fill --word 'aX^1ax^1aX^1ax^1' --level 2 --max-area 4 --json -")
            .output ==
        runCli("fill --word 'aX^1ax^1aX^1ax^1' --level 2 --max-area 4 --json -")
            .output);

  RunResult dot = runCli("fill --word aa --level 1 --max-area 4 --dot -");
  CHECK(dot.exitCode == 0);
  CHECK(dot.output.find("graph") != std::string::npos);

  CHECK(runCli("fill --word ax --level 1 --max-area 4").exitCode == 1);
  CHECK(runCli("fill --word ax --level 1 --max-area 4")
            .output.rfind("not-found-within-bound", 0) == 0);
}

TEST_CASE("broken diagram files are rejected with a violation list") {
  CHECK(runCli("bands --diagram no_such_file.json").exitCode == 2);

  std::ofstream("cli_junk.json") << "{\"not\": \"a diagram\"}";
  CHECK(runCli("bands --diagram cli_junk.json").exitCode == 2);

  // Structurally parseable but invalid: relabel one side of the bigon so
  // the inner face no longer reads a defining relation.
  runCli("fill --word aa --level 1 --max-area 4 --json cli_broken.json");
  auto doc = nlohmann::json::parse(slurp("cli_broken.json"));
  doc["edges"][1]["label"] = "x";
  std::ofstream("cli_broken.json") << doc.dump();
  RunResult r = runCli("bands --diagram cli_broken.json");
  CHECK(r.exitCode == 2);
  CHECK(r.output.find("invalid diagram") != std::string::npos);
  CHECK(r.output.find("- ") != std::string::npos);
}

TEST_CASE("experiment summary counts candidates and fillable detours") {
  std::string flags = "--level 1 --base 6 --push 2 --beta-len 3 --ball 3";
  RunResult r = runCli("experiment " + flags);
  CHECK(r.exitCode == 0);
  CHECK(r.output == "n=1 m=6 k=2 betas=4 fillable=0\n");

  // Identical run with a worker pool.
  CHECK(runCli("experiment " + flags + " --workers 3").output == r.output);

  // Dropping the ball constraint admits the backtracking control.
  RunResult open = runCli("experiment " + flags + " --no-ball");
  CHECK(open.exitCode == 0);
  CHECK(open.output == "n=1 m=6 k=2 betas=5 fillable=1\n");

  std::string reportPath = "cli_experiment_report.json";
  CHECK(runCli("experiment " + flags + " --json " + reportPath).exitCode == 0);
  auto report = nlohmann::json::parse(slurp(reportPath));
  CHECK(report.at("config").at("level") == 1);
  CHECK(report.at("config").at("base") == 6);
  CHECK(report.at("candidates") == 4);
  CHECK(report.at("fillable") == 0);
  CHECK(report.at("verdicts").size() == 4);
  CHECK(report.at("control").at("status") == "fillable");
}

TEST_CASE("ext prints the canonical form and the abelian image") {
  RunResult r = runCli("ext --word taT");
  CHECK(r.exitCode == 0);
  CHECK(r.output ==
        "{\"num\":[1],\"denpow\":1,\"m\":0,\"q\":0}\nabelian m=0 q=0\n");

  RunResult powers = runCli("ext --word 'x^3T^2'");
  CHECK(powers.exitCode == 0);
  CHECK(powers.output.find("abelian m=3 q=-2") != std::string::npos);

  CHECK(runCli("ext --word 'q'").exitCode == 2);
}
