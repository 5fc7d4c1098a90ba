#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <sys/wait.h>

// POLAR_CLI_PATH and POLAR_GOLDEN_DIR are injected by the build.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args, const std::optional<std::string>& stdin_text = {}) {
  std::string cmd = std::string("\"") + POLAR_CLI_PATH + "\" " + args;
  if (stdin_text) {
    const char* path = "/tmp/polar_cli_stdin.txt";
    std::ofstream out(path);
    out << *stdin_text;
    out.close();
    cmd += std::string(" < ") + path;
  }
  cmd += " 2>&1";

  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kGolden =
    std::string(POLAR_GOLDEN_DIR) + "/random_3_3_4_seed127.ideal";

const std::string kSquaresText = "n 2\ngen 2 0\ngen 0 2\n";
const std::string kMixedText = "n 2\ngen 3 0\ngen 0 3\ngen 1 1\n";

}  // namespace

TEST_CASE("info reports the invariants of the golden ideal") {
  const RunResult r = run("info " + kGolden);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "n\t3\n"
        "b\t2 3 3\n"
        "gens\tx1*x2 x1^2 x3^3 x2^2*x3 x2^3\n"
        "length\t10\n"
        "h\t1 3 4 2\n");
}

TEST_CASE("facets and lgens read from stdin") {
  const RunResult facets = run("facets -", kSquaresText);
  CHECK(facets.exit_code == 0);
  CHECK(facets.output ==
        "x1_1 x2_1\n"
        "x1_1 x2_2\n"
        "x1_2 x2_1\n"
        "x1_2 x2_2\n");

  const RunResult lgens = run("lgens --json -", kSquaresText);
  CHECK(lgens.exit_code == 0);
  CHECK(lgens.output ==
        "{\"schema\":1,\"command\":\"lgens\",\"generators\":["
        "{\"rank\":1,\"source\":\"1\",\"face\":[\"x1_1\",\"x2_1\"],\"colon\":[]},"
        "{\"rank\":2,\"source\":\"x2\",\"face\":[\"x1_1\",\"x2_2\"],\"colon\":[\"x2_1\"]},"
        "{\"rank\":3,\"source\":\"x1\",\"face\":[\"x1_2\",\"x2_1\"],\"colon\":[\"x1_1\"]},"
        "{\"rank\":4,\"source\":\"x1*x2\",\"face\":[\"x1_2\",\"x2_2\"],"
        "\"colon\":[\"x1_1\",\"x2_1\"]}]}\n");
}

TEST_CASE("resolution data in both output modes") {
  const RunResult text = run("betti " + kGolden);
  CHECK(text.exit_code == 0);
  CHECK(text.output == "betti\t1 10 17 10 2\nprojdim\t4\ndepth\t4\n");

  const RunResult json = run("betti --json " + kGolden);
  CHECK(json.exit_code == 0);
  CHECK(json.output ==
        "{\"schema\":1,\"command\":\"betti\",\"betti\":[1,10,17,10,2],"
        "\"projdim\":4,\"depth\":4}\n");

  const RunResult oracle = run("betti --oracle -", kMixedText);
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output ==
        "betti\t1 5 6 2\nprojdim\t3\ndepth\t3\noracle\t1 5 6 2\nmatch\tyes\n");
}

TEST_CASE("depth profile table") {
  const RunResult text = run("depth --kmax 5 " + kGolden);
  CHECK(text.exit_code == 0);
  CHECK(text.output ==
        "k\tq\tdepth\tstable\n"
        "1\t3\t4\tN\n"
        "2\t5\t2\tY\n"
        "3\t5\t2\tY\n"
        "4\t5\t2\tY\n"
        "5\t5\t2\tY\n");

  const RunResult json = run("depth --kmax 3 --json -", kSquaresText);
  CHECK(json.exit_code == 0);
  CHECK(json.output ==
        "{\"schema\":1,\"command\":\"depth\",\"kmax\":3,\"rows\":["
        "{\"k\":1,\"q\":2,\"depth\":1,\"stable\":true},"
        "{\"k\":2,\"q\":2,\"depth\":1,\"stable\":true},"
        "{\"k\":3,\"q\":2,\"depth\":1,\"stable\":true}],"
        "\"stabilization_k\":1}\n");

  CHECK(run("depth " + kGolden).exit_code != 0);
}

TEST_CASE("decomposability certificate with verification") {
  const RunResult text = run("vd -", kMixedText);
  CHECK(text.exit_code == 0);
  CHECK(text.output.rfind("shed x2_1\n  cone: x2_3 x2_2\n  del:\n", 0) == 0);
  CHECK(text.output.find("  link: shift x2 levels down 1, pad: x1_2 x1_3\n") !=
        std::string::npos);
  CHECK(text.output.find("verified\tyes\n") != std::string::npos);

  const RunResult json = run("vd --json -", kMixedText);
  CHECK(json.exit_code == 0);
  CHECK(json.output ==
        "{\"schema\":1,\"command\":\"vd\",\"certificate\":{\"kind\":\"shed\","
        "\"vertex\":\"x2_1\",\"cone\":[\"x2_3\",\"x2_2\"],\"pad\":[\"x1_2\",\"x1_3\"],"
        "\"del\":{\"kind\":\"shed\",\"vertex\":\"x1_1\",\"cone\":[\"x1_3\",\"x1_2\"],"
        "\"pad\":[],\"del\":{\"kind\":\"leaf-trivial\",\"ideal\":[[0,1],[1,0]]},"
        "\"link\":{\"kind\":\"shed\",\"vertex\":\"x1_1\",\"cone\":[\"x1_2\"],\"pad\":[],"
        "\"del\":{\"kind\":\"leaf-trivial\",\"ideal\":[[0,1],[1,0]]},"
        "\"link\":{\"kind\":\"leaf-trivial\",\"ideal\":[[0,1],[1,0]]},"
        "\"ideal\":[[0,1],[2,0]]},\"ideal\":[[0,1],[3,0]]},"
        "\"link\":{\"kind\":\"shed\",\"vertex\":\"x2_1\",\"cone\":[\"x2_2\"],\"pad\":[],"
        "\"del\":{\"kind\":\"leaf-trivial\",\"ideal\":[[0,1],[1,0]]},"
        "\"link\":{\"kind\":\"leaf-trivial\",\"ideal\":[[0,1],[1,0]]},"
        "\"ideal\":[[1,0],[0,2]]},\"ideal\":[[1,1],[0,3],[3,0]]},"
        "\"verified\":true}\n");
}

TEST_CASE("shelling order ends with a verdict") {
  const RunResult r = run("shelling -", kSquaresText);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "x1_2 x2_2\n"
        "x1_2 x2_1\n"
        "x1_1 x2_2\n"
        "x1_1 x2_1\n"
        "shelling\tyes\n");
}

TEST_CASE("verify runs the whole battery") {
  const RunResult r = run("verify " + kGolden);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "facet-bijection\tpass\n"
        "betti-vs-oracle\tpass\n"
        "linear-resolution\tpass\n"
        "linear-quotients\tpass\n"
        "shelling\tpass\n"
        "regular-decomposition\tpass\n"
        "vertex-decomposition\tpass\n"
        "powers\tpass\n"
        "depth-stabilization\tpass\n"
        "euler\tpass\n"
        "result\tpass\n");
}

TEST_CASE("random generation is deterministic") {
  const std::string args = "random --n 3 --bmax 3 --extra 4 --seed 127";
  const RunResult once = run(args);
  const RunResult twice = run(args);
  CHECK(once.exit_code == 0);
  CHECK(once.output == twice.output);

  std::ifstream golden(kGolden);
  std::stringstream bytes;
  bytes << golden.rdbuf();
  CHECK(once.output == bytes.str());

  // generated output feeds straight back into the parser.
  const RunResult info = run("info -", once.output);
  CHECK(info.exit_code == 0);
  CHECK(info.output.rfind("n\t3\n", 0) == 0);
}

TEST_CASE("failures use distinct exit codes") {
  const RunResult missing = run("info /nope.ideal");
  CHECK(missing.exit_code == 1);
  CHECK(missing.output == "error: /nope.ideal: cannot open file\n");

  const RunResult parse = run("info -", std::string("gen 1\n"));
  CHECK(parse.exit_code == 1);
  CHECK(parse.output == "error: <stdin>:1: 'gen' before 'n'\n");

  const RunResult scale = run("info -", std::string("n 1\ngen 65\n"));
  CHECK(scale.exit_code == 2);
  CHECK(scale.output == "error: pure-power bound 65 for x1 exceeds the limit 64\n");

  CHECK(run("", std::string()).exit_code != 0);
  // no file argument: reads (empty) stdin and rejects it.
  CHECK(run("info", std::string()).exit_code != 0);
}
