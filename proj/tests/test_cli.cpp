// End-to-end checks of the pb binary: spawn it, capture stdout+stderr,
// compare bytes and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef PB_CLI_PATH
#error "PB_CLI_PATH must point at the pb binary"
#endif
#ifndef PB_FIXTURE_DIR
#error "PB_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string command = env + (env.empty() ? "" : " ") + PB_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(PB_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("single values") {
  auto r = run("second --n 4 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "7\n");
  CHECK(run("lah --m 3 --k 2").output == "6\n");
  CHECK(run("mstirling --n 5 --k 2 --m 3").output == "378\n");
  CHECK(run("first --n 4 --k 2").output == "11\n");
  CHECK(run("weighted --n 2 --k 1 --x 1/2").output == "2\n");
  CHECK(run("r --n 2 --k 1 --r 1").output == "3\n");
}

TEST_CASE("triangle fixtures transcribed from the three shifted tables") {
  for (int m = 1; m <= 3; ++m) {
    auto md = run("mstirling --m " + std::to_string(m) + " --rows 7 --format markdown");
    CHECK(md.exit_code == 0);
    CHECK(md.output == fixture("table" + std::to_string(m) + ".md"));
    auto csv = run("mstirling --m " + std::to_string(m) + " --rows 7 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output == fixture("table" + std::to_string(m) + ".csv"));
  }
}

TEST_CASE("poly-Bernoulli sequences") {
  auto r = run("polybern --n 0..6 --k 1 --a 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1, 1/2, 1/6, 0, -1/30, 0, 1/42\n");
  CHECK(run("polybern --n 2 --k -1 --a 1").output == "4\n");
  CHECK(run("polybern --n 0 --m 5 --k 3 --a 1/2").output == "8\n");
  CHECK(run("polybern --n 2 --k -1 --a 1 --algorithm matrix").output == "4\n");
  CHECK(run("polybern --n 2 --m 1 --k 1 --a 1 --negative").output ==
        run("polybern --n 2 --m 1 --k -1 --a 1").output);
}

TEST_CASE("bfile output") {
  auto ok = run("polybern --n 0..4 --k -2 --a 1 --format bfile");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "0 1\n1 4\n2 14\n3 46\n4 146\n");
  auto offset = run("polybern --n 2..4 --k -1 --a 1 --format bfile");
  CHECK(offset.output == "2 4\n3 8\n4 16\n");
  auto bad = run("polybern --n 0..4 --k 1 --a 1 --format bfile");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("bfile") != std::string::npos);
}

TEST_CASE("polynomial output") {
  CHECK(run("poly --n 1 --m 0 --k 1 --a 1").output == "1/2 - x\n");
  CHECK(run("poly --n 1 --m 0 --k -1 --a 1").output == "2 - x\n");
  auto json = run("poly --n 0 --m 2 --k 2 --a 1 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output == "{\"coeffs\":[\"1\"]}\n");
  CHECK(run("poly --n 1 --m 0 --k 1 --a 1 --algorithm explicit").output == "1/2 - x\n");
  // "negative" interprets --k as the magnitude, so it rejects k < 0.
  CHECK(run("poly --n 1 --m 0 --k 1 --a 1 --algorithm negative").output == "2 - x\n");
  CHECK(run("poly --n 1 --m 0 --k -1 --a 1 --algorithm negative").exit_code == 2);
}

TEST_CASE("parameter-domain errors exit with code 2 and name the precondition") {
  auto r = run("polybern --n 2 --k 1 --a 0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("non-positive integer") != std::string::npos);
  CHECK(run("polybern --n 2 --k 1 --a -3").exit_code == 2);
  CHECK(run("polybern --n 2 --k 1 --a x").exit_code == 2);
  CHECK(run("second --n 4").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("POLYBERN_MAX_N caps request sizes") {
  CHECK(run("mstirling --m 1 --rows 7", "POLYBERN_MAX_N=5").exit_code == 2);
  CHECK(run("mstirling --m 1 --rows 7", "POLYBERN_MAX_N=7").exit_code == 0);
  CHECK(run("polybern --n 0..70 --k 1 --a 1").exit_code == 2);  // default cap 64
  CHECK(run("second --n 65 --k 2").exit_code == 2);
}

TEST_CASE("chromatic subcommand reads edge lists from stdin") {
  std::string path3 = "printf 'n 3\\n0 1\\n1 2\\n' |";
  auto p = run("chromatic -", path3);
  CHECK(p.exit_code == 0);
  CHECK(p.output == "x - 2x^2 + x^3\n");
  auto pb = run("chromatic - --pbar", path3);
  CHECK(pb.output == "x + 2x^2 + x^3\n");
  auto ev = run("chromatic - --eval 3", path3);
  CHECK(ev.output == "12\n");
  auto bad = run("chromatic -", "printf 'oops' |");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify subcommand") {
  auto tables = run("verify tables");
  CHECK(tables.exit_code == 0);
  CHECK(tables.output == "tables: 3/3 exact\n");

  auto duality = run("verify duality --seed 42");
  CHECK(duality.exit_code == 0);
  CHECK(duality.output == "duality: 2/2 exact\n");

  auto json = run("verify tables --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"passed\": true") != std::string::npos);

  CHECK(run("verify nonsense").exit_code == 2);
}

TEST_CASE("identical invocations are byte-identical") {
  std::string cmd = "verify all --seed 42 --format json";
  auto first = run(cmd);
  auto second = run(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("output redirects to a file") {
  std::string path = "/tmp/pb_cli_test_out.txt";
  std::remove(path.c_str());
  auto r = run("second --n 4 --k 2 --output " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "7\n");
  std::remove(path.c_str());
}
