// End-to-end tests of the command-line tool: spawns the real binary.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef REDEI_CLI_PATH
#error "REDEI_CLI_PATH must point at the built binary"
#endif
#ifndef REDEI_GOLDEN_DIR
#error "REDEI_GOLDEN_DIR must point at the golden tables"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(REDEI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("construct: text output and exit codes") {
  RunResult r = run("construct --t 3 --n 5 --m 2 --family M");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x^51 + x^30 + x^23\n");

  r = run("construct --t 3 --n 1 --m 1 --family N");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x^17\n");

  // excluded cell: polynomial still printed, exit code 2
  r = run("construct --t 3 --n 1 --m 3 --family M");
  CHECK(r.exit_code == 2);
  CHECK(r.output == "x^28\nexcluded: gcd(n+m(q+1), q-1) = 7\n");
}

TEST_CASE("construct: json output") {
  RunResult r = run("construct --t 3 --n 5 --m 2 --family M --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("status") == "permutes");
  CHECK(doc.at("poly") == "x^51 + x^30 + x^23");
  CHECK(doc.at("exponents") == nlohmann::json({51, 30, 23}));

  r = run("construct --t 3 --n 1 --m 3 --family M --format json");
  CHECK(r.exit_code == 2);
  doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("status") == "excluded");
  CHECK(doc.at("reason") == "gcd(n+m(q+1),q-1)=7");
}

TEST_CASE("construct is deterministic") {
  RunResult a = run("construct --t 5 --n 7 --m 2 --family N");
  RunResult b = run("construct --t 5 --n 7 --m 2 --family N");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("verify agreement") {
  RunResult r = run("verify --t 3 --n 5 --m 2 --family M");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "predicate=true bruteforce=true agree=true\n");

  // an excluded cell still agrees: both sides say "not a permutation"
  r = run("verify --t 3 --n 1 --m 3 --family M");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "predicate=false bruteforce=false agree=true\n");
}

TEST_CASE("verify reports a predicate/brute-force disagreement") {
  // The gcd(n, q^2-1) condition is sufficient-only; this excluded cell is a
  // bijection, and the tool's whole job is to make that visible.
  RunResult r = run("verify --t 5 --n 11 --m 1 --family M");
  CHECK(r.exit_code == 65);
  CHECK(r.output == "predicate=false bruteforce=true agree=false\n");
}

TEST_CASE("verify refuses fields beyond the exhaustion cap") {
  RunResult r = run("verify --t 13 --n 1 --m 1 --family M");
  CHECK(r.exit_code == 69);
  CHECK(r.output.find("REDEI_EXHAUST_CAP") != std::string::npos);

  // the cap is an element count and can be lowered through the environment
  r = run("verify --t 5 --n 7 --m 1 --family M", "REDEI_EXHAUST_CAP=64");
  CHECK(r.exit_code == 69);
  r = run("verify --t 5 --n 7 --m 1 --family M", "REDEI_EXHAUST_CAP=1024");
  CHECK(r.exit_code == 0);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run("").exit_code == 64);
  CHECK(run("construct --t 3 --n 5 --family M").exit_code == 64);    // missing --m
  CHECK(run("construct --t 3 --n 5 --m 2 --family X").exit_code == 64);
  CHECK(run("frobnicate").exit_code == 64);
  CHECK(run("construct --t 4 --n 1 --m 1 --family M").exit_code == 64);  // even t
  CHECK(run("table --t 3 --family M --modulus 1100").exit_code == 64);   // reducible
}

TEST_CASE("table reproduces the golden grid byte-for-byte across runs") {
  RunResult r = run("table --t 3 --family M");
  CHECK(r.exit_code == 0);
  auto generated = nlohmann::json::parse(r.output);
  auto golden = nlohmann::json::parse(read_file(std::string(REDEI_GOLDEN_DIR) + "/table1_t3_M.json"));
  CHECK(generated == golden);

  // --out writes exactly what stdout carries
  std::string tmp = "cli_table_out.json";
  RunResult w = run("table --t 3 --family M --out " + tmp);
  CHECK(w.exit_code == 0);
  CHECK(read_file(tmp) == r.output);
  std::remove(tmp.c_str());
}

TEST_CASE("table with explicit rows") {
  RunResult r = run("table --t 5 --family M --n-list 7,13,34 --m-max 3");
  CHECK(r.exit_code == 0);
  auto generated = nlohmann::json::parse(r.output);
  auto golden = nlohmann::json::parse(read_file(std::string(REDEI_GOLDEN_DIR) + "/table3_t5_M.json"));
  CHECK(generated == golden);
}

TEST_CASE("lemmas") {
  RunResult r = run("lemmas --t 3 --n-max 21");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("OK: ") != std::string::npos);

  CHECK(run("lemmas --t 4").exit_code == 64);
  CHECK(run("lemmas --t 13").exit_code == 69);
}

TEST_CASE("selftest") {
  RunResult r = run(std::string("selftest --data-dir ") + REDEI_GOLDEN_DIR);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("OK: ") != std::string::npos);

  // identical invocations give identical bytes
  RunResult again = run(std::string("selftest --data-dir ") + REDEI_GOLDEN_DIR);
  CHECK(again.output == r.output);

  // the compiled-in default data directory works too
  CHECK(run("selftest").exit_code == 0);
}

TEST_CASE("selftest reports a corrupted golden file by name") {
  // copy the golden directory, then flip one printed cell
  std::string dir = "corrupted_golden";
  std::string setup = "rm -rf " + dir + " && cp -r " + std::string(REDEI_GOLDEN_DIR) + " " + dir;
  REQUIRE(std::system(setup.c_str()) == 0);
  std::string path = dir + "/table1_t3_M.json";
  std::string text = read_file(path);
  auto pos = text.find("\"x^10\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"x^9\"");
  std::ofstream(path, std::ios::binary) << text;

  RunResult r = run("selftest --data-dir " + dir);
  CHECK(r.exit_code == 65);
  CHECK(r.output.find("golden-table1_t3_M.json: FAIL") != std::string::npos);
  CHECK(std::system(("rm -rf " + dir).c_str()) == 0);
}
