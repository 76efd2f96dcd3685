#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nkoszul/cli.hpp"

using namespace nkoszul;

namespace {

int call(std::vector<std::string> args) {
  args.insert(args.begin(), "nkoszul");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

RunConfig config(const std::string& command, const std::string& algebra, std::size_t n, std::size_t D) {
  RunConfig c;
  c.command = command;
  c.algebra = algebra;
  c.n = n;
  c.max_degree = D;
  return c;
}

std::string fixture(const char* name) { return std::string("file:") + NKOSZUL_FIXTURES + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reports carry tool, config, truncation and verdict") {
  RunResult r = run(config("hilbert", "poly", 3, 5));
  CHECK(r.exit_code == 0);
  CHECK(r.report["tool"]["name"] == kToolName);
  CHECK(r.report["tool"]["version"] == kToolVersion);
  CHECK(r.report["config"]["n"] == 3);
  CHECK(r.report["truncation"] == 5);
  CHECK(r.report["verdict"] == "holds");
}

TEST_CASE("every command succeeds on a small input") {
  for (const auto& cmd : cli_commands()) {
    RunConfig c = config(cmd, "antisym", 3, 3);
    c.N = 2;
    if (cmd == "mmt" || cmd == "nmt") c.random_seed = 3;
    if (cmd == "kmt-check") {
      c.algebra = "poly";
      c.n = 2;
    }
    RunResult r = run(c);
    INFO(cmd << ": " << r.report.dump());
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("identical configs give byte-identical reports") {
  auto dir = std::filesystem::temp_directory_path() / "nkoszul_cli_test";
  std::filesystem::create_directories(dir);
  for (auto args : std::vector<std::vector<std::string>>{
           {"dvp-check", "--algebra", "antisym", "--n", "3", "--N", "3", "--max-degree", "5"},
           {"mmt", "--n", "2", "--random-seed", "9", "--max-degree", "4"},
           {"kmt-check", "--algebra", "poly", "--n", "2", "--max-degree", "3"}}) {
    auto a = args, b = args;
    a.insert(a.end(), {"-o", (dir / "a.json").string()});
    b.insert(b.end(), {"-o", (dir / "b.json").string()});
    CHECK(call(a) == 0);
    CHECK(call(b) == 0);
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
    CHECK_FALSE(slurp(dir / "a.json").empty());
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"frobnicate"}) == 2);
  CHECK(call({"hilbert", "--algebra", "weird", "--n", "2"}) == 2);
  CHECK(call({"hilbert", "--algebra", "poly"}) == 2);
  CHECK(call({"hilbert", "--n", "two"}) == 2);
  CHECK(call({"hilbert", "--n", "2", "--format", "xml"}) == 2);
  CHECK(call({"mmt", "--n", "2", "--matrix", "{\"n\": 3}"}) == 2);
  CHECK(run(config("koszul-check", fixture("missing.json"), 0, 3)).exit_code == 2);
}

TEST_CASE("a violated property exits with 1 and names the first failure") {
  RunResult r = run(config("koszul-check", fixture("non_koszul.json"), 0, 6));
  CHECK(r.exit_code == 1);
  CHECK(r.report["verdict"] == "violated");
  CHECK(r.report["certificate"]["first_failure"]["m"] == 4);
  CHECK(r.report["certificate"]["first_failure"]["l"] == 2);
  RunResult d = run(config("dvp-check", fixture("non_koszul.json"), 0, 6));
  CHECK(d.exit_code == 1);
  CHECK(run(config("koszul-check", fixture("poly2.json"), 0, 5)).exit_code == 0);
}

TEST_CASE("specialization failure is reported as an error") {
  RunConfig c = config("mmt", "poly", 2, 3);
  c.matrix_file = std::string(NKOSZUL_FIXTURES) + "/ones3.json";
  CHECK(run(c).exit_code == 2);
  c.n = 3;
  CHECK(run(c).exit_code == 0);
}

TEST_CASE("size guardrail for end(A)") {
  RunConfig c = config("kmt-check", "poly", 2, 3);  // ambient 2^6 = 64
  c.max_ambient = 10;
  CHECK(run(c).exit_code == 2);
  c.allow_large = true;
  CHECK(run(c).exit_code == 0);
  c.allow_large = false;
  c.max_ambient.reset();
  setenv("KOSZUL_MAX_AMBIENT", "10", 1);
  CHECK(run(c).exit_code == 2);
  setenv("KOSZUL_MAX_AMBIENT", "100", 1);
  CHECK(run(c).exit_code == 0);
  unsetenv("KOSZUL_MAX_AMBIENT");
  c.n = 4;
  c.max_degree = 7;  // 4^14 > 10^7
  RunResult r = run(c);
  CHECK(r.exit_code == 2);
  CHECK(r.report["error"].get<std::string>().find("--allow-large") != std::string::npos);
}

TEST_CASE("text format") {
  RunConfig c = config("dual-dims", "antisym", 4, 6);
  c.N = 3;
  c.format = "text";
  RunResult r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.render(c).find("1 4 16 4 1 0 0") != std::string::npos);
}

}
