#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CHAINLOCAL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  for (size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("verify am S3 p2 passes with 2 = 2") {
  RunResult r = run_cli("verify am --group S3 --p 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"am_G\": 2") != std::string::npos);
  CHECK(r.output.find("\"am_N\": 2") != std::string::npos);
  CHECK(r.output.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli("blocks --group X99 --p 2").exit_code == 2);
  CHECK(run_cli("verify local --fn bogus --group S3 --p 2").exit_code == 2);
  CHECK(run_cli("blocks --group S3 --p 4").exit_code == 2);
  // stretch entries are gated
  CHECK(run_cli("blocks --group S6 --p 2").exit_code == 2);
}

TEST_CASE("blocks for p coprime to the order") {
  RunResult r = run_cli("blocks --group S4 --p 5");
  CHECK(r.exit_code == 0);
  CHECK(count_occurrences(r.output, "\"block_id\"") == 5);
  CHECK(count_occurrences(r.output, "\"defect\": 0") == 5);
}

TEST_CASE("constant function is local on positive-defect blocks of A5") {
  RunResult r = run_cli("verify local --fn const:5 --group A5 --p 2 --positive-defect");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("csv summary format") {
  RunResult r =
      run_cli("verify local --fn am --group S3 --p 2 --positive-defect --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("group,prime,block,function,total,verdict") != std::string::npos);
  CHECK(r.output.find("S3,2,0,am,0,zero") != std::string::npos);
}

TEST_CASE("nonzero totals exit with code 1 and carry witnesses") {
  // O_2(S3) = 1, so random conjugacy-constant functions are not local
  RunResult r = run_cli("verify local --fn random:3 --group S3 --p 2");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(r.output.find("\"terms\"") != std::string::npos);
  CHECK(r.output.find("\"chain_rep\"") != std::string::npos);
}

TEST_CASE("remaining verifiers pass on S4 at p = 2") {
  CHECK(run_cli("verify tau --group S4 --p 2").exit_code == 0);
  CHECK(run_cli("verify involution --group S4 --p 2").exit_code == 0);
  CHECK(run_cli("verify star-block --group S4 --p 2").exit_code == 0);
  CHECK(run_cli("triples --group S4 --p 2").exit_code == 0);
  CHECK(run_cli("chains --group S4 --p 2").exit_code == 0);
}

TEST_CASE("reports are byte-identical for the same seed") {
  std::string a = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                  "/chainlocal_cli_a.json";
  std::string b = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                  "/chainlocal_cli_b.json";
  RunResult r1 = run_cli("verify local --fn random:2 --group S4 --p 2 --seed 42 --out " + a);
  RunResult r2 = run_cli("verify local --fn random:2 --group S4 --p 2 --seed 42 --out " + b);
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  std::string ca = slurp(a), cb = slurp(b);
  CHECK(!ca.empty());
  CHECK(ca == cb);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("generator files are accepted as group specs") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/chainlocal_cli_gens.txt";
  {
    std::ofstream out(path);
    out << "# S3 on three points\n(0 1)\n(0 1 2)\n";
  }
  RunResult r = run_cli("verify am --group " + path + " --p 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"am_G\": 2") != std::string::npos);
  std::remove(path.c_str());
}
