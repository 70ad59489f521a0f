#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "nct/theta.hpp"

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(NCT_BIN) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string capture(const std::string& args) {
  std::string out = "/tmp/nct_cli_out.txt";
  std::string cmd = std::string(NCT_BIN) + " " + args + " >" + out + " 2>/dev/null";
  std::system(cmd.c_str());
  return slurp(out);
}

}  // namespace

TEST_CASE("build and gauntness check round-trip") {
  CHECK(run("build cell --n 2 --k 2 -o /tmp/nct_c2.json") == 0);
  CHECK(run("check gaunt /tmp/nct_c2.json") == 0);

  CHECK(run("build walking-iso --n 1 -o /tmp/nct_e.json") == 0);
  CHECK(run("check gaunt /tmp/nct_e.json") == 1);  // invertible arrow

  CHECK(run("build cell --n 1 --k 2 -o /tmp/nct_bad.json") == 2);  // k > n
  {
    std::ofstream os("/tmp/nct_garbage.json");
    os << "{not json";
  }
  CHECK(run("check gaunt /tmp/nct_garbage.json") == 2);
  CHECK(run("check gaunt /tmp/nct_no_such_file.json") == 2);
}

TEST_CASE("verify runs a suite and writes a parseable report") {
  CHECK(run("verify s00-iso --n 1 --window 4 --report /tmp/nct_rep.json") == 0);
  auto j = nlohmann::json::parse(slurp("/tmp/nct_rep.json"));
  CHECK(j["suite"] == "s00-iso");
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() > 0);
  CHECK(j["work"].get<long>() == static_cast<long>(j["checks"].size()));

  CHECK(run("verify s00-iso --n 1 --window 4 --format text "
            "--report /tmp/nct_rep.txt") == 0);
  std::string text = slurp("/tmp/nct_rep.txt");
  CHECK(text.find("result: PASS") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  CHECK(run("verify gaunt-locality --n 1 --window 4 --seed 7 "
            "--report /tmp/nct_a.json") == 0);
  CHECK(run("verify gaunt-locality --n 1 --window 4 --seed 7 "
            "--report /tmp/nct_b.json") == 0);
  std::string a = slurp("/tmp/nct_a.json"), b = slurp("/tmp/nct_b.json");
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("fault injection forces a verification failure") {
  CHECK(run("verify s00-iso --n 1 --window 4 --fault drop-glue "
            "--report /tmp/nct_f.json") == 1);
  auto j = nlohmann::json::parse(slurp("/tmp/nct_f.json"));
  CHECK(j["pass"] == false);
  CHECK(j["witnesses"].size() > 0);
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run("verify no-such-suite --n 1") == 2);
  CHECK(run("verify s00-iso --n 0") == 2);
  CHECK(run("build no-such-kind --n 1 -o /tmp/nct_x.json") == 2);
  CHECK(run("frobnicate") == 2);
}

TEST_CASE("exhausted budgets exit with code 3") {
  CHECK(run("verify s00-iso --n 1 --window 4 --budget 10") == 3);
}

TEST_CASE("budget can come from the environment") {
  std::string cmd = std::string("NCT_BUDGET=10 ") + NCT_BIN +
                    " verify s00-iso --n 1 --window 4 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 3);
}

TEST_CASE("enum theta lists the bounded window") {
  std::string out = capture("enum theta --n 2 --max-size 3");
  int lines = 0;
  for (char c : out) lines += c == '\n';
  CHECK(lines == static_cast<int>(nct::theta_enumerate_objects(2, 3).size()));
  CHECK(out.find("[2;[0],[0]]") != std::string::npos);
}
