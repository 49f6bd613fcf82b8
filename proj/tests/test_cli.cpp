#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wg/characters.hpp"
#include "wg/partition.hpp"
#include "wg/rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Arguments pass through /bin/sh; quote anything with spaces or brackets.
RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(WG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("gram json document pins schema, index order, and entry rendering") {
  RunResult r = run_cli("gram --category=P --k=2 --symbolic --json");
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "gram");
  CHECK(doc["category"] == "P");
  CHECK((doc["index"] == json::array({"{1|2}", "{1,2}"})));
  json expect = json::array({json::array({"N^2", "N"}), json::array({"N", "N"})});
  CHECK((doc["entries"] == expect));
  CHECK(doc["formula"] == "gram-join-powers");
}

TEST_CASE("integrate prints the bare rational on the first line") {
  RunResult r = run_cli("integrate --group=O --N=2 --monomial='u[1,1]^2 u[2,2]^2'");
  REQUIRE(r.code == 0);
  CHECK(first_line(r.out) == "3/8");
  CHECK(r.out.find("formula: weingarten-sum") != std::string::npos);

  RunResult pow = run_cli("integrate --group O --N 2 --monomial 'u[1,1]^4'");
  REQUIRE(pow.code == 0);
  CHECK(first_line(pow.out) == "3/8");

  RunResult u = run_cli("integrate --group U --N 3 --monomial 'u[1,1] ub[1,1]'");
  REQUIRE(u.code == 0);
  CHECK(first_line(u.out) == "1/3");

  RunResult s = run_cli("integrate --group S --N 3 --monomial 'u[1,1] u[2,2]'");
  REQUIRE(s.code == 0);
  CHECK(first_line(s.out) == "1/6");

  RunResult rect = run_cli("integrate --group O --N 2 --rect '4'");
  REQUIRE(rect.code == 0);
  CHECK(first_line(rect.out) == "3/8");
}

TEST_CASE("partitions lists pair partitions of four points in canonical order") {
  RunResult r = run_cli("partitions --category P2 --k 4 --json");
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["count"] == 3);
  REQUIRE(doc["partitions"].size() == 3);
  CHECK(doc["partitions"][0]["partition"] == "{1,2|3,4}");
  CHECK(doc["partitions"][1]["partition"] == "{1,3|2,4}");
  CHECK(doc["partitions"][2]["partition"] == "{1,4|2,3}");
}

TEST_CASE("group labels resolve to the right families") {
  RunResult o = run_cli("partitions --group O --k 4 --json");
  REQUIRE(o.code == 0);
  CHECK(json::parse(o.out)["category"] == "P2");
  RunResult oplus = run_cli("partitions --group O+ --k 6 --json");
  REQUIRE(oplus.code == 0);
  json doc = json::parse(oplus.out);
  CHECK(doc["category"] == "NC2");
  CHECK(doc["count"] == 5);
  RunResult u = run_cli("partitions --group U --word oxox --json");
  REQUIRE(u.code == 0);
  CHECK(json::parse(u.out)["category"] == "mP2");
}

TEST_CASE("verify lindstrom reports both polynomials and passes") {
  RunResult r = run_cli("verify --suite=lindstrom --k=3");
  CHECK(r.code == 0);
  CHECK(r.out.find("overall: PASS") != std::string::npos);
  CHECK(r.out.find("det = -2*N^5 + 9*N^6 - 16*N^7 + 14*N^8 - 6*N^9 + N^10") != std::string::npos);
  CHECK(r.out.find("product = -2*N^5 + 9*N^6 - 16*N^7 + 14*N^8 - 6*N^9 + N^10") !=
        std::string::npos);
}

TEST_CASE("verify anchors passes") {
  RunResult r = run_cli("verify --suite anchors");
  CHECK(r.code == 0);
  CHECK(r.out.find("NC2(6): PASS") != std::string::npos);
}

TEST_CASE("verify poles reports the window excursion and exits nonzero") {
  RunResult r = run_cli("verify --suite poles --points 4");
  CHECK(r.code == 1);
  CHECK(r.out.find("outside window = -2") != std::string::npos);
  CHECK(r.out.find("content form") != std::string::npos);
  CHECK(r.out.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("identical argv yields byte-identical output") {
  RunResult a = run_cli("char law --family poisson --t 1/2 --window 6 --json");
  RunResult b = run_cli("char law --family poisson --t 1/2 --window 6 --json");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  RunResult m1 = run_cli("mc --group O --N 3 --monomial 'u[1,1]^2' --samples 5000 --json");
  RunResult m2 = run_cli("mc --group O --N 3 --monomial 'u[1,1]^2' --samples 5000 --json");
  REQUIRE(m1.code == 0);
  CHECK(m1.out == m2.out);
}

TEST_CASE("mc json carries the rng contract and default seed") {
  RunResult r = run_cli("mc --group U --N 2 --monomial 'u[1,1] ub[1,1]' --samples 2000 --json");
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["seed"] == 20240915);
  CHECK(doc["rng"] == "mt19937_64+marsaglia-polar");
  CHECK(doc["exact"] == "1/2");
  CHECK(doc["samples"] == 2000);
  double sigmas = doc["sigmas"].get<double>();
  CHECK(sigmas < 6.0);
}

TEST_CASE("char moments agrees with the library trace computation") {
  RunResult r = run_cli("char moments --group O --k 4 --N 10 --s 5 --json");
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  wg::Rat expect =
      wg::truncated_moment_exact(wg::CategoryDescriptor::parse("P2"), 4, 10, 5);
  CHECK(doc["value"].get<std::string>() == wg::rat_str(expect));
  CHECK(doc["formula"] == "gram-weingarten-trace");
}

TEST_CASE("char law sn emits exact atoms and weights") {
  RunResult r = run_cli("char law --family sn --N 3 --s 3 --json");
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK((doc["atoms"] == json::array({"0", "1", "3"})));
  CHECK((doc["weights"] == json::array({"1/3", "1/2", "1/6"})));
  CHECK(doc["formula"] == "truncated-character-law");
}

TEST_CASE("usage problems exit 2 with a diagnostic") {
  CHECK(run_cli("").code == 2);
  RunResult cat = run_cli("partitions --category Q7 --k 2");
  CHECK(cat.code == 2);
  CHECK(cat.out.find("Q7") != std::string::npos);
  CHECK(run_cli("gram --category P --k 2 --symbolic --N 4").code == 2);
  RunResult mono = run_cli("integrate --group O --N 2 --monomial 'u[1'");
  CHECK(mono.code == 2);
  CHECK(run_cli("integrate --group O --N 2 --monomial 'u[1,1]' --rect '2'").code == 2);
  CHECK(run_cli("char moments --group U --k 2").code == 2);
  CHECK(run_cli("verify --suite nonsense").code == 2);
  CHECK(run_cli("mc --group S --N 3 --monomial 'u[1,1]^2' --samples 2000").code == 2);
}

TEST_CASE("computation failures exit 1 with a module message") {
  RunResult r = run_cli("integrate --group O --N 2 --monomial 'u[3,3]^2'");
  CHECK(r.code == 1);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("help documents the monomial grammar and determinism contract") {
  RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("u[i,j]") != std::string::npos);
  CHECK(r.out.find("ub") != std::string::npos);
  CHECK(r.out.find("20240915") != std::string::npos);
  CHECK(r.out.find("WG_ENUM_BUDGET") != std::string::npos);
  CHECK(r.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("weingarten numeric falls back to an independent basis") {
  RunResult r = run_cli("weingarten --category P --k 3 --N 2 --json");
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["reduced"] == true);
  CHECK(doc["basis"].size() == 4);
  RunResult full = run_cli("weingarten --category P --k 2 --N 5 --json");
  REQUIRE(full.code == 0);
  json fd = json::parse(full.out);
  CHECK(fd["reduced"] == false);
  CHECK((fd["entries"][1][1] == "1/4"));
}
