#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "kac/exactmath.hpp"

using namespace kac;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_shell(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// runs the binary through the shell; stderr passes through unless the
// caller redirects it inside args
RunResult run_cli(const std::string& args) {
  return run_shell(std::string(KACPOLY_CLI_PATH) + " " + args);
}

IntPoly poly_from_json(const json& arr) {
  std::vector<Int> coeffs;
  for (const json& c : arr) {
    if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      coeffs.emplace_back(static_cast<long>(c.get<long long>()));
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("kac subcommand text and json") {
  RunResult text = run_cli("kac --input \"r=5; mu=2\"");
  CHECK(text.exit_code == 0);
  CHECK(text.out == "q^2+5q+11\n");

  RunResult js = run_cli("kac --input \"r=5; mu=2\" --format json");
  CHECK(js.exit_code == 0);
  json j = json::parse(js.out);
  CHECK(j.at("r") == 5);
  CHECK(j.at("mu") == json::array({{2}}));
  CHECK(j.at("warning_outside_M") == false);
  CHECK(poly_from_json(j.at("kac")).str() + "\n" == text.out);

  const json& cells = j.at("cells");
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].at("w") == json::array({"31452"}));
  CHECK(cells[0].at("inv") == 4);
  CHECK(poly_from_json(cells[0].at("rw")).str() == "1");
  CHECK(cells[1].at("w") == json::array({"34152"}));
  CHECK(poly_from_json(cells[1].at("rw")).str() == "q+3");
  CHECK(cells[2].at("w") == json::array({"34512"}));
  CHECK(cells[2].at("inv") == 6);
  CHECK(poly_from_json(cells[2].at("rw")).str() == "q^2+4q+7");

  RunResult all = run_cli("kac --input \"r=5; mu=2\" --all-cells --format json");
  CHECK(json::parse(all.out).at("cells").size() == 10);
}

TEST_CASE("warning goes to stderr in text mode and a flag in json") {
  RunResult quiet = run_cli("kac --input \"r=3; mu=2\" 2>/dev/null");
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.out == "1\n");

  RunResult err = run_cli("kac --input \"r=3; mu=2\" 2>&1 1>/dev/null");
  CHECK(err.out.find("warning") != std::string::npos);

  json j = json::parse(run_cli("kac --input \"r=3; mu=2\" --format json").out);
  CHECK(j.at("warning_outside_M") == true);
}

TEST_CASE("gm subcommand") {
  RunResult res = run_cli("gm --r 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "q^2+5q+11\n");
  CHECK(run_cli("gm --r 2 2>/dev/null").exit_code == 2);
}

TEST_CASE("genfun subcommand prints the coefficient table") {
  RunResult res = run_cli("genfun --r 4 --k 1");
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "m[1]: 1\n"
        "m[1,1]: 1\n"
        "m[1,1,1]: q+4\n"
        "m[2,1]: 1\n"
        "m[1,1,1,1]: q^3+6q^2+20q+33\n"
        "m[2,1,1]: q^2+5q+11\n"
        "m[2,2]: q+4\n"
        "m[3,1]: 1\n");

  json j = json::parse(run_cli("genfun --r 3 --k 2 --format json").out);
  CHECK(j.at("k") == 2);
  CHECK(j.at("series").size() == 3);
  CHECK(j.at("series")[0].at("terms")[0].at("m") ==
        json::array({{1}, {1}}));
}

TEST_CASE("rw and tutte subcommands") {
  CHECK(run_cli("rw --w 34512").out == "q^2+4q+7\n");
  CHECK(run_cli("rw --w \"123|312\"").out == "1\n");
  CHECK(run_cli("rw --w \"132|132\"").out == "0\n");
  CHECK(run_cli("tutte --w 34512").out == "x^4+2x^3+3x^2+3xy+x+y^2+y\n");

  std::string path = "/tmp/kacpoly_cli_test_graph.json";
  {
    std::ofstream out(path);
    out << R"({"vertices": 3, "edges": [[1,2],[2,3],[1,3,2]]})";
  }
  CHECK(run_cli("tutte --graph " + path).out == "x^2+x+y\n");
  CHECK(run_cli("tutte --graph " + path + " --subset").out == "x^2+x+y\n");
  CHECK(run_cli("rw --graph " + path).out == "q+2\n");

  json j = json::parse(run_cli("rw --graph " + path + " --format json").out);
  CHECK(j.at("edges") == json::array({{1, 2, 0}, {1, 3, 2}, {2, 3, 0}}));
  CHECK(poly_from_json(j.at("rw")).str() == "q+2");

  CHECK(run_cli("rw --w 34512 --graph " + path + " 2>/dev/null").exit_code == 2);
  CHECK(run_cli("rw 2>/dev/null").exit_code == 2);
  CHECK(run_cli("rw --graph /no/such/file.json 2>/dev/null").exit_code == 2);
}

TEST_CASE("oracle subcommands verify and report") {
  RunResult orw = run_cli("oracle-rw --w 34512 --p 3");
  CHECK(orw.exit_code == 0);
  CHECK(orw.out == "count=448 predicted=448 match=yes\n");

  json j = json::parse(run_cli("oracle-rw --w 34512 --p 2 --format json").out);
  CHECK(j.at("count") == 19);
  CHECK(j.at("predicted") == 19);
  CHECK(j.at("match") == true);

  RunResult of = run_cli("oracle-flags --input \"r=3; mu=1|1\" --p 3");
  CHECK(of.exit_code == 0);
  CHECK(of.out ==
        "orbits=28 predicted=28 match=yes\n"
        "points=169\n"
        "strata 2: 13\n"
        "strata 4: 12\n"
        "strata 8: 3\n");

  CHECK(run_cli("oracle-flags --input \"r=3; mu=1|1\" --p 4 2>/dev/null")
            .exit_code == 2);
  CHECK(run_cli("oracle-rw --w 34512 --p 3 --budget 5 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("classify-root subcommand") {
  CHECK(run_cli("classify-root --input \"r=3; mu=3,1\"").out ==
        "tag=NotARoot delta=-4\n");
  CHECK(run_cli("classify-root --input \"r=3; mu=2\"").out ==
        "tag=Real delta=-1\n");
  json j = json::parse(
      run_cli("classify-root --input \"r=5; mu=2\" --format json").out);
  CHECK(j.at("delta") == 1);
  CHECK(j.at("tag") == "FundamentalImaginary");
}

TEST_CASE("cells subcommand lists per-cell reports") {
  RunResult res = run_cli("cells --input \"r=4; mu=1,1\"");
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "2341 inv=3 rw=1\n"
        "3142 inv=3 rw=1\n"
        "3241 inv=4 rw=q+2\n"
        "3412 inv=4 rw=q+3\n"
        "3421 inv=5 rw=q^2+3q+4\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("2>/dev/null").exit_code == 2);
  CHECK(run_cli("kac 2>/dev/null").exit_code == 2);
  CHECK(run_cli("kac --input \"r=0; mu=2\" 2>/dev/null").exit_code == 2);
  CHECK(run_cli("kac --input \"r=3; mu=3,1\" 2>/dev/null").exit_code == 2);
  CHECK(run_cli("frobnicate 2>/dev/null").exit_code == 2);
  CHECK(run_cli("--help >/dev/null").exit_code == 0);
}

TEST_CASE("thread count does not change any byte of output") {
  for (const char* args :
       {"kac --input \"r=5; mu=2\" --format json --all-cells",
        "kac --input \"r=4; mu=1,1|1\" --format json",
        "cells --input \"r=4; mu=1,1\""}) {
    RunResult one = run_cli(std::string(args) + " --threads 1");
    RunResult eight = run_cli(std::string(args) + " --threads 8");
    CHECK(one.exit_code == eight.exit_code);
    CHECK(one.out == eight.out);
  }
  RunResult env = run_shell("TORUS_KAC_THREADS=3 " KACPOLY_CLI_PATH
                            " kac --input \"r=5; mu=2\"");
  CHECK(env.exit_code == 0);
  CHECK(env.out == "q^2+5q+11\n");
}
