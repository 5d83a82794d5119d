#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shv/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace shv;

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(SHV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const json& j) {
  std::string path = std::string("cli_") + name + ".json";
  std::ofstream f(path);
  f << j.dump();
  return path;
}

}  // namespace

TEST_CASE("decompose a line model from a file") {
  LineSheaf s;
  s.summands = {{Interval::bounded(Rational(0), true, Rational(1), false), 0, 2},
                {Interval::point(Rational(1)), 0, 1}};
  s.canonicalize();
  std::string path = write_temp("rep", to_json(assemble_line(s)));
  auto r = run_cli("decompose --input " + path + " --json");
  CHECK(r.exit_code == 0);
  CHECK(line_sheaf_from_json(json::parse(r.out)) == s);
}

TEST_CASE("twist of the constant sheaf from the command line") {
  std::string path = write_temp("const", to_json(CircleSheaf::one_local(Rational(1), 1)));
  auto r = run_cli("twist --input " + path + " --lambda 2/1 --json");
  CHECK(r.exit_code == 0);
  CircleSheaf got = circle_sheaf_from_json(json::parse(r.out));
  CHECK(got == CircleSheaf::one_local(Rational(2), 1));
}

TEST_CASE("counting invariant of the constant sheaf") {
  std::string path = write_temp("const2", to_json(CircleSheaf::one_local(Rational(1), 1)));
  auto r = run_cli("invariant --alpha 1 --r 1 --degree 0 --input " + path);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).get<int>() == 1);
}

TEST_CASE("cohomology, dual, tensor, hom and ss subcommands") {
  LineSheaf a = LineSheaf::single(Interval::bounded(Rational(0), false, Rational(1), false));
  LineSheaf b = LineSheaf::single(Interval::bounded(Rational(0), true, Rational(1), true));
  std::string pa = write_temp("a", to_json(a));
  std::string pb = write_temp("b", to_json(b));

  auto coh = run_cli("cohomology --input " + pa + " --json");
  CHECK(coh.exit_code == 0);
  CHECK(json::parse(coh.out) == json{{"1", 1}});

  auto dua = run_cli("dual --input " + pa + " --json");
  CHECK(dua.exit_code == 0);
  CHECK(line_sheaf_from_json(json::parse(dua.out)) == dual_line(a));

  auto ten = run_cli("tensor --input " + pa + " " + pb + " --json");
  CHECK(ten.exit_code == 0);
  CHECK(line_sheaf_from_json(json::parse(ten.out)) == tensor_line(a, b));

  auto hom = run_cli("hom --input " + pa + " " + pb);
  CHECK(hom.exit_code == 0);
  CHECK(json::parse(hom.out).get<int>() == 1);

  auto ss = run_cli("ss --input " + pb + " --json");
  CHECK(ss.exit_code == 0);
  CHECK(json::parse(ss.out).size() == 2);
}

TEST_CASE("linked subcommand") {
  LineSheaf f = LineSheaf::single(Interval::bounded(Rational(0), true, Rational(2), false));
  std::string path = write_temp("linked", to_json(f));
  auto r = run_cli("linked --input " + path +
                   " --p '{\"base\":\"0\",\"sign\":\"+\"}'"
                   " --q '{\"base\":\"2\",\"sign\":\"+\"}'"
                   " --window=-1,3 --json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["criterion"] == true);
  CHECK(j["linked"] == true);
}

TEST_CASE("verify-lemmas subcommand") {
  auto r = run_cli("verify-lemmas --suite ss-signs --json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["suite"] == "ss-signs");
  CHECK(j[0]["passed"] == true);

  // Deterministic under a fixed seed.
  auto r1 = run_cli("verify-lemmas --suite gabriel-count --seed 42 --json");
  auto r2 = run_cli("verify-lemmas --suite gabriel-count --seed 42 --json");
  json a = json::parse(r1.out), b = json::parse(r2.out);
  a[0].erase("millis");
  b[0].erase("millis");
  CHECK(a == b);
}

TEST_CASE("error exit codes") {
  CHECK(run_cli("decompose --input does_not_exist.json").exit_code == 2);

  std::ofstream bad("cli_bad.json");
  bad << "{ not json";
  bad.close();
  CHECK(run_cli("decompose --input cli_bad.json").exit_code == 2);

  CHECK(run_cli("frobnicate").exit_code == 2);

  std::string path = write_temp("badalpha", to_json(CircleSheaf::one_local(Rational(1), 1)));
  CHECK(run_cli("invariant --alpha 0 --input " + path).exit_code == 2);
}
