#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "wonderkit/json_io.hpp"
#include "wonderkit/spherical.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stderr is folded into the captured text only when asked.
Run run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(WK_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(WK_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("verify a single case") {
  const Run r = run("verify --case e8-weyl-order");
  CHECK(r.status == 0);
  CHECK(r.out.find("696729600") != std::string::npos);
  CHECK(r.out.rfind("PASS e8-weyl-order", 0) == 0);

  const Run j = run("verify --case e8-weyl-order --json");
  CHECK(j.status == 0);
  CHECK(wk::parse_json_text(j.out, "stdout").at("verdict") == "pass");
}

TEST_CASE("verify --all prints one line per case") {
  const Run r = run("verify --all");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 14);
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) CHECK(line.rfind("PASS ", 0) == 0);
}

TEST_CASE("fan check on the projective plane") {
  const Run r = run("fan check --input " + data("p2.json"));
  CHECK(r.status == 0);
  CHECK(r.out.find("complete=true") != std::string::npos);
  CHECK(r.out.find("smooth=true") != std::string::npos);
  CHECK(r.out.find("picard=1") != std::string::npos);

  const Run blown = run("fan subdivide --input " + data("p2.json") + " --ray 1,1 -o p2_blown.json");
  CHECK(blown.status == 0);
  const Run c = run("fan check --input p2_blown.json --json");
  CHECK(c.status == 0);
  CHECK(wk::parse_json_text(c.out, "stdout").at("picard") == 2);
}

TEST_CASE("fan and root-system JSON re-export is byte-identical") {
  REQUIRE(run("fan build --input " + data("p2.json") + " -o fan_a.json").status == 0);
  REQUIRE(run("fan build --input fan_a.json -o fan_b.json").status == 0);
  CHECK(slurp("fan_a.json") == slurp("fan_b.json"));

  REQUIRE(run("fan build --type G2 -o g2_a.json").status == 0);
  REQUIRE(run("fan build --input g2_a.json -o g2_b.json").status == 0);
  CHECK(slurp("g2_a.json") == slurp("g2_b.json"));

  for (const char* t : {"A3", "C4", "G2", "F4", "E7", "E8"}) {
    INFO(t);
    REQUIRE(run(std::string("root-system --type ") + t + " --json -o rs_a.json").status == 0);
    REQUIRE(run("root-system --input rs_a.json --json -o rs_b.json").status == 0);
    CHECK(slurp("rs_a.json") == slurp("rs_b.json"));
  }

  const Run z = run("spherical z-fan --rank 3 --json");
  REQUIRE(z.status == 0);
  const auto f = wk::colored_fan_from_json(wk::parse_json_text(z.out, "stdout"));
  CHECK(wk::dump(wk::to_json(f)) == z.out);
}

TEST_CASE("root system report") {
  const Run r = run("root-system --type E8");
  CHECK(r.status == 0);
  CHECK(r.out.find("weyl group order: 696729600") != std::string::npos);
  CHECK(r.out.find("positive roots (120)") != std::string::npos);
  CHECK(r.out.find("weight/root lattice index: 1") != std::string::npos);
  const Run j = run("root-system --type A4 --json");
  CHECK(wk::parse_json_text(j.out, "stdout").at("lattice_index") == 5);
}

TEST_CASE("weights tables") {
  const Run r = run("weights --type B2 --to fund_weight");
  CHECK(r.status == 0);
  CHECK(r.out.find("alpha_1 = (2, -2)") != std::string::npos);
  const Run v = run("weights --type C2 --to ambient --from fund_weight --vector 1,1");
  CHECK(v.status == 0);
  CHECK(v.out == "(2, 1)\n");
}

TEST_CASE("spherical and orbit subcommands") {
  const Run e = run("spherical extend --type C3");
  CHECK(e.status == 0);
  CHECK(e.out.find("X -> Z: extends") != std::string::npos);
  CHECK(e.out.find("Z -> X: does not extend") != std::string::npos);
  CHECK(run("spherical wonderful --type F4 --json").status == 0);
  CHECK(run("spherical chain --rank 3").status == 0);
  CHECK(run("spherical z-fan --type B3").status == 2);

  const Run o = run("orbits lg --n 2 --samples 60 --seed 3");
  CHECK(o.status == 0);
  CHECK(o.out.find("0 violations") != std::string::npos);
  const Run og = run("orbits og --n 3 --json");
  CHECK(og.status == 0);
  CHECK(wk::parse_json_text(og.out, "stdout").at("orbits").size() == 4);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("").status == 2);
  CHECK(run("fan check --bogus").status == 2);
  CHECK(run("verify --case e8-weyl-order --all").status == 2);
  CHECK(run("verify --json --verbose").status == 2);
  CHECK(run("verify --case no-such-case").status == 2);
  CHECK(run("root-system --type E9").status == 2);
  CHECK(run("weights --type A2 --to nowhere").status == 2);
  CHECK(run("fan check --input " + data("not_a_fan.json")).status == 2);
  CHECK(run("fan check --input does-not-exist.json").status == 2);
  CHECK(run("orbits lg --n 0").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("malformed JSON is reported with its location") {
  const Run r = run("fan check --input " + data("malformed.json"), true);
  CHECK(r.status == 2);
  CHECK(r.out.find("malformed.json") != std::string::npos);
  CHECK(r.out.find("line 4") != std::string::npos);
}
