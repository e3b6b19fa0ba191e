#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/algebra/poly_json.hpp"
#include "cfgcalc/suite/targets.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into `out` when asked.
Run cli(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string("'") + CFGCALC_CLI_PATH + "' " + args;
  cmd += with_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("derive") {
  auto r = cli("derive --grammar 'u->u*v; v->v' --start u --n 3");
  CHECK(r.status == 0);
  CHECK(r.out == "u*v + 3*u*v^2 + u*v^3\n");

  r = cli("derive --grammar 'f->f*g; g->4*f^2' --start f --n 2");
  CHECK(r.out == "f*g^2 + 4*f^3\n");

  r = cli("derive --grammar 'f->f*g; g->4*f^2' --start 'f*g - 2' --n 0");
  CHECK(r.out == "-2 + f*g\n");

  r = cli("derive --builtin eulerian --start y --op preD:y --n 2");
  CHECK(r.status == 0);
  CHECK(r.out == "4*y*z^4 + 4*y^3*z^2\n");

  r = cli("derive --builtin secant-tangent --start f --op postD:f --n 1");
  CHECK(r.out == "f^2*g\n");
}

TEST_CASE("derive json output parses back") {
  const auto r = cli("derive --builtin g2 --start 'u*v' --n 1 --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto p = cfgcalc::algebra::poly_from_json(j.at("result"));
  CHECK(p == cfgcalc::algebra::parse_poly("u^2*v^2 + 4*u^4", p.alphabet()));
  CHECK(j.at("n") == 1);
  CHECK(j.at("operator") == "D");
}

TEST_CASE("derive from a config file") {
  const auto path = std::filesystem::temp_directory_path() / "cfgcalc_cli_test.cfg";
  {
    std::ofstream f(path);
    f << "# demo\n[mine]\nu -> u*v\nv -> v\n";
  }
  auto r = cli("derive --config '" + path.string() + "' --use mine --start u --n 3");
  CHECK(r.status == 0);
  CHECK(r.out == "u*v + 3*u*v^2 + u*v^3\n");
  r = cli("derive --config '" + path.string() + "' --use other --start u --n 1");
  CHECK(r.status == 2);
  std::filesystem::remove(path);
}

TEST_CASE("usage and parse errors exit with 2") {
  auto r = cli("derive --grammar 'u -> w' --start u --n 1", true);
  CHECK(r.status == 2);
  CHECK(r.out.find("line 1, column 6") != std::string::npos);
  CHECK(r.out.find("undeclared letter 'w'") != std::string::npos);

  CHECK(cli("derive --grammar 'u->u' --start v --n 1").status == 2);
  CHECK(cli("derive --grammar 'u->u' --start u --n 1 --op preD:v").status == 2);
  CHECK(cli("derive --grammar 'u->u' --start u --n 1 --bogus").status == 2);
  CHECK(cli("").status == 2);
  CHECK(cli("verify --target thm99").status == 2);
  CHECK(cli("verify --target thm32 --n-max 41").status == 2);
  CHECK(cli("table --name nope --rows 2").status == 2);
  CHECK(cli("oracle --kind descents --n 12").status == 2);
  CHECK(cli("--help").status == 0);
}

TEST_CASE("gamma") {
  auto r = cli("gamma --family coxeter-a --n 4");
  CHECK(r.status == 0);
  CHECK(r.out == "h: 1,11,11,1\ngamma: 1,8\n");
  CHECK(cli("gamma --family coxeter-b --n 2").out == "h: 1,6,1\ngamma: 1,4\n");
  CHECK(cli("gamma --family assoc-b --n 4").out == "h: 1,16,36,16,1\ngamma: 1,12,6\n");
  CHECK(cli("gamma --family assoc-a --n 2").out == "h: 1,1\ngamma: 1\n");
  const auto j = nlohmann::json::parse(cli("gamma --family coxeter-a --n 4 --format json").out);
  CHECK(j.at("gamma") == nlohmann::json::array({"1", "8"}));
}

TEST_CASE("verify") {
  CHECK(cli("verify --target thm32 --n-max 12").status == 0);
  const auto r = cli("verify --target thm44 --n-max 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(cli("verify --target all --n-max 10").status == 0);

  const auto j = nlohmann::json::parse(cli("verify --target prop41 --n-max 3 --format json").out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("targets").size() == 1);
}

TEST_CASE("verify all covers the target registry") {
  const auto j = nlohmann::json::parse(cli("verify --target all --n-max 3 --format json").out);
  const auto& reported = j.at("targets");
  REQUIRE(reported.size() == cfgcalc::suite::targets().size());
  for (std::size_t i = 0; i < reported.size(); ++i) {
    CHECK(reported[i].at("name") == cfgcalc::suite::targets()[i].name);
  }
}

TEST_CASE("table") {
  CHECK(cli("table --name gamma-b --rows 4").out == "1\n1 4\n1 20\n1 72 80\n");
  CHECK(cli("table --name motzkin-T --rows 2").out == "1 1\n2 2 1\n");
  CHECK(cli("table --name gamma-a --rows 1").out == "1\n");
  CHECK(cli("table --name A101280 --rows 4").out == cli("table --name gamma-a --rows 4").out);
  const auto b = cli("table --name A107230 --rows 2 --format bfile --offset 5").out;
  CHECK(b.find("offset 5") != std::string::npos);
  CHECK(b.substr(b.find("\n5 ")) == "\n5 1\n6 1\n7 2\n8 2\n9 1\n");
  const auto j = nlohmann::json::parse(cli("table --name cube-f --rows 2 --format json").out);
  CHECK(j.at("rows") == nlohmann::json::parse(R"([["2","1"],["4","4","1"]])"));
}

TEST_CASE("oracle and classical") {
  CHECK(cli("oracle --kind descents --n 4").out == "1 11 11 1\n");
  CHECK(cli("oracle --kind descents-b --n 2").out == "1 6 1\n");
  CHECK(cli("oracle --kind alternating-a --n 4").out == "5\n");
  CHECK(cli("oracle --kind alternating-b --n 3").out == "16\n");
  CHECK(cli("oracle --kind left-factors --n 1").out == "1 1\n");
  CHECK(cli("classical --family T --n 2").out == "-1 + 2*x^2\n");
  CHECK(cli("classical --family U --n 2").out == "-1 + 4*x^2\n");
  CHECK(cli("classical --family P --n 1").out == "1 + u^2\n");
}

TEST_CASE("output is deterministic") {
  const std::string args = "verify --target all --n-max 6 --format json";
  const auto a = cli(args), b = cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(cli("derive --builtin motzkin --start 't^2*u' --n 8").out ==
        cli("derive --builtin motzkin --start 't^2*u' --n 8").out);
}
