#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" GCDIM_CLI "\" " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string example = "\"" GCDIM_EXAMPLE_WORKSPACE "\"";

std::string write_temp(const std::string& name, const json& doc) {
  auto path = std::filesystem::temp_directory_path() / ("gcdim_cli_" + name + ".json");
  std::ofstream(path) << doc.dump(2);
  return "\"" + path.string() + "\"";
}

json dual_numbers_workspace() {
  return json::parse(R"({
    "format": "gcdim-workspace/1",
    "field": "Q",
    "algebra": {"type": "path_algebra", "vertices": 1, "arrows": [{"name": "x", "source": 0, "target": 0}],
                "nilpotency_bound": 2},
    "modules": {"R": {"builtin": "regular"}, "k": {"builtin": "simple", "vertex": 0}},
    "complexes": {"acyclic": {"components": {"0": "R", "1": "R"}, "differentials": {"1": [["1", "0"], ["0", "1"]]}}}
  })");
}

}  // namespace

TEST_CASE("check-semidualizing exit codes") {
  Run ok = run("check-semidualizing " + example + " C2 --ext-bound 1 --output json");
  CHECK(ok.code == 0);
  json j = json::parse(ok.out);
  CHECK(j["status"] == "verified_exact");

  Run bad = run("check-semidualizing " + example + " S1S1 --ext-bound 1");
  CHECK(bad.code == 3);
  CHECK(bad.out.find("refuted") != std::string::npos);

  Run inconclusive = run("check-semidualizing " + write_temp("dn", dual_numbers_workspace()) + " R --ext-bound 2");
  CHECK(inconclusive.code == 4);
}

TEST_CASE("gcdim values in JSON") {
  Run m = run("gcdim " + example + " I2 C1 --output json");
  REQUIRE(m.code == 0);
  json j = json::parse(m.out);
  CHECK(j["value"] == 1);
  CHECK(j["kind"] == "module");

  Run c = run("gcdim " + example + " R2plusR C2 --output json");
  REQUIRE(c.code == 0);
  j = json::parse(c.out);
  CHECK(j["value"] == 2);
  CHECK(j["route_sup_rhom"] == j["route_trunk"]);

  Run table = run("gcdim " + example + " I2 C2");
  CHECK(table.code == 0);
  CHECK(table.out.find("value") != std::string::npos);
}

TEST_CASE("other subcommands") {
  CHECK(run("hom " + example + " P1 P2").code == 0);
  CHECK(run("ext " + example + " I2 P1").code == 0);
  CHECK(run("reflexive " + example + " I2 C2").code == 0);
  CHECK(run("reflexive " + example + " I2 C1").code == 3);
  CHECK(run("dualize " + example + " R C2").code == 0);
  CHECK(run("approx " + example + " I2_in_0 C1").code == 0);

  Run t = run("trunk " + example + " R2plusR --output json");
  REQUIRE(t.code == 0);
  json j = json::parse(t.out);
  CHECK(j["b"] == 1);
  CHECK(j["isomorphic_to"] == json::array({"R"}));
}

TEST_CASE("input errors exit with 2 and a location") {
  Run missing = run("gcdim /nonexistent/ws.json I2 C1");
  CHECK(missing.code == 2);

  Run name = run("gcdim " + example + " nope C1");
  CHECK(name.code == 2);
  CHECK(name.out.find("/modules/nope") != std::string::npos);

  json doc = dual_numbers_workspace();
  doc["modules"]["bad"] = json::parse(R"({"dims": [2], "arrows": {"x": [["1"]]}})");
  Run located = run("hom " + write_temp("bad", doc) + " R R");
  CHECK(located.code == 2);
  CHECK(located.out.find("/modules/bad/arrows/x") != std::string::npos);

  CHECK(run("gcdim " + example + " I2").code == 2);
  CHECK(run("frobnicate " + example).code != 0);
}

TEST_CASE("acyclic complexes and the default bound") {
  const std::string ws = write_temp("dn2", dual_numbers_workspace());
  Run acyclic = run("gcdim " + ws + " acyclic R --output json");
  CHECK(acyclic.code == 1);
  CHECK(json::parse(acyclic.out)["value"] == "-inf");

  Run def = run("gcdim " + example + " I2 C1 --output json");
  Run low = run("gcdim " + example + " I2 C1 --output json", "GCDIM_DEFAULT_BOUND=1");
  REQUIRE(def.code == 0);
  REQUIRE(low.code == 0);
  CHECK(json::parse(def.out)["bound"] == 4);
  CHECK(json::parse(low.out)["bound"] == 1);
  CHECK(json::parse(low.out)["ext_bound"] == 1);
  CHECK(json::parse(run("gcdim " + example + " I2 C1 --bound 3 --output json", "GCDIM_DEFAULT_BOUND=1").out)["bound"] == 3);
  CHECK(run("gcdim " + example + " I2 C1", "GCDIM_DEFAULT_BOUND=zero").code == 2);
}
