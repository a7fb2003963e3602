#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "zipk/job.hpp"
#include "zipk/report.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ZIPK_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "zipk_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

nlohmann::json json_of(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run("validate --group SL3").code == 0);
  const auto pgl = run("validate --group PGL2");
  CHECK(pgl.code == 3);
  CHECK(pgl.out.find("pi_1 = Z/2") != std::string::npos);
  CHECK(run("validate --group SL3 --mu 1,2,3").code == 2);
  CHECK(run("validate --group SL3 --mu 1,x").code == 2);
  CHECK(run("validate --group E9").code == 2);
  CHECK(run("validate --group SL3 --p 6").code == 3);
  CHECK(run("validate --group SL3 --twist '2,0;0,1'").code == 3);
  CHECK(run("k0 --group SL3 --checks bogus").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("k0 reports") {
  auto r = run("k0 --group SL2 --mu 1 --p 3");
  REQUIRE(r.code == 0);
  auto j = json_of(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["module"]["rank"] == 6);
  CHECK(j["module"]["torsion"].empty());
  CHECK(j["module"]["finite"] == true);
  CHECK(j["checks"]["kunneth"]["status"] == "PASS");
  for (const char* key : {"levi", "presentation", "groebner", "module", "checks"}) CHECK(j.contains(key));

  r = run("k0-torus --group Gm --p 5");
  REQUIRE(r.code == 0);
  CHECK(json_of(r.out)["module"]["rank"] == 4);

  r = run("k0 --group SL3 --mu 1,2 --p 2 --checks kunneth");
  REQUIRE(r.code == 0);
  j = json_of(r.out);
  CHECK(j["levi"]["weyl_order"] == 2);
  CHECK(j["checks"]["kunneth"]["status"] == "PASS");
  CHECK(j["checks"]["kunneth"]["torus_rank"] == 24);
  CHECK(j["checks"]["kunneth"]["levi_rank"] == 12);
}

TEST_CASE("resource caps give exit 4 with a partial report") {
  const auto r = run("k0 --group SL2 --mu 1 --p 5 --max-degree 3");
  CHECK(r.code == 4);
  const auto body = r.out.substr(0, r.out.rfind('}') + 1);
  const auto j = json_of(body);
  CHECK(j["truncated"] == true);
  CHECK(j["error"]["kind"] == "resource");
  CHECK(j.contains("group"));
}

TEST_CASE("counterexample demo") {
  auto r = run("demo-counterexample --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("invariants Z/2 + Z/2 strictly contain image Z/2") != std::string::npos);
  for (const char* m : {"Z", "Z/3"}) {
    r = run(std::string("demo-counterexample --module ") + m);
    CHECK(r.code == 0);
    CHECK(json_of(r.out)["counterexample"]["verdict"] == "no excess invariants");
  }
  CHECK(run("demo-counterexample --module Q").code == 2);
}

TEST_CASE("hecke-check") {
  const auto r = run("hecke-check --group SL2 --window 6");
  REQUIRE(r.code == 0);
  const auto j = json_of(r.out);
  CHECK(j["hecke"]["status"] == "PASS");
  CHECK(j["hecke"]["weyl_invariants"]["rank"] == 7);
}

TEST_CASE("job files, overrides, determinism and text round trip") {
  const auto toml = scratch("job.toml");
  const auto json = scratch("job.json");
  write(toml, "group = \"SL3\"\ncocharacter = [1, 2]\np = 2\nchecks = [\"kunneth\", \"theta\"]\n");
  write(json, R"({"group": "SL3", "cocharacter": [1, 2], "p": 2, "checks": ["kunneth", "theta"]})");
  const auto a = run("k0 " + toml.string());
  const auto b = run("k0 " + json.string());
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("k0 " + json.string()).out == b.out);

  // flags win over the file
  const auto c = run("k0 " + json.string() + " --p 3");
  REQUIRE(c.code == 0);
  CHECK(json_of(c.out)["datum"]["p"] == 3);

  const auto report = scratch("report.json");
  REQUIRE(run("k0 " + toml.string() + " --out " + report.string()).code == 0);
  CHECK(slurp(report) == a.out);
  const auto text = run("k0 " + toml.string() + " --format text");
  const auto rendered = run("render " + report.string());
  CHECK(text.out == rendered.out);
  CHECK(text.out.find("weyl_order: 2") != std::string::npos);

  write(json, R"({"group": "SL3", "cocharacter": [1, 2, 3]})");
  CHECK(run("k0 " + json.string()).code == 2);
  write(json, R"({"group": "SL3", "cocharacter": [1, 2)");
  CHECK(run("k0 " + json.string()).code == 2);
  write(toml, "group = \"SL3\"\nwindow = -1\n");
  CHECK(run("hecke-check " + toml.string()).code == 2);
}

TEST_CASE("explicit group data") {
  const auto json = scratch("sl2.json");
  write(json, R"({"group": {"name": "sl2", "rank": 1, "roots": [[2], [-2]], "coroots": [[1], [-1]],
                  "simple_roots": [0]}, "cocharacter": [1], "p": 3})");
  const auto r = run("k0 " + json.string());
  REQUIRE(r.code == 0);
  CHECK(json_of(r.out)["module"]["rank"] == 6);
  write(json, R"({"group": {"rank": 1, "roots": [[1], [-1]], "coroots": [[2], [-2]], "simple_roots": [0]}})");
  CHECK(run("validate " + json.string()).code == 3);
  write(json, R"({"group": {"rank": 1, "roots": [[1, 0]], "coroots": [[2]], "simple_roots": [0]}})");
  CHECK(run("validate " + json.string()).code == 2);
}

TEST_CASE("in-process job parsing") {
  using namespace zipk;
  CHECK(parse_int_list(" 1, -2 ,3") == std::vector<std::int64_t>{1, -2, 3});
  CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
  CHECK(parse_int_matrix("0,1;1,0") == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
  CHECK(parse_module("Z") == 0);
  CHECK(parse_module("Z/6") == 6);
  CHECK(parse_checks("all") == kCheckNames);
  const auto j = toml_to_json("group = \"GL2\"\ncocharacter = [1, 0]\n[extra]\nx = 1\n");
  CHECK(j["group"] == "GL2");
  JobSpec job;
  CHECK_THROWS_AS(apply_job_json(job, j), ParseError);  // unknown key
  CHECK_THROWS_AS(toml_to_json("group = "), ParseError);
}
