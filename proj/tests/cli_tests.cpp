// Exercises the installed binary end to end: exit codes, file round
// trips, and the report format.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "daggerlab/fixtures.hpp"
#include "daggerlab/serialize.hpp"

namespace {

namespace fs = std::filesystem;

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("daggerlab_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name) const {
    return (dir / name).string();
  }
};

int run(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = std::string(DAGGERLAB_BIN) + " " + args;
  if (!stdout_file.empty()) cmd += " > " + stdout_file;
  cmd += " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("generate then check a Rel group fixture exits 0") {
  Scratch scratch;
  const std::string path = scratch.file("z2_rel.json");
  REQUIRE(run("generate group=z2 backend=rel --out " + path) == 0);
  const std::string report = scratch.file("report.json");
  CHECK(run("check " + path, report) == 0);
  const daggerlab::json j = daggerlab::parse_json(slurp(report));
  CHECK(j["overall_pass"] == true);
  CHECK(j["eps"] == 1e-9);
}

TEST_CASE("check exits 1 on a law failure and names the law") {
  Scratch scratch;
  // an oblique complete idempotent system: EM passes, FEM fails
  daggerlab::Rng rng(17);
  const daggerlab::EMAlgebra alg =
      daggerlab::idempotent_system_algebra(rng, 4, 2, false);
  const std::string path = scratch.file("oblique_em.json");
  {
    std::ofstream out(path);
    out << daggerlab::em_algebra_to_json(alg).dump(2);
  }
  const std::string report = scratch.file("report.json");
  CHECK(run("check " + path, report) == 1);
  const daggerlab::json j = daggerlab::parse_json(slurp(report));
  bool fem_named = false;
  for (const auto& law : j["laws"]) {
    if (law["law"] == "fem" && law["pass"] == false) fem_named = true;
  }
  CHECK(fem_named);
}

TEST_CASE("malformed and invalid input exit 2") {
  Scratch scratch;
  const std::string path = scratch.file("broken.json");
  {
    std::ofstream out(path);
    out << "{\"kind\": ";
  }
  CHECK(run("check " + path) == 2);
  {
    std::ofstream out(path);
    out << "{\"kind\": \"widget\"}";
  }
  CHECK(run("check " + path) == 2);
  CHECK(run("generate nonsense --out " + scratch.file("x.json")) == 2);
}

TEST_CASE("generate pants and pvm fixtures that pass their suites") {
  Scratch scratch;
  const std::string pants = scratch.file("pants2.json");
  REQUIRE(run("generate pants n=2 --out " + pants) == 0);
  CHECK(run("check " + pants) == 0);

  const std::string pvm = scratch.file("pvm.json");
  REQUIRE(run("generate pvm m=3 k=2 --seed 7 --out " + pvm) == 0);
  CHECK(run("check " + pvm) == 0);

  const std::string groupoid = scratch.file("s3d2.json");
  REQUIRE(run("generate groupoid name=s3+discrete2 --out " + groupoid) == 0);
  CHECK(run("check " + groupoid) == 0);

  const std::string kleisli = scratch.file("kl.json");
  REQUIRE(run("generate kleisli group=z3 backend=fhilb dom=2 cod=2 --seed 3 "
              "--out " +
              kleisli) == 0);
  CHECK(run("check " + kleisli) == 0);
}

TEST_CASE("generate is deterministic for a fixed seed") {
  Scratch scratch;
  const std::string a = scratch.file("a.json");
  const std::string b = scratch.file("b.json");
  REQUIRE(run("generate pvm m=4 k=2 --seed 11 --out " + a) == 0);
  REQUIRE(run("generate pvm m=4 k=2 --seed 11 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  const std::string c = scratch.file("c.json");
  REQUIRE(run("generate pvm m=4 k=2 --seed 12 --out " + c) == 0);
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("DAGGERLAB_EPS provides the default tolerance") {
  Scratch scratch;
  const std::string path = scratch.file("z2.json");
  REQUIRE(run("generate group=z2 backend=fhilb --out " + path) == 0);
  const std::string report = scratch.file("report.json");
  const std::string cmd = std::string("DAGGERLAB_EPS=1e-6 ") + DAGGERLAB_BIN +
                          " check " + path + " > " + report + " 2> /dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  const daggerlab::json j = daggerlab::parse_json(slurp(report));
  CHECK(j["eps"] == 1e-6);
}
