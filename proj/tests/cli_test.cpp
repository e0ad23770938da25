#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "syzkit/catalog.hpp"
#include "syzkit/io_json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path base = fs::temp_directory_path() /
                  ("syzkit_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  fs::path out = base.string() + ".out";
  fs::path err = base.string() + ".err";
  std::string cmd =
      std::string(SYZKIT_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

}  // namespace

TEST_CASE("consistency checks succeed on built-ins") {
  RunResult r = run_cli("monodromy res-e1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"consistent\": true") != std::string::npos);
  CHECK(r.err.empty());

  RunResult d = run_cli("monodromy sextic-double");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("\"consistent\": true") != std::string::npos);
}

TEST_CASE("unknown sources are input errors on stderr") {
  RunResult r = run_cli("monodromy nope");
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("\"kind\": \"not-found\"") != std::string::npos);
  CHECK(r.err.find("\"error\"") != std::string::npos);
}

TEST_CASE("bad flags are input errors") {
  RunResult r = run_cli("census k3-double --format yaml");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("\"error\"") != std::string::npos);

  RunResult none = run_cli("");
  CHECK(none.exit_code == 2);

  RunResult json_render = run_cli("superpotential toric-cp2 --format svg");
  CHECK(json_render.exit_code == 2);
  CHECK(json_render.err.find("\"kind\": \"input\"") != std::string::npos);
}

TEST_CASE("superpotential prints the display form") {
  RunResult r = run_cli("superpotential toric-cp2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("q^5*x^-1*y^-1 + y + x") != std::string::npos);
}

TEST_CASE("critical respects the tolerance gate") {
  RunResult ok = run_cli("critical cp1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"points\"") != std::string::npos);

  RunResult strict = run_cli("critical cp1 --tolerance 1e-20");
  CHECK(strict.exit_code == 1);
}

TEST_CASE("gluing verification passes the built-in scenario") {
  RunResult r = run_cli("verify-gluing blowup-wall --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
  CHECK(r.out.find("\"checks\"") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* cmd : {"census sextic-double", "trace cp1", "walls blowup-wall",
                          "localmodel", "render k3-double"}) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("--out writes the artifact and prints its path") {
  fs::path dir = fs::temp_directory_path() / ("syzkit_out_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  RunResult r = run_cli("census k3-double --out " + dir.string());
  CHECK(r.exit_code == 0);
  fs::path expected = dir / "census-k3-double.json";
  CHECK(r.out.find(expected.string()) != std::string::npos);
  REQUIRE(fs::exists(expected));

  RunResult direct = run_cli("census k3-double");
  CHECK(slurp(expected) == direct.out);
  fs::remove_all(dir);
}

TEST_CASE("render emits svg by default") {
  RunResult r = run_cli("render blowup-wall");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 4) == "<svg");
  CHECK(r.out.find("class=\"wall\"") != std::string::npos);

  RunResult j = run_cli("render res-e1 --format json");
  CHECK(j.exit_code == 2);
}

TEST_CASE("sources resolve to files when no catalog entry matches") {
  fs::path file = fs::temp_directory_path() /
                  ("syzkit_base_" + std::to_string(::getpid()) + ".json");
  std::ofstream(file) << syz::base_to_json(syz::catalog_base("cp2-cubic"));

  RunResult r = run_cli("monodromy " + file.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"consistent\": true") != std::string::npos);

  std::ofstream(file) << "{broken";
  RunResult bad = run_cli("monodromy " + file.string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("\"kind\": \"input\"") != std::string::npos);
  fs::remove(file);
}

TEST_CASE("doubling via the cli names the doubled artifact") {
  RunResult r = run_cli("double res-e1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"kind\": \"doubled-base\"") != std::string::npos);
}
