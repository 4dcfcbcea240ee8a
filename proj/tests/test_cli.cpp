// SPDX-License-Identifier: MIT
//
// End-to-end tests of the legaug binary (spawned as a subprocess) and of the
// raw-DGA JSON serialization used by it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "legaug/json_io.hpp"
#include "legaug/plat.hpp"

using namespace legaug;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(LEGAUG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_file(const std::string& name) {
  return std::string(LEGAUG_DATA_DIR) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("augs lists the five trefoil augmentations") {
  RunResult r = run_cli("augs " + data_file("trefoil.plat") + " --field Fp:2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "5 augmentations over Fp:2"));
  CHECK(contains(r.out, "1: a1=0 a2=0 a3=1"));
  CHECK(contains(r.out, "5: a1=1 a2=1 a3=1"));
}

TEST_CASE("cohomology ranks match the published tables") {
  RunResult unknot = run_cli("cohomology " + data_file("unknot.plat") +
                             " --pair 1,1 --direction minus");
  CHECK(unknot.exit_code == 0);
  CHECK(unknot.out == "H^2 = 1\n");

  RunResult plus = run_cli("cohomology " + data_file("trefoil.plat") +
                           " --pair 1,1 --direction plus --field Fp:2");
  CHECK(plus.exit_code == 0);
  CHECK(contains(plus.out, "H^0 = 1"));
  CHECK(contains(plus.out, "H^1 = 2"));

  RunResult json = run_cli("cohomology " + data_file("trefoil.plat") +
                           " --pair 1,1 --direction minus --json");
  CHECK(json.exit_code == 0);
  CHECK(contains(json.out, "\"1\": 2"));
  CHECK(contains(json.out, "\"2\": 1"));
}

TEST_CASE("verify all passes on the bundled examples") {
  RunResult r =
      run_cli("verify all " + data_file("trefoil.plat") + " --field Fp:2");
  CHECK(r.exit_code == 0);
  for (const char* suite :
       {"ainfty", "unit", "duality", "les", "cosheaf", "leverson", "tb"})
    CHECK(contains(r.out, std::string("ok: ") + suite));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("mtable prints the unknot product table") {
  RunResult r = run_cli("mtable " + data_file("unknot.plat") +
                        " --k 2 --field Fp:3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "m2(x1+, x1+) = c1+"));
  CHECK(contains(r.out, "m2(y1+, y1+) = 2 y1+"));
  CHECK(contains(r.out, "6 nonzero products"));
}

TEST_CASE("iso decision") {
  RunResult same = run_cli("iso " + data_file("trefoil.plat") + " --pair 1,1");
  CHECK(same.exit_code == 0);
  CHECK(contains(same.out, "isomorphic: yes"));
  RunResult diff = run_cli("iso " + data_file("trefoil.plat") + " --pair 1,2");
  CHECK(diff.exit_code == 0);
  CHECK(contains(diff.out, "isomorphic: no"));
}

TEST_CASE("slice-check runs and reports") {
  RunResult r = run_cli("slice-check --n 4 --mu 1,0,0,-1 --trials 5 --field 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "ok: slice-check"));
}

TEST_CASE("exit codes") {
  CHECK(run_cli("augs /nonexistent.plat").exit_code == 1);
  CHECK(run_cli("cohomology " + data_file("unknot.plat") + " --pair 9,9")
            .exit_code == 1);
  CHECK(run_cli("augs").exit_code != 0);  // missing input
}

TEST_CASE("byte-identical output across runs") {
  std::string cmd = "augs " + data_file("trefoil.plat") + " --field Fp:2 --json";
  RunResult a = run_cli(cmd), b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  std::string dga_cmd = "dga " + data_file("trefoil.plat");
  CHECK(run_cli(dga_cmd).out == run_cli(dga_cmd).out);
}

TEST_CASE("raw-DGA JSON round-trips through the binary") {
  std::string json_path = "/tmp/legaug_cli_trefoil.json";
  RunResult emit = run_cli("dga " + data_file("trefoil.plat"));
  CHECK(emit.exit_code == 0);
  {
    std::ofstream out(json_path);
    out << emit.out;
  }
  RunResult augs = run_cli("augs " + json_path + " --field Fp:2");
  CHECK(augs.exit_code == 0);
  CHECK(contains(augs.out, "5 augmentations over Fp:2"));
  // Re-serializing the parsed JSON is the identity.
  CHECK(dga_to_json(dga_from_json(emit.out)) == emit.out);
  std::remove(json_path.c_str());
}

TEST_CASE("every bundled example file round-trips parse -> serialize -> parse") {
  for (const char* name : {"unknot.plat", "trefoil.plat"}) {
    std::string text = slurp(data_file(name));
    PlatDiagram d = parse_plat(text);
    std::string printed = plat_str(d);
    PlatDiagram d2 = parse_plat(printed);
    CHECK(d.n == d2.n);
    CHECK(d.crossings == d2.crossings);
    CHECK(plat_str(d2) == printed);
  }
}

TEST_CASE("json serialization of the fixtures") {
  for (Ring ring : {Ring::integers(), Ring::fp(3)}) {
    for (const Dga& dga :
         {fixtures::unknot_dga(ring), fixtures::trefoil_raw_dga(ring)}) {
      std::string text = dga_to_json(dga);
      Dga back = dga_from_json(text);
      CHECK(dga_to_json(back) == text);
      CHECK(back.ring() == dga.ring());
      CHECK(back.generators().size() == dga.generators().size());
      for (const GenInfo& g : dga.generators()) {
        NcPoly a = dga.differential(g.name);
        NcPoly b = back.differential(g.name);
        CHECK(a.str() == b.str());
      }
    }
  }
  CHECK_THROWS_AS(dga_from_json("not json"), Error);
  CHECK_THROWS_AS(dga_from_json("{}"), Error);
  CHECK_THROWS_AS(
      dga_from_json("{\"ring\":\"Q\",\"generators\":[],\"differential\":{}}"),
      Error);
}
