#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "shellseq/document.hpp"
#include "shellseq/generators.hpp"

#ifndef SHELLSEQ_CLI
#error "SHELLSEQ_CLI must point at the command line binary"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace shellseq;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const fs::path& workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "shellseq_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const auto out_path = workdir() / "stdout.txt";
  const std::string cmd =
      std::string(SHELLSEQ_CLI) + " " + args + " > " + out_path.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  return r;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto p = workdir() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("examples emit parseable documents that round trip") {
  const auto r = run("examples boundary-delta --n 1");
  REQUIRE(r.exit_code == 0);
  const auto t = realize(parse_tiling_document(r.out));
  CHECK(t.tiles == simplex_boundary_shelling(1).tiling.tiles);

  const auto path = workdir() / "triangle.json";
  CHECK(run("examples triangle-cycle --out " + path.string()).exit_code == 0);
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  CHECK(realize(parse_tiling_document(os.str())).tiles ==
        cyclic_triangle_tiling().tiles);

  CHECK(run("examples no-such-example").exit_code == 4);
}

TEST_CASE("validate distinguishes good, bad, and broken input") {
  run("examples boundary-delta --n 2 --out " + (workdir() / "s2.json").string());
  const auto ok = run("validate " + (workdir() / "s2.json").string());
  CHECK(ok.exit_code == 0);
  CHECK(json::parse(ok.out)["valid"] == true);

  const auto garbage = write_file("garbage.json", "{{{");
  CHECK(run("validate " + garbage.string()).exit_code == 3);
  CHECK(run("validate " + (workdir() / "missing.json").string()).exit_code == 3);

  const auto overlap = write_file("overlap.json", R"({
    "format_version": "1",
    "vertices": [0, 1, 2],
    "tiles": [
      {"simplex": [0, 1, 2], "removed_opposite": []},
      {"simplex": [0, 1], "removed_opposite": []}
    ]
  })");
  const auto bad = run("validate " + overlap.string());
  CHECK(bad.exit_code == 2);
  CHECK(json::parse(bad.out)["valid"] == false);
}

TEST_CASE("quiver writes deterministic DOT") {
  const auto path = workdir() / "triangle.json";
  run("examples triangle-cycle --out " + path.string());
  const auto dot = run("quiver " + path.string() + " --dot -");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out ==
        "digraph quiver {\n"
        "  t0 [label=\"t0 (k=1)\"];\n"
        "  t1 [label=\"t1 (k=1)\"];\n"
        "  t2 [label=\"t2 (k=1)\"];\n"
        "  t0 -> t1 [label=\"0\"];\n"
        "  t1 -> t2 [label=\"0\"];\n"
        "  t2 -> t0 [label=\"0\"];\n"
        "}\n");

  const auto report = run("quiver " + path.string());
  REQUIRE(report.exit_code == 0);
  const auto parsed = json::parse(report.out);
  CHECK(parsed["vertices"] == 3);
  CHECK(parsed["arrows"].size() == 3);
  CHECK(parsed["dot"].get<std::string>() == dot.out);
}

TEST_CASE("shell reports orders and certificates") {
  const auto sphere = workdir() / "s2.json";
  run("examples boundary-delta --n 2 --out " + sphere.string());
  const auto good = run("shell " + sphere.string());
  REQUIRE(good.exit_code == 0);
  CHECK(json::parse(good.out)["order"] == json::array({0, 1, 2, 3}));

  const auto triangle = workdir() / "triangle.json";
  run("examples triangle-cycle --out " + triangle.string());
  const auto blocked = run("shell " + triangle.string());
  CHECK(blocked.exit_code == 1);
  CHECK(json::parse(blocked.out)["certificate"].size() == 3);

  const auto partial = run("shell " + sphere.string() + " --order 1");
  REQUIRE(partial.exit_code == 0);
  CHECK(json::parse(partial.out)["order"] == json::array({0, 1, 2}));
}

TEST_CASE("spectral verdicts and coefficient choices") {
  const auto sphere = workdir() / "s2.json";
  run("examples boundary-delta --n 2 --out " + sphere.string());

  const auto rat = run("spectral " + sphere.string());
  REQUIRE(rat.exit_code == 0);
  const auto parsed = json::parse(rat.out);
  CHECK(parsed["match"] == true);
  CHECK(parsed["homology"]["limit"]["match"] == true);
  CHECK(parsed["cohomology"]["limit"]["match"] == true);

  CHECK(run("spectral " + sphere.string() + " --coeff mod:5").exit_code == 0);
  CHECK(run("spectral " + sphere.string() + " --coeff mod:6").exit_code == 4);
  CHECK(run("spectral " + sphere.string() + " --pages nonsense").exit_code == 4);

  const auto text = run("spectral " + sphere.string() + " --format text");
  REQUIRE(text.exit_code == 0);
  CHECK(text.out.find("overall: MATCH") != std::string::npos);

  const auto triangle = workdir() / "triangle.json";
  run("examples triangle-cycle --out " + triangle.string());
  CHECK(run("spectral " + triangle.string()).exit_code == 1);

  const auto fixed = run("spectral " + sphere.string() + " --pages 1");
  const auto fixed_json = json::parse(fixed.out);
  CHECK(fixed_json["homology"]["pages"].size() == 2);  // pages 0 and 1
}

TEST_CASE("homology tables for the complex and the tiled cells") {
  const auto oct = workdir() / "oct.json";
  run("examples octahedron-search --out " + oct.string());
  const auto r = run("homology " + oct.string());
  REQUIRE(r.exit_code == 0);
  const auto parsed = json::parse(r.out);
  CHECK(parsed["coefficients"] == "Z");
  const auto& groups = parsed["complex"]["homology"];
  REQUIRE(groups.size() == 3);
  CHECK(groups[0]["pretty"] == "Z");
  CHECK(groups[1]["pretty"] == "0");
  CHECK(groups[2]["pretty"] == "Z");
  CHECK(parsed["tiled_closure"]["homology"] == parsed["complex"]["homology"]);

  CHECK(run("homology " + oct.string() + " --coeff mod:2").exit_code == 0);
  CHECK(run("homology " + oct.string() + " --coeff bogus").exit_code == 4);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 4);
  CHECK(run("frobnicate x").exit_code == 4);
  CHECK(run("validate").exit_code == 4);  // missing path
  CHECK(run("--help").exit_code == 0);
}
