#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "ktori/canonical.hpp"
#include "ktori/complex_io.hpp"
#include "ktori/generators.hpp"
#include "ktori/mesh_io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = KTORI_CLI;
const std::string kData = KTORI_TEST_DATA;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / "ktori_cli_test";
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate then analyze") {
  fs::path f = scratch_dir() / "m5.txt";
  CHECK(run("generate minimal3k --k 5 -o " + f.string()).code == 0);
  auto parsed = ktori::read_complex(f.string());
  CHECK(parsed.complex.faces() == ktori::minimal_torus_3k(5).faces());

  Run a = run("analyze " + f.string());
  REQUIRE(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == 1);
  CHECK(j["type"] == "3x5");
  CHECK(j["n"] == 13);
  CHECK(j["m"] == 3);
  CHECK(j["s"] == 5);
  CHECK(j["bound_value"] == 12);
  CHECK(j["bound_satisfied"] == true);
  CHECK(j["layer_report"]["ok"] == true);
  CHECK(j["witnesses"]["s"]["cycle"].size() == 5);

  Run m = run("generate moebius");
  CHECK(m.code == 0);
  std::stringstream ss(m.out);
  CHECK(ktori::canonical_form(ktori::parse_complex(ss).complex) == ktori::canonical_form(ktori::moebius_torus()));
}

TEST_CASE("census output") {
  Run r = run("census --n 7");
  REQUIRE(r.code == 0);
  std::stringstream ss(r.out);
  std::string faces, summary;
  std::getline(ss, faces);
  std::getline(ss, summary);
  CHECK(std::count(faces.begin(), faces.end(), ' ') == 13);
  auto j = nlohmann::json::parse(summary);
  CHECK(j["count"] == 1);
  CHECK(j["by_type"]["3x3"] == 1);

  Run t = run("census --verify-thm31 3");
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["verified"] == true);
}

TEST_CASE("realize writes meshes and certificates") {
  fs::path off = scratch_dir() / "tri.off";
  Run r = run("realize tube --knot " + kData + "/triangle.txt --precision 8 -o " + off.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("embedded: true") != std::string::npos);
  CHECK(r.out.find("determinant: 1") != std::string::npos);
  ktori::Mesh m = ktori::import_off(off.string());
  CHECK(m.coords.size() == 9);
  CHECK(m.complex.num_faces() == 18);

  Run c = run("realize cyclic --k 3 --format obj");
  CHECK(c.code == 0);
  CHECK(c.out.find("\nf ") != std::string::npos);
  CHECK(c.out.find("f 0 ") == std::string::npos);

  Run e = run("realize tube --knot " + kData + "/triangle.txt --eps 10");
  CHECK(e.code == 1);
}

TEST_CASE("identical runs give identical bytes") {
  fs::path a = scratch_dir() / "a.off", b = scratch_dir() / "b.off";
  CHECK(run("realize cyclic --k 4 -o " + a.string()).code == 0);
  CHECK(run("realize cyclic --k 4 --threads 3 -o " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("census --n 8").out == run("census --n 8 --threads 4").out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("generate minimal3k").code == 2);
  CHECK(run("generate sphere").code == 2);
  CHECK(run("census --n 3").code == 2);
  CHECK(run("realize tube").code == 2);
  CHECK(run("analyze /nonexistent/file.txt").code == 2);
  fs::path bad = scratch_dir() / "bad_knot.txt";
  std::ofstream(bad) << "0 0 0\n1 zero 0\n0 1 0\n";
  CHECK(run("knot det --knot " + bad.string()).code == 2);
}

TEST_CASE("knot det") {
  Run r = run("knot det --knot " + kData + "/trefoil6.txt");
  CHECK(r.code == 0);
  CHECK(r.out.find("determinant: 3") != std::string::npos);
  CHECK(r.out.find("gauss:") != std::string::npos);
}
