#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(POLYNORM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output)};
}

std::filesystem::path work_dir() {
  static auto dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("polynorm_cli_test_" + std::to_string(getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string gen_fixture(const std::string& name, const std::string& file) {
  std::string path = (work_dir() / file).string();
  auto r = run("gen " + name + " --out " + path);
  REQUIRE(r.exit_code == 0);
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check-gl verdicts and exit codes") {
  auto hex = gen_fixture("hex_tilde", "hex_tilde.poly");
  auto r = run("check-gl " + hex);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "GL: yes; 6/6 facets plump"));

  auto h34 = gen_fixture("hex_lambda:3/4", "h34.poly");
  auto bad = run("check-gl " + h34);
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "GL: no"));
  CHECK(contains(bad.output, "vertex (1, 0): dist 1 != 2/3"));
}

TEST_CASE("check-gl output is byte-identical across runs") {
  auto hex = gen_fixture("hex_tilde", "hex_det.poly");
  auto a = run("check-gl " + hex);
  auto b = run("--parallel check-gl " + hex);
  CHECK(a.output == b.output);
}

TEST_CASE("classify-2d") {
  auto sq = gen_fixture("square", "square.poly");
  auto r = run("classify-2d " + sq);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "parallelogram"));

  auto oct = gen_fixture("oct_rational", "oct.poly");
  auto n = run("classify-2d " + oct);
  CHECK(n.exit_code == 1);
  CHECK(contains(n.output, "not GL"));
}

TEST_CASE("check-glm and check-glr") {
  auto sq = gen_fixture("square", "square_glm.poly");
  CHECK(run("check-glm " + sq).exit_code == 0);
  CHECK(run("check-glr " + sq).exit_code == 0);

  auto hex = gen_fixture("hex_tilde", "hex_glr.poly");
  auto r = run("check-glr " + hex);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "extreme dual point (1, 1/2) has coordinate outside {0,1}"));

  // non-absolute input is a usage error, not a verdict
  auto h1 = gen_fixture("hex_lambda:1", "h1.poly");
  CHECK(run("check-glm " + h1).exit_code == 2);
}

TEST_CASE("json and text reports carry the same verdict") {
  auto h34 = gen_fixture("hex_lambda:3/4", "h34_json.poly");
  auto text = run("check-gl " + h34);
  auto js = run("--format json check-gl " + h34);
  CHECK(text.exit_code == 1);
  CHECK(js.exit_code == 1);
  CHECK(contains(js.output, "\"gl\": false"));
  CHECK(contains(js.output, "\"dist\": \"1\""));
  CHECK(contains(js.output, "\"bound\": \"2/3\""));
}

TEST_CASE("build-sum writes a ball the other commands accept") {
  auto sq = gen_fixture("square", "outer.poly");
  auto hex = gen_fixture("hex_tilde", "comp.poly");
  std::string out = (work_dir() / "sum.poly").string();
  auto r = run("build-sum " + sq + " " + hex + " " + hex + " --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "sum dim 4: 36 vertices, 12 facets"));
  auto gl = run("check-gl " + out);
  CHECK(gl.exit_code == 0);
}

TEST_CASE("audit") {
  auto hex = gen_fixture("hex_tilde", "hex_audit.poly");
  auto r = run("audit " + hex);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "audit: pass"));
}

TEST_CASE("gen round trip and seeded determinism") {
  std::string a = (work_dir() / "rand_a.poly").string();
  std::string b = (work_dir() / "rand_b.poly").string();
  CHECK(run("--seed 5 gen polygon --pairs 4 --out " + a).exit_code == 0);
  CHECK(run("--seed 5 gen polygon --pairs 4 --out " + b).exit_code == 0);
  std::ifstream fa(a), fb(b);
  std::string ta((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
  std::string tb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
  CHECK(ta == tb);
  // a random octagon is never GL
  CHECK(run("classify-2d " + a).exit_code == 1);
}

TEST_CASE("distance") {
  auto h34 = gen_fixture("hex_lambda:3/4", "h34_dist.poly");
  auto r = run("distance " + h34 + " --point 1,0 --facet 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "dist"));
  CHECK(run("distance " + h34 + " --point 1,0 --facet 99").exit_code == 2);
  CHECK(run("distance " + h34 + " --point 1,0,0 --facet 0").exit_code == 2);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run("check-gl " + (work_dir() / "missing.poly").string()).exit_code == 2);
  std::string garbled = (work_dir() / "garbled.poly").string();
  std::ofstream(garbled) << "polytope\ndim 2\nvrep\n1 oops\nend\n";
  auto r = run("check-gl " + garbled);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "line"));
  CHECK(run("gen nonsuch_fixture").exit_code == 2);
  CHECK(run("frobnicate").exit_code != 0);
}
