#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holant/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "holant");
  std::ostringstream out, err;
  const int code = holant::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = HOLANT_TEST_DATA;

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("cli evaluation") {
  auto r = run({"eval", kData + "/grids/triangle.grid"});
  CHECK(r.code == 0);
  CHECK(r.out == "holant: 2\n");
  CHECK(run({"eval", kData + "/grids/k4-matching.grid"}).out == "holant: 3\n");
  r = run({"--max-edges", "3", "eval", kData + "/grids/k4-matching.grid"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("error: ", 0) == 0);
  r = run({"eval", kData + "/grids/missing.grid"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("cli gadget") {
  const auto r = run({"gadget", kData + "/grids/tetrahedron.grid"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "arity: 4\n"));
  CHECK(contains(r.out, "matrix: "));
}

TEST_CASE("cli classification") {
  auto r = run({"classify", "sig", "[1,1,0]", "--framework", "plcsp-hat"});
  CHECK(r.code == 10);
  CHECK(r.out.rfind("HARD single\n", 0) == 0);
  CHECK(contains(r.out, "witness: [1,1,0]\n"));
  r = run({"classify", "sig", "[1,0,0,0,1]", "--framework", "plholant4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("TRACTABLE P-transformable\n", 0) == 0);
  r = run({"classify", "sig", "[1,1,0]", "--framework", "degree-prescribed", "--arities", "4"});
  CHECK(r.code == 10);
  CHECK(run({"classify", "sig", "[1,2,4]", "--framework", "binary-gh"}).code == 0);
  r = run({"classify", "set", kData + "/sets/mixing.sigs", "--framework", "plcsp"});
  CHECK(r.code == 10);
  CHECK(r.out.rfind("HARD mixing\n", 0) == 0);
  CHECK(run({"classify", "sig", "[1,1,0]", "--framework", "nonsense"}).code == 1);
  CHECK(run({"classify", "sig", "[1,1", "--framework", "plcsp"}).code == 1);
}

TEST_CASE("cli membership and transforms") {
  auto r = run({"membership", "sig", "[1,0,-1]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "A: yes"));
  CHECK(contains(r.out, "M: yes"));
  CHECK(contains(r.out, "P-hat: yes"));
  r = run({"transform", "[1,0,1]", "--matrix", "H"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,0,2]\n");
  CHECK(run({"transform", "[1,0,1]", "--matrix", "[1,2;2,4]"}).code == 1);
}

TEST_CASE("cli interpolation check") {
  auto r = run({"interpolate", "check", "--matrix", "[1,2;1,0]", "--start", "[1,1]"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASSES\n", 0) == 0);
  CHECK(contains(r.out, "krylov-det: -2\n"));
  r = run({"interpolate", "check", "--matrix", "[1,0;0,1]", "--start", "[1,1]"});
  CHECK(r.out.rfind("FAILS\n", 0) == 0);
  CHECK(contains(r.out, "finite-order: 1\n"));
}

TEST_CASE("cli planar commands") {
  CHECK(run({"tutte", kData + "/graphs/k4.graph", "--x", "3", "--y", "3"}).out ==
        "tutte: x^3 + 3x^2 + 4xy + 2x + y^3 + 3y^2 + 2y\nvalue: 156\n");
  auto r = run({"verify", "las-vergnas", kData + "/graphs/k4.graph"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS las-vergnas\n", 0) == 0);
  CHECK(run({"eo", kData + "/graphs/digon.graph"}).out == "orientations: 2\n");
  r = run({"pairing", kData + "/graphs/dumbbell.graph"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "pair u w\n"));
  r = run({"medial", kData + "/graphs/triangle.graph"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rotation"));
  CHECK(run({"--max-tutte-edges", "3", "tutte", kData + "/graphs/k4.graph"}).code == 2);
}

TEST_CASE("cli catalog verification") {
  auto r = run({"verify", "catalog"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS domain-pairing"));
  CHECK(contains(r.out, "summary: 16/16 passed\n"));

  std::ifstream in(kData + "/catalog.txt");
  std::stringstream text;
  text << in.rdbuf();
  std::string body = text.str();
  const std::string good = "expect-exact gate == [x, y, y]";
  body.replace(body.find(good), good.size(), "expect-exact gate == [x, y, 2*y]");
  const auto path = std::filesystem::temp_directory_path() / "holant-broken-catalog.txt";
  std::ofstream(path) << body;
  r = run({"verify", "catalog", path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == 3);
  CHECK(contains(r.out, "FAIL domain-pairing"));
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"eval"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
