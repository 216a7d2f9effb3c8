#include <doctest.h>

#include <sstream>

#include "klein/cli.hpp"
#include "klein/json_io.hpp"

using namespace klein;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kCoverArgs = {
    "cover", "(1;+;[3];{(3)})", "--hom", "x->st,e->ts,a->1,b->1,c1.0->s,c1.1->tst", "--group", "d3",
    "--subgroup", "s"};

}  // namespace

TEST_CASE("doubles table") {
  auto r = run_cli({"doubles", "(2;-;[-];{(-)^3})"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  bool complex_genus_4 = false;
  while (std::getline(lines, line)) {
    if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++rows;
    if (line.find("complex") != std::string::npos && line.find("(4;+;0)") != std::string::npos)
      complex_genus_4 = true;
  }
  CHECK(rows == 3);
  CHECK(complex_genus_4);

  auto j = run_cli({"doubles", "g=2,-,k=3", "--format", "json"});
  CHECK(j.code == 0);
  auto parsed = json::parse(j.out);
  REQUIRE(parsed["doubles"].size() == 3);
  CHECK(parsed["doubles"][0]["label"] == "complex");
  CHECK(parsed["doubles"][0]["genus"] == 4);
}

TEST_CASE("tower of the Möbius band") {
  auto r = run_cli({"tower", "g=1,-,k=1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("DX (1;+;0)") != std::string::npos);
  CHECK(r.out.find("X+ (1;+;0)") != std::string::npos);
  auto j = json::parse(run_cli({"tower", "g=1,-,k=1", "--format", "json"}).out);
  CHECK(j["DX"]["type"] == "(1;+;0)");
  CHECK(j["quotients"]["s"]["label"] == "OX");
  CHECK(j["fix_circle_counts"]["s"] == 2);
  CHECK(j["fix_s_separating"] == true);
}

TEST_CASE("cover command") {
  auto r = run_cli(kCoverArgs);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("(7;-;[-];{(-)})\n", 0) == 0);
  CHECK(r.out.find("euler characteristic: -6") != std::string::npos);
}

TEST_CASE("cover JSON round-trips and agrees with text mode") {
  auto args = kCoverArgs;
  args.insert(args.end(), {"--format", "json"});
  auto r = run_cli(args);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  for (const char* key :
       {"index", "components", "euler_char", "orientable", "boundary", "cone_points", "surface_group", "signature"})
    CHECK(j.contains(key));
  CHECK(to_json(cover_report_from_json(j)) == j);
  CHECK(j["signature"] == "(7;-;[-];{(-)})");
  CHECK(j["index"] == 3);
  CHECK(j["euler_char"] == -6);
  CHECK(j["surface_group"] == true);

  auto text = run_cli(kCoverArgs).out;
  CHECK(text.find("index: " + std::to_string(j["index"].get<int>())) != std::string::npos);
  CHECK(text.find("euler characteristic: " + std::to_string(j["euler_char"].get<int>())) != std::string::npos);
  CHECK(text.find("boundary circles: " + std::to_string(j["boundary"].size())) != std::string::npos);
}

TEST_CASE("disconnected cover lists components") {
  auto r = run_cli({"cover", "(2;+;[-];{(-)})", "--hom", "a1->1,b1->1,a2->1,b2->1,e1->1,c1->1", "--group", "c2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 x (2;+;[-];{(-)})") != std::string::npos);
  auto j = json::parse(
      run_cli({"cover", "(2;+;[-];{(-)})", "--hom", "a1->1,b1->1,a2->1,b2->1,e1->1,c1->1", "--group", "c2",
               "--format", "json"})
          .out);
  CHECK(j["signature"].is_null());
  CHECK(j["components"] == 2);
}

TEST_CASE("parse, epis and moduli") {
  auto p = run_cli({"parse", "(1;-;[-];{(-)})"});
  CHECK(p.code == 0);
  CHECK(p.out.find("eps1 gam1 eps1' alpha1 alpha1*") != std::string::npos);
  auto pj = json::parse(run_cli({"parse", "(1;+;[3];{(3)})", "--format", "json"}).out);
  CHECK(pj["generators"].size() == 6);
  CHECK(pj["orbifold_euler_char"] == "-2");

  auto e = run_cli({"epis", "g=1,-,k=2"});
  CHECK(e.code == 0);
  CHECK(e.out.find(": 7") != std::string::npos);

  auto m = run_cli({"moduli", "--genus", "2"});
  CHECK(m.code == 0);
  CHECK(m.out.find("(1;-;2)") != std::string::npos);
  auto mj = json::parse(run_cli({"moduli", "--genus", "2", "--format", "json"}).out);
  REQUIRE(mj["types"].size() == 3);
  CHECK(mj["types"][0]["psi_image"]["genus"] == 3);
  CHECK(mj["types"][2]["psi_image"].is_null());
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"parse", "(1;+;[3];{(3)}"}).code == 2);
  CHECK(run_cli({"parse", "(0;-;[-];{-})"}).code == 1);
  CHECK(run_cli({"tower", "g=1,+,k=1"}).code == 1);
  auto orientable = run_cli({"tower", "g=1,+,k=1"});
  CHECK(orientable.err.find("non-orientable") != std::string::npos);
  CHECK(run_cli({"epis", "g=2,-,k=0"}).code == 1);
  CHECK(run_cli({"moduli", "--genus", "0"}).code == 1);
  CHECK(run_cli({"cover", "(1;-;[-];{(-)})", "--hom", "d1->t,e1->t,c1->1", "--group", "c2"}).code == 1);
  CHECK(run_cli({"cover", "(1;-;[-];{(-)})", "--hom", "d1 t", "--group", "c2"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"doubles", "(1;-;[-];{-})", "--format", "xml"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"verify-paper", "--grid", "3"}).code == 2);
}

TEST_CASE("reference replay") {
  auto r = run_cli({"verify-paper", "--grid", "3,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  auto j = json::parse(run_cli({"verify-paper", "--grid", "3,3", "--format", "json"}).out);
  CHECK(j["passed"] == true);
  CHECK(run_cli({"verify-paper", "--grid", "3,3"}).out == r.out);
}
