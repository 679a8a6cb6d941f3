#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cbn/cli.hpp"

using namespace cbn;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli apply", "[cli]") {
  auto r = run({"apply", "--n", "2", "--word", "e1,2", "--on", "x1"});
  CHECK(r.code == 0);
  CHECK(r.out == "x2^-1 x1 x2\n");
  auto s = run({"apply", "--n", "3", "--word", "s1", "--on", "x1 x2", "--format", "json"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["result"] == "x1 x2");
}

TEST_CASE("cli interprets a1..a3 either way on F_2", "[cli]") {
  CHECK(run({"apply", "--n", "2", "--word", "a1", "--on", "x2"}).out == "x1\n");
  CHECK(run({"apply", "--n", "2", "--word", "a1", "--on", "x2", "--interp", "autf2"}).out == "x2 x1^-1\n");
}

TEST_CASE("cli equal", "[cli]") {
  CHECK(run({"equal", "--n", "3", "--word", "s1 s2 s1", "--word2", "s2 s1 s2"}).code == 0);
  auto r = run({"equal", "--n", "3", "--word", "s1", "--word2", "s2"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
}

TEST_CASE("cli conj-form", "[cli]") {
  auto r = run({"conj-form", "--n", "2", "--word", "s1", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["permutation"] == json::array({2, 1}));
  CHECK(j["conjugators"][0] == "x1^-1");
  CHECK(run({"conj-form", "--n", "2", "--word", "U"}).code == 1);
}

TEST_CASE("cli normal-form", "[cli]") {
  auto r = run({"normal-form", "--n", "3", "--word", "e1,2 e3,1", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["components"]["2"] == "e3,2^-1 e3,1 e3,2");
  CHECK(j["components"]["1"] == "e1,2");
  CHECK(j["permutation"] == json::array({1, 2, 3}));
}

TEST_CASE("cli abelianize", "[cli]") {
  CHECK(run({"abelianize", "--n", "3", "--word", "a1 s2^3"}).out == "parity 1, degree 3\n");
  CHECK(run({"abelianize", "--n", "3", "--word", "e1,2 e2,1^-1"}).out == "e1,2:1 e2,1:-1\n");
  CHECK(run({"abelianize", "--n", "3", "--word", "1"}).out == "0\n");
}

TEST_CASE("cli verify", "[cli]") {
  auto r = run({"verify", "--suite", "mccool", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
  auto j = run({"verify", "--suite", "mixed", "--n", "3", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(json::parse(j.out).is_object());
  CHECK(run({"verify", "--suite", "bp2", "--n", "3"}).code == 0);
  CHECK(run({"verify", "--suite", "nope", "--n", "3"}).code == 2);
}

TEST_CASE("cli rep output round trips", "[cli]") {
  auto r = run({"rep", "--name", "lk", "--n", "4", "--word", "s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["rows"] == 6);
  RMat m = rmat_from_json(j["entries"]);
  CHECK(mat_eq(m, mat_scalar(LPoly::t(2) * LPoly::q(8), RMat::identity(6))));
  CHECK(to_json(m).dump() == j["entries"].dump());

  auto b = run({"rep", "--name", "bp2", "--word", "r1", "--format", "json"});
  REQUIRE(b.code == 0);
  auto bj = json::parse(b.out);
  CHECK(mat_eq(zmat_from_json(bj["entries"]), bp2_rep(parse_gword(3, "r1"))));

  auto s = run({"rep", "--name", "sanov", "--word", "r1 pa2"});
  CHECK(s.out == "[5, 2]\n[2, 1]\n");
  auto t = run({"rep", "--name", "bp2", "--table", "--format", "json"});
  CHECK(json::parse(t.out).size() == 6 * 48);
}

TEST_CASE("cli usage errors exit 2", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"apply", "--n", "2", "--word", "e1,2"}).code == 2);
  CHECK(run({"apply", "--n", "2", "--word", "q9", "--on", "x1"}).code == 2);
  CHECK(run({"apply", "--n", "2", "--word", "s1", "--on", "x9"}).code == 2);
  CHECK(run({"rep", "--name", "nope", "--n", "3"}).code == 2);
  CHECK(run({"rep", "--name", "lk", "--word", "s1"}).code == 2);
  CHECK(run({"abelianize", "--n", "3", "--word", "e1,2 s1"}).code == 2);
  auto p = run({"apply", "--n", "2", "--word", "s1 (s1", "--on", "x1"});
  CHECK(p.code == 2);
  CHECK(p.err.find("position 6") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
