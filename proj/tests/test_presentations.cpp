#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cbn/normalform.hpp"
#include "cbn/presentations.hpp"
#include "cbn/realize.hpp"

using namespace cbn;
using namespace cbn::catalog;

namespace {

std::size_t parse_error_pos(int n, std::string const& s) {
  try {
    parse_gword(n, s);
  } catch (ParseError const& e) {
    return e.position;
  }
  return std::string::npos;
}

bool only(GWord const& w, std::initializer_list<Family> fs) {
  for (auto const& s : w.syllables())
    if (std::find(fs.begin(), fs.end(), s.sym.family) == fs.end()) return false;
  return true;
}

GWord four_gen_expand_if_needed(GWord const& w) { return has_bare_symbols(w) ? four_gen_expand(w) : w; }

}  // namespace

TEST_CASE("generator words parse and print", "[gword]") {
  GWord w = parse_gword(4, "s1 a2 e1,3^-2 A1,4 E1,2,3 d1 r1 P w U");
  CHECK(w.syllables().size() == 10);
  CHECK(to_string(w) == "s1 a2 e1,3^-2 A1,4 E1,2,3 d1 r1 P w U");
  CHECK(parse_gword(3, "s1 s1 s2^-1 s2").syllables().size() == 1);
  CHECK(parse_gword(3, "s1 s1^-1").empty());
  CHECK(parse_gword(3, "1").empty());
  CHECK(parse_gword(3, "(s1 s2)^3") == parse_gword(3, "s1 s2 s1 s2 s1 s2"));
  CHECK(parse_gword(3, "(s1 s2)^-1") == parse_gword(3, "s2^-1 s1^-1"));
  CHECK(parse_gword(3, "s1 s2").inverse() == parse_gword(3, "s2^-1 s1^-1"));
}

TEST_CASE("parse errors carry the offending position", "[gword]") {
  CHECK(parse_error_pos(3, "s1 q2") == 3);
  CHECK(parse_error_pos(3, "s1 (s2") == 6);
  CHECK(parse_error_pos(3, "s1 )") == 3);
  CHECK(parse_error_pos(3, "e1") == 0);
  CHECK(parse_error_pos(3, "s1 #") == 3);
}

TEST_CASE("realize examples", "[presentations]") {
  CHECK(is_identity(realize(parse_gword(3, "s1 s1^-1"))));
  CHECK(equal(realize(parse_gword(3, "e1,2")), eps(1, 2, 3)));
  CHECK(is_identity(realize(parse_gword(3, "a1 a1"))));
  CHECK(equal(realize(parse_gword(3, "s1 e2,3")), compose(sigma(1, 3), eps(2, 3, 3))));
  CHECK(equal(realize(parse_gword(4, "A1,3")), a_rs(1, 3, 4)));
  CHECK_THROWS_AS(realize(parse_gword(3, "d1")), AlphabetError);
  // ranges are checked against the interpretation, not while parsing
  CHECK_THROWS_AS(realize(parse_gword(3, "s1 s5")), IndexError);
}

TEST_CASE("four-generator expansion", "[presentations]") {
  CHECK(four_gen_expand(parse_gword(3, "s")) == parse_gword(3, "s1 s2"));
  CHECK(four_gen_expand(parse_gword(3, "a")) == parse_gword(3, "a2 a1"));
  CHECK(four_gen_expand(parse_gword(4, "s^-1")) == parse_gword(4, "s3^-1 s2^-1 s1^-1"));
  CHECK(equal(realize(parse_gword(3, "s s1 s^-1")), sigma(2, 3)));
  CHECK_THROWS_AS(four_gen_expand(parse_gword(2, "s")), IndexError);
}

TEST_CASE("the automorphism suites verify for n = 3..6", "[presentations][suites]") {
  for (char const* name : {"braid", "pure", "mccool", "symmetric", "lemma31", "normalizer", "pure_eps", "d2",
                           "lemma41", "c_relations"})
    for (int n = 3; n <= 6; ++n) {
      INFO(name << " n=" << n);
      auto r = verify_suite(name, n);
      CHECK(r.total_pairs > 0);
      CHECK(r.verified());
    }
}

TEST_CASE("single-reading suites have no failures at all", "[presentations][suites]") {
  for (char const* name : {"mccool", "lemma31", "braid", "pure"}) {
    auto r = verify_suite(name, 5);
    CHECK(r.failing_pairs() == 0);
  }
  CHECK(verify_suite("mccool", 5).total_pairs == 240);
}

TEST_CASE("mixed suite: the corrected middle relation holds, the printed one fails", "[presentations][suites]") {
  for (int n = 3; n <= 5; ++n) {
    auto r = verify_suite("mixed", n);
    auto const* g = r.group("(17b)");
    REQUIRE(g != nullptr);
    CHECK(g->holds());
    CHECK(g->holding_variant() == std::optional<std::string>("e_i,j+1"));
    for (auto const& v : g->variants)
      if (v.variant == "printed e_i,i+1") CHECK_FALSE(v.holds());
  }
}

TEST_CASE("four-generator relations verify after expansion for n = 4, 5", "[presentations][suites]") {
  for (int n = 4; n <= 5; ++n) {
    auto r = verify_suite("prop43", n);
    CHECK(r.verified());
    CHECK(r.group("(24a)")->holding_variant() == std::optional<std::string>("a1^2"));
    CHECK(r.group("(26)")->holding_variant() == std::optional<std::string>("1<=i<=n-2"));
  }
}

TEST_CASE("Aut(F_2) suite verifies as automorphisms", "[presentations][suites]") {
  auto r = verify_suite("autf2", 2);
  CHECK(r.verified());
  CHECK(r.group("[w,wUw]")->holding_variant() == std::optional<std::string>("[U,wUw]"));
  CHECK_THROWS_AS(verify_suite("braid", 1), IndexError);
  CHECK_THROWS_AS(verify_suite("nonexistent", 3), Error);
}

TEST_CASE("abelianization examples", "[presentations][abelian]") {
  auto v = abelianize_cb(parse_gword(3, "e1,2 e2,1^-1"));
  CHECK(v.size() == 6);
  CHECK(v[eps_pair_index(1, 2, 3)] == 1);
  CHECK(v[eps_pair_index(2, 1, 3)] == -1);
  long total = 0;
  for (long x : v) total += x < 0 ? -x : x;
  CHECK(total == 2);
  for (long x : abelianize_cb(GWord(3))) CHECK(x == 0);
  CHECK_THROWS_AS(abelianize_cb(parse_gword(3, "s1")), AlphabetError);

  CHECK(abelianize_c(parse_gword(3, "a1 s2^3")) == CAbelian{1, 3});
  CHECK(abelianize_c(parse_gword(3, "s1 s2^-1")) == CAbelian{0, 0});
  CHECK_THROWS_AS(abelianize_c(parse_gword(3, "e1,2")), AlphabetError);
}

TEST_CASE("generator images form the standard basis", "[presentations][abelian]") {
  for (int n = 3; n <= 5; ++n) {
    std::set<std::size_t> seen;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto v = abelianize_cb(GWord(n, GSym::e(i, j)));
        std::size_t ones = 0, at = 0;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (v[k] == 1) ++ones, at = k;
          else REQUIRE(v[k] == 0);
        REQUIRE(ones == 1);
        seen.insert(at);
      }
    CHECK(seen.size() == static_cast<std::size_t>(n * (n - 1)));
  }
}

TEST_CASE("relators that hold die in the abelianization", "[presentations][abelian][property]") {
  for (auto const& s : all_suites()) {
    if (s.interp != Interpretation::conjugating) continue;
    for (int n = 3; n <= 5; ++n) {
      if (!s.admits(n)) continue;
      for (auto const& inst : instantiate(s, n)) {
        GWord rel = four_gen_expand_if_needed(inst.lhs) * four_gen_expand_if_needed(inst.rhs).inverse();
        if (!equal(realize(inst.lhs), realize(inst.rhs))) continue;
        INFO(s.name << " " << inst.binding << ": " << to_string(rel));
        if (only(rel, {Family::eps})) {
          for (long x : abelianize_cb(rel)) REQUIRE(x == 0);
        } else if (only(rel, {Family::sigma, Family::alpha})) {
          REQUIRE(abelianize_c(rel) == CAbelian{0, 0});
        }
      }
    }
  }
}

TEST_CASE("Cb_2 is free on e2,1 and e1,2 at word length <= 6", "[presentations][property]") {
  std::vector<std::pair<GSym, int>> alpha = {
      {GSym::e(2, 1), 1}, {GSym::e(2, 1), -1}, {GSym::e(1, 2), 1}, {GSym::e(1, 2), -1}};
  std::map<std::vector<Word>, std::size_t> seen;
  std::size_t words = 0;
  // depth-first over reduced words
  std::function<void(GWord const&, int, int)> rec = [&](GWord const& w, int last, int depth) {
    Endo e = realize(w);
    std::vector<Word> key;
    for (int i = 1; i <= 2; ++i) key.push_back(e.image(i));
    ++words;
    REQUIRE(seen.emplace(key, words).second);
    if (depth == 6) return;
    for (int k = 0; k < 4; ++k) {
      if (last >= 0 && (k ^ 1) == last) continue;
      GWord v = w;
      v.push(alpha[k].first, alpha[k].second);
      rec(v, k, depth + 1);
    }
  };
  rec(GWord(2), -1, 0);
  // 1 + 4 + 12 + ... + 4*3^5
  CHECK(words == 1 + 4 * (1 + 3 + 9 + 27 + 81 + 243));
}
