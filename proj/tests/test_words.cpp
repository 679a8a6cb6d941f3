#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cbn/words.hpp"

using namespace cbn;

namespace {

// one cancellation sweep at a time until nothing changes
std::vector<Letter> naive_reduce(std::vector<Letter> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      if (s[k].gen == s[k + 1].gen && s[k].sign == -s[k + 1].sign) {
        s.erase(s.begin() + static_cast<long>(k), s.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

std::vector<Letter> random_letters(std::mt19937_64& rng, int n, std::size_t len) {
  std::uniform_int_distribution<int> g(1, n), s(0, 1);
  std::vector<Letter> out;
  for (std::size_t k = 0; k < len; ++k) out.push_back({g(rng), s(rng) ? 1 : -1});
  return out;
}

// all letter sequences of length <= L over F_n
void all_sequences(int n, std::size_t L, std::vector<Letter>& cur, std::vector<std::vector<Letter>>& out) {
  out.push_back(cur);
  if (cur.size() == L) return;
  for (int g = 1; g <= n; ++g)
    for (int s : {1, -1}) {
      cur.push_back({g, s});
      all_sequences(n, L, cur, out);
      cur.pop_back();
    }
}

std::vector<Word> reduced_words(int n, std::size_t L) {
  std::vector<std::vector<Letter>> seqs;
  std::vector<Letter> cur;
  all_sequences(n, L, cur, seqs);
  std::set<Word> uniq;
  for (auto const& s : seqs) uniq.insert(Word(n, s));
  return {uniq.begin(), uniq.end()};
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs", "[words]") {
  CHECK(Word(2, {1, -1}).empty());
  CHECK(to_string(Word(2, {-2, 1, 2})) == "x2^-1 x1 x2");
  CHECK(Word(2, {1, 2, -2, 1}) == Word::generator(2, 1, 2));
  CHECK(to_string(Word(2, {1, 2, -2, 1})) == "x1^2");
  CHECK(to_string(Word(3)) == "1");
}

TEST_CASE("reduce rejects generators outside the rank", "[words]") {
  CHECK_THROWS_AS(Word(2, {3}), IndexError);
  CHECK_THROWS_AS(Word(2, {0}), IndexError);
}

TEST_CASE("reduce agrees with repeated single-pass cancellation", "[words][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    auto s = random_letters(rng, 3, trial % 20);
    Word w(3, s);
    CHECK(w.letters() == naive_reduce(s));
    CHECK(Word(3, w.letters()) == w);
  }
}

TEST_CASE("mul, inv and commutator", "[words]") {
  Word x1 = Word::generator(3, 1), x2 = Word::generator(3, 2), x3 = Word::generator(3, 3);
  CHECK(mul(x1, inv(x1)).empty());
  CHECK(inv(Word(2, {-2, 1, 2})) == Word(2, {-2, -1, 2}));
  CHECK(mul(x1 * x2, inv(x2) * x3) == x1 * x3);
  CHECK(commutator(x1, x1).empty());
  CHECK(commutator(x1, x2) == Word(3, {-1, -2, 1, 2}));
  CHECK(commutator(x1 * x2, Word(3)).empty());
  CHECK_THROWS_AS(mul(Word::generator(2, 1), x1), RankMismatch);
  CHECK_THROWS_AS(commutator(Word::generator(2, 1), x1), RankMismatch);
}

TEST_CASE("mul is associative and length bounded on all short words of F_3", "[words][property]") {
  auto ws = reduced_words(3, 2);
  for (auto const& u : ws)
    for (auto const& v : ws) {
      Word uv = u * v;
      CHECK(uv.size() <= u.size() + v.size());
      CHECK(inv(uv) == inv(v) * inv(u));
      CHECK(inv(inv(u)) == u);
      for (auto const& w : ws) REQUIRE((uv * w) == (u * (v * w)));
    }
  // longer samples
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    Word u(3, random_letters(rng, 3, 4)), v(3, random_letters(rng, 3, 4)), w(3, random_letters(rng, 3, 4));
    REQUIRE(((u * v) * w) == (u * (v * w)));
  }
}

TEST_CASE("cyclic_reduce examples", "[words]") {
  auto a = cyclic_reduce(Word(2, {-2, 1, 2}));
  CHECK(a.f == Word::generator(2, 2));
  CHECK(a.core == Word::generator(2, 1));
  auto b = cyclic_reduce(Word::generator(2, 1));
  CHECK(b.f.empty());
  CHECK(b.core == Word::generator(2, 1));
  auto c = cyclic_reduce(Word(3, {-3, -2, 1, 2, 3}));
  CHECK(c.f == Word(3, {2, 3}));
  CHECK(c.core == Word::generator(3, 1));
}

TEST_CASE("cyclic_reduce recomposes every word of length <= 8 over F_3", "[words][property]") {
  std::mt19937_64 rng(13);
  // exhaustive to length 5, sampled to 8
  auto check = [](Word const& w) {
    auto cr = cyclic_reduce(w);
    REQUIRE(inv(cr.f) * cr.core * cr.f == w);
    if (cr.core.size() >= 2) REQUIRE_FALSE(cr.core[0].cancels(cr.core[cr.core.size() - 1]));
    // maximality: no longer conjugator exists
    if (!cr.core.empty()) REQUIRE(cr.f.size() + cr.f.size() + cr.core.size() == w.size());
  };
  for (auto const& w : reduced_words(3, 5)) check(w);
  for (int k = 0; k < 5000; ++k) check(Word(3, random_letters(rng, 3, 8)));
}

TEST_CASE("word text form round trips", "[words]") {
  CHECK(parse_word(3, "x1 x2^-1 x1^3") == Word(3, {1, -2, 1, 1, 1}));
  CHECK(to_string(parse_word(3, "x1 x2^-1 x1^3")) == "x1 x2^-1 x1^3");
  CHECK(parse_word(2, "1").empty());
  CHECK_THROWS_AS(parse_word(2, "x3"), ParseError);
  CHECK_THROWS_AS(parse_word(2, "y1"), ParseError);
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    Word w(4, random_letters(rng, 4, 12));
    CHECK(parse_word(4, to_string(w)) == w);
  }
}
