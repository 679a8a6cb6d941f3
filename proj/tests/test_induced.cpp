#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cbn/induced.hpp"
#include "cbn/serialize.hpp"

using namespace cbn;

namespace {

GWord w3(char const* s) { return parse_gword(3, s); }

ZMat z2(long a, long b, long c, long d) {
  ZMat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// d1^k in the toy instance: diag(t^k) for even k, [[0, t^(k-1)], [t^(k+1), 0]] for odd k
RMat toy_closed_form(int k) {
  RMat m(2, 2);
  if (k % 2 == 0) {
    m(0, 0) = LPoly::t(k);
    m(1, 1) = LPoly::t(k);
  } else {
    m(0, 1) = LPoly::t(k - 1);
    m(1, 0) = LPoly::t(k + 1);
  }
  return m;
}

GWord toy_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 8), s(0, 1);
  GWord w(1);
  for (int l = len(rng); l > 0; --l) w.push(GSym::d(1), s(rng) ? 1 : -1);
  return w;
}

void check_table(CosetTable const& t, FPGroup const& g) {
  for (std::size_t c = 0; c < t.index(); ++c)
    for (int x = 1; x <= t.ngens; ++x) {
      REQUIRE(t.act(t.act(static_cast<int>(c), x), -x) == static_cast<int>(c));
      for (auto const& r : g.relators) {
        int d = static_cast<int>(c);
        for (int y : r) d = t.act(d, y);
        REQUIRE(d == static_cast<int>(c));
      }
    }
}

}  // namespace

TEST_CASE("Malcev toy instance for 2Z in Z", "[induced][malcev]") {
  auto rep = malcev_toy();
  CHECK(rep.dim() == 2);
  CHECK(rep.eval(GWord(1)).is_identity());
  for (int k = -7; k <= 7; ++k) CHECK(mat_eq(rep.eval(GWord(1, GSym::d(1), k)), toy_closed_form(k)));
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    GWord u = toy_word(rng), v = toy_word(rng);
    REQUIRE(mat_eq(rep.eval(u * v), rep.eval(u) * rep.eval(v)));
  }
}

TEST_CASE("malcev_build validates its inputs", "[induced][malcev]") {
  CosetSystem cs{{GWord(1), GWord(1, GSym::d(1))}};
  auto sub = [](GWord const&) { return RMat::identity(1); };
  TransitionTable bad;
  bad.rows[{GSym::d(1), 1}] = {{GWord(1), 1}, {GWord(1), 1}};
  CHECK_THROWS_AS(malcev_build<LPoly>(sub, 1, cs, bad), NotBijective);
  TransitionTable ok;
  ok.rows[{GSym::d(1), 1}] = {{GWord(1), 1}, {GWord(1), 0}};
  CHECK_THROWS_AS(malcev_build<LPoly>(sub, 2, cs, ok), DimensionMismatch);
  TransitionTable short_row;
  short_row.rows[{GSym::d(1), 1}] = {{GWord(1), 0}};
  CHECK_THROWS_AS(malcev_build<LPoly>(sub, 1, cs, short_row), DimensionMismatch);
  auto built = malcev_build<LPoly>(sub, 1, cs, ok);
  CHECK(is_permutation_matrix(built.eval(GWord(1, GSym::d(1)))));
  CHECK_THROWS_AS(traverse(ok, GWord(1, GSym::d(1), -1), 0, 1), RewriteStuck);
}

TEST_CASE("coset enumeration on small groups", "[induced][cosets]") {
  // S_3 = <a, b | a^2, b^3, (ab)^2>
  FPGroup s3{2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}};
  auto t1 = enumerate_cosets(s3, {});
  CHECK(t1.index() == 6);
  check_table(t1, s3);
  auto t2 = enumerate_cosets(s3, {{1}});
  CHECK(t2.index() == 3);
  check_table(t2, s3);
  // Z/5 x Z/3 = Z/15
  FPGroup z15{2, {{1, 1, 1, 1, 1}, {2, 2, 2}, {-1, -2, 1, 2}}};
  CHECK(enumerate_cosets(z15, {}).index() == 15);
  // binary: coincidences needed for <a, b | a b a^-1 b^-2, b a b^-1 a^-2> (trivial group)
  FPGroup triv{2, {{1, 2, -1, -2, -2}, {2, 1, -2, -1, -1}}};
  CHECK(enumerate_cosets(triv, {}).index() == 1);
}

TEST_CASE("Sanov matrices", "[induced][sanov]") {
  CHECK(mat_eq(sanov(w3("r1")), z2(1, 2, 0, 1)));
  CHECK(mat_eq(sanov(w3("pa2")), z2(1, 0, 2, 1)));
  CHECK_FALSE(sanov(w3("r1 pa2 r1^-1 pa2^-1")).is_identity());
  CHECK(mat_eq(sanov(w3("r1^3")), z2(1, 6, 0, 1)));
  CHECK_THROWS_AS(sanov(w3("d1")), AlphabetError);
}

TEST_CASE("Sanov pair is free at word length <= 8", "[induced][sanov][property]") {
  std::vector<std::pair<GSym, int>> letters = {{GSym::r(1), 1}, {GSym::r(1), -1}, {GSym::pa(2), 1}, {GSym::pa(2), -1}};
  std::set<std::vector<Int>> seen;
  std::size_t count = 0;
  std::function<void(GWord const&, ZMat const&, int, int)> rec = [&](GWord const& w, ZMat const& m, int last,
                                                                     int depth) {
    ++count;
    REQUIRE(mat_eq(m, sanov(w)));
    REQUIRE(seen.insert({m(0, 0), m(0, 1), m(1, 0), m(1, 1)}).second);
    if (depth == 8) return;
    for (int k = 0; k < 4; ++k) {
      if (last >= 0 && (k ^ 1) == last) continue;
      GWord v = w;
      v.push(letters[k].first, letters[k].second);
      rec(v, m * sanov(GWord(3, letters[k].first, letters[k].second)), k, depth + 1);
    }
  };
  rec(GWord(3), ZMat::identity(2), -1, 0);
  CHECK(count == 1 + 4 * (6561 - 1) / 2);
}

TEST_CASE("B_3(P^2) coset system", "[induced][bp2]") {
  auto const& sys = bp2_system();
  CHECK(sys.cs.index() == 48);
  CHECK(sys.cs.reps[0].empty());
  CHECK(sys.rep.dim() == 96);
  for (auto const& [key, row] : sys.tt.rows) {
    std::set<std::size_t> targets;
    for (auto const& tr : row) targets.insert(tr.target);
    CHECK(targets.size() == 48);
  }
}

TEST_CASE("B_3(P^2) rewriting", "[induced][bp2]") {
  auto e = bp2_rewrite(GWord(3), 0);
  CHECK(e.first.empty());
  CHECK(e.second == 0);
  auto d = bp2_rewrite(w3("d1"), 0);
  CHECK(d.first.empty());
  CHECK(bp2_system().cs.reps[d.second] == w3("d1"));
  auto a = bp2_rewrite(w3("d1^2"), 0);
  CHECK(a.second == 0);
  CHECK(mat_eq(sanov(a.first), sanov(w3("pa2"))));
  auto r = bp2_rewrite(w3("r1"), 0);
  CHECK(r.second == 0);
  CHECK(mat_eq(sanov(r.first), sanov(w3("r1"))));
  CHECK_THROWS_AS(bp2_rewrite(w3("d1"), 48), IndexError);
}

TEST_CASE("B_3(P^2) relators map to the identity", "[induced][bp2]") {
  for (auto const& r : bp2_relators()) {
    INFO(to_string(r));
    CHECK(bp2_rep(r).is_identity());
    CHECK(bp2_rep_product(r).is_identity());
  }
  CHECK(verify_bp2_suite(find_suite("bp2")).verified());
}

TEST_CASE("B_3(P^2) generator images", "[induced][bp2]") {
  for (char const* g : {"d1", "d2", "r1"}) {
    ZMat m = bp2_rep(w3(g));
    INFO(g);
    CHECK_FALSE(m.is_identity());
    CHECK(determinant(m) == 1);
    CHECK(mat_eq(m, bp2_rep_product(w3(g))));
  }
  CHECK(mat_eq(submatrix(bp2_rep(w3("r1")), 0, 0, 2, 2), z2(1, 2, 0, 1)));
  ZMat d1 = bp2_rep(w3("d1"));
  CHECK(submatrix(d1, 0, 0, 2, 2).is_identity() == false);
  auto perm = bp2_block_permutation(d1);
  CHECK(perm[0] == 8);
}

TEST_CASE("B_3(P^2) homomorphism and quotient", "[induced][bp2][property]") {
  std::mt19937_64 rng(20240601);
  auto const& sys = bp2_system();
  auto s3 = bp2_s3_part();
  for (int k = 0; k < 100; ++k) {
    GWord u = random_bp2_word(rng, 8), v = random_bp2_word(rng, 8);
    REQUIRE(mat_eq(bp2_rep(u * v), bp2_rep(u) * bp2_rep(v)));
  }
  for (int k = 0; k < 50; ++k) {
    GWord u = random_bp2_word(rng, 10);
    ZMat m = bp2_rep(u);
    REQUIRE(mat_eq(m, bp2_rep_product(u)));
    auto perm = bp2_block_permutation(m);
    auto [h, target] = bp2_rewrite(u, 0);
    REQUIRE(perm[0] == target);
    // the S_3 coordinate of the target representative is the quotient image
    REQUIRE(s3_image(s3[target / 8]).one_line() == s3_image(u).one_line());
    // block permutation is the coset action
    for (std::size_t i = 0; i < sys.cs.index(); ++i) REQUIRE(perm[i] == bp2_rewrite(u, i).second);
  }
}

TEST_CASE("projective conjugation rules hold under the g^-1 x g reading", "[induced][bp2]") {
  auto r = verify_bp2_suite(find_suite("bp2_rules"));
  CHECK(r.verified());
  for (auto const& g : r.groups) {
    if (g.variants.size() < 2) continue;
    INFO(g.group);
    CHECK(g.holding_variant() == std::optional<std::string>("x^g = g^-1 x g"));
  }
}

TEST_CASE("mapping class group dimensions", "[induced]") {
  CHECK(m0n_dim(4) == 72);
  CHECK(m0n_dim(5) == 720);
  CHECK(sphere_index(4) == 144);
  CHECK(sphere_index(5) == 2 * m0n_dim(5));
  CHECK_THROWS_AS(m0n_dim(3), IndexError);
}
