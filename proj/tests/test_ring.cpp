#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "cbn/serialize.hpp"

using namespace cbn;

namespace {

using Naive = std::map<std::pair<int, int>, Int>;

Naive naive(LPoly const& p) {
  Naive m;
  for (auto const& x : p.terms()) m[{x.t12, x.q12}] += x.c;
  return m;
}

Naive naive_mul(Naive const& a, Naive const& b) {
  Naive m;
  for (auto const& [ka, ca] : a)
    for (auto const& [kb, cb] : b) m[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  std::erase_if(m, [](auto const& kv) { return kv.second == 0; });
  return m;
}

Naive naive_add(Naive a, Naive const& b) {
  for (auto const& [k, c] : b) a[k] += c;
  std::erase_if(a, [](auto const& kv) { return kv.second == 0; });
  return a;
}

LPoly random_lpoly(std::mt19937_64& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nt(0, max_terms), e(-30, 30), c(-9, 9);
  std::vector<LPoly::Term> ts;
  for (int k = nt(rng); k > 0; --k) ts.push_back({e(rng), e(rng), Int(c(rng))});
  return LPoly::from_terms(ts);
}

bool canonical(LPoly const& p) {
  for (std::size_t k = 0; k < p.terms().size(); ++k) {
    if (p.terms()[k].c == 0) return false;
    if (k > 0 && p.terms()[k - 1].t12 == p.terms()[k].t12 && p.terms()[k - 1].q12 == p.terms()[k].q12) return false;
  }
  return true;
}

// exact value at t = 2^12, q = 3^12, so t^(a/12) = 2^a
Rational value_at(LPoly const& p) {
  Rational v = 0;
  for (auto const& x : p.terms()) {
    Rational m(x.c);
    for (int k = 0; k < std::abs(x.t12); ++k) m = x.t12 > 0 ? Rational(m * 2) : Rational(m / 2);
    for (int k = 0; k < std::abs(x.q12); ++k) m = x.q12 > 0 ? Rational(m * 3) : Rational(m / 3);
    v += m;
  }
  return v;
}

RMat random_rmat(std::mt19937_64& rng, std::size_t n) {
  RMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_lpoly(rng, 3);
  return m;
}

}  // namespace

TEST_CASE("Laurent polynomial examples", "[ring]") {
  LPoly t = LPoly::t(), q = LPoly::q();
  CHECK(((LPoly(1) - q) + q).is_one());
  LPoly mu = LPoly::mono12(-2, -8);
  LPoly mu12 = 1;
  for (int k = 0; k < 12; ++k) mu12 *= mu;
  CHECK((mu12 * t * t * q * q * q * q * q * q * q * q).is_one());
  CHECK((LPoly::mono12(-4, 0) * LPoly::mono12(4, 0)).is_one());
  CHECK((t - t).is_zero());
  CHECK(to_string(LPoly(1) - q) == "-q + 1");
  CHECK(to_string(LPoly::mono12(-4, 0)) == "t^(-1/3)");
}

TEST_CASE("specialization examples", "[ring]") {
  LPoly t = LPoly::t(), q = LPoly::q();
  CHECK((t * q * (q - 1)).specialize(Rational(1), std::nullopt) == q * (q - 1));
  CHECK((LPoly(1) - q).specialize(Rational(1), Rational(1)).is_zero());
  CHECK(LPoly::mono12(-2, -8).specialize(Rational(1), std::nullopt) == LPoly::mono12(0, -8));
  CHECK_THROWS_AS(LPoly::mono12(6, 0).specialize(Rational(2), std::nullopt), SpecializationError);
  CHECK(LPoly::mono12(6, 0).specialize(Rational(4), std::nullopt) == LPoly(2));
  CHECK_THROWS_AS(LPoly::t(-1).specialize(Rational(2), std::nullopt), SpecializationError);
}

TEST_CASE("ring operations agree with a map-based model", "[ring][property]") {
  std::mt19937_64 rng(500);
  std::vector<LPoly> ps;
  for (int k = 0; k < 500; ++k) ps.push_back(random_lpoly(rng));
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  for (int k = 0; k < 500; ++k) {
    LPoly const& a = ps[pick(rng)];
    LPoly const& b = ps[pick(rng)];
    LPoly const& c = ps[pick(rng)];
    REQUIRE(naive(a * b) == naive_mul(naive(a), naive(b)));
    REQUIRE(naive(a + b) == naive_add(naive(a), naive(b)));
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(lp_eq(lp_neg(lp_neg(a)), a));
    REQUIRE(canonical(a * b));
    REQUIRE(canonical(a + b - c));
  }
}

TEST_CASE("specialization is a ring homomorphism", "[ring][property]") {
  std::mt19937_64 rng(501);
  Rational tv = 4096, qv = 531441;  // 2^12, 3^12
  for (int k = 0; k < 300; ++k) {
    LPoly a = random_lpoly(rng), b = random_lpoly(rng);
    // integer values need nonnegative exponents
    auto shift = LPoly::mono12(30, 30);
    LPoly pa = a * shift, pb = b * shift;
    auto sp = [&](LPoly const& p) { return lp_specialize(p, tv, qv); };
    REQUIRE(sp(pa * pb) == sp(pa) * sp(pb));
    REQUIRE(sp(pa + pb) == sp(pa) + sp(pb));
    // t = 1 keeps q symbolic
    auto s1 = [](LPoly const& p) { return p.specialize(Rational(1), std::nullopt); };
    REQUIRE(s1(a * b) == s1(a) * s1(b));
  }
}

TEST_CASE("specialization matches exact evaluation", "[ring][property]") {
  std::mt19937_64 rng(502);
  for (int k = 0; k < 200; ++k) {
    // keep exponents nonnegative so the value is an integer
    std::uniform_int_distribution<int> e(0, 24), c(-9, 9);
    std::vector<LPoly::Term> ts;
    for (int m = 0; m < 5; ++m) ts.push_back({e(rng), e(rng), Int(c(rng))});
    LPoly p = LPoly::from_terms(ts);
    LPoly v = p.specialize(Rational(4096), Rational(531441));
    Rational expect = value_at(p);
    REQUIRE(v == LPoly(Int(boost::multiprecision::numerator(expect))));
  }
}

TEST_CASE("matrix operations", "[ring][matrix]") {
  auto bm = block_monomial<LPoly>({{0, 1, RMat::identity(1)}, {1, 0, RMat::identity(1)}}, 1, 2);
  RMat swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK(mat_eq(bm, swap));

  std::mt19937_64 rng(503);
  RMat m = random_rmat(rng, 3);
  CHECK(mat_eq(mat_mul(mat_identity<LPoly>(3), m), m));
  CHECK(mat_eq(mat_mul(m, mat_identity<LPoly>(3)), m));

  RMat a = random_rmat(rng, 2), b = random_rmat(rng, 3);
  RMat d = block_diag<LPoly>({a, b});
  CHECK(d.rows() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i < 2 && j < 2)
        CHECK(d(i, j) == a(i, j));
      else if (i >= 2 && j >= 2)
        CHECK(d(i, j) == b(i - 2, j - 2));
      else
        CHECK(d(i, j).is_zero());
    }
  CHECK(mat_eq(mat_scalar(LPoly(2), m), m + m));
  CHECK_THROWS_AS(mat_mul(a, b), DimensionMismatch);
  CHECK_THROWS_AS((block_monomial<LPoly>({{0, 0, a}}, 3, 1)), DimensionMismatch);
  CHECK_THROWS_AS((block_monomial<LPoly>({{2, 0, a}}, 2, 2)), DimensionMismatch);
}

TEST_CASE("matrix product is associative", "[ring][matrix][property]") {
  std::mt19937_64 rng(504);
  for (int k = 0; k < 20; ++k) {
    RMat a = random_rmat(rng, 4), b = random_rmat(rng, 4), c = random_rmat(rng, 4);
    REQUIRE(mat_eq((a * b) * c, a * (b * c)));
  }
}

TEST_CASE("integer matrices", "[ring][matrix]") {
  ZMat m(2, 2);
  m(0, 0) = 5;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 1;
  CHECK(determinant(m) == 1);
  CHECK(is_permutation_matrix(permutation_matrix<Int>({2, 0, 1})));
  CHECK_FALSE(is_permutation_matrix(m));
}

TEST_CASE("serialization round trips bit-exactly", "[ring][serialize]") {
  CHECK(to_json(LPoly::mono12(-4, 6)).dump() == R"([{"c":"1","q":"1/2","t":"-1/3"}])");
  CHECK(to_json(LPoly()).dump() == "[]");
  std::mt19937_64 rng(505);
  for (int k = 0; k < 200; ++k) {
    LPoly p = random_lpoly(rng);
    p *= LPoly(Int("123456789012345678901234567890"));
    REQUIRE(lpoly_from_json(json::parse(to_json(p).dump())) == p);
  }
  RMat m = random_rmat(rng, 3);
  CHECK(mat_eq(rmat_from_json(json::parse(to_json(m).dump())), m));
  ZMat z(2, 3);
  z(1, 2) = Int("-99999999999999999999999");
  CHECK(mat_eq(zmat_from_json(json::parse(to_json(z).dump())), z));
  CHECK_THROWS_AS(lpoly_from_json(json::parse(R"([{"t":"1/5","q":"0","c":"1"}])")), Error);
  CHECK_THROWS_AS(rmat_from_json(json::parse("[[[]],[]]")), Error);
}
