#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbn/error.hpp"

namespace cbn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Laurent polynomial in t, q with integer coefficients; exponents are multiples of 1/12.
class LPoly {
 public:
  struct Term {
    std::int32_t t12 = 0;
    std::int32_t q12 = 0;
    Int c;
    bool operator==(Term const&) const = default;
  };

  LPoly() = default;
  LPoly(int c) : LPoly(Int(c)) {}
  LPoly(Int const& c) {
    if (c != 0) terms_.push_back({0, 0, c});
  }

  static LPoly monomial(Int const& c, int t12, int q12) {
    LPoly p;
    if (c != 0) p.terms_.push_back({t12, q12, c});
    return p;
  }
  static LPoly t(int k = 1) { return monomial(1, 12 * k, 0); }
  static LPoly q(int k = 1) { return monomial(1, 0, 12 * k); }
  // t^(a/12) q^(b/12)
  static LPoly mono12(int t12, int q12) { return monomial(1, t12, q12); }

  static LPoly from_terms(std::vector<Term> ts) {
    LPoly p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
  }

  std::vector<Term> const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].t12 == 0 && terms_[0].q12 == 0 && terms_[0].c == 1; }
  bool is_monomial() const { return terms_.size() == 1; }

  bool operator==(LPoly const&) const = default;

  LPoly operator-() const {
    LPoly r = *this;
    for (auto& x : r.terms_) x.c = -x.c;
    return r;
  }

  LPoly& operator+=(LPoly const& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < terms_.size() || b < o.terms_.size()) {
      if (b == o.terms_.size() || (a < terms_.size() && key_less(terms_[a], o.terms_[b]))) {
        out.push_back(std::move(terms_[a++]));
      } else if (a == terms_.size() || key_less(o.terms_[b], terms_[a])) {
        out.push_back(o.terms_[b++]);
      } else {
        Int c = terms_[a].c + o.terms_[b].c;
        if (c != 0) out.push_back({terms_[a].t12, terms_[a].q12, std::move(c)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  LPoly& operator-=(LPoly const& o) { return *this += -o; }

  friend LPoly operator+(LPoly a, LPoly const& b) { return a += b; }
  friend LPoly operator-(LPoly a, LPoly const& b) { return a -= b; }

  friend LPoly operator*(LPoly const& a, LPoly const& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0]);
    if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0]);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (auto const& x : a.terms_)
      for (auto const& y : b.terms_) out.push_back({x.t12 + y.t12, x.q12 + y.q12, x.c * y.c});
    LPoly r;
    r.terms_ = std::move(out);
    r.normalize();
    return r;
  }
  LPoly& operator*=(LPoly const& o) { return *this = *this * o; }

  // Substitute rational values; a value must have an exact root of the needed order.
  LPoly specialize(std::optional<Rational> const& tv, std::optional<Rational> const& qv) const;

 private:
  static bool key_less(Term const& x, Term const& y) {
    return x.t12 != y.t12 ? x.t12 < y.t12 : x.q12 < y.q12;
  }

  LPoly times_monomial(Term const& m) const {
    LPoly r;
    r.terms_.reserve(terms_.size());
    for (auto const& x : terms_) r.terms_.push_back({x.t12 + m.t12, x.q12 + m.q12, x.c * m.c});
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), key_less);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& x : terms_) {
      if (!out.empty() && out.back().t12 == x.t12 && out.back().q12 == x.q12)
        out.back().c += x.c;
      else
        out.push_back(std::move(x));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](Term const& x) { return x.c == 0; }), out.end());
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;  // sorted by (t12, q12), no zero coefficients
};

inline bool is_zero(LPoly const& p) { return p.is_zero(); }
inline bool is_zero(Int const& v) { return v == 0; }
inline bool is_one(LPoly const& p) { return p.is_one(); }
inline bool is_one(Int const& v) { return v == 1; }

namespace lp_detail {

// exact integer k-th root, or nullopt
inline std::optional<Int> iroot(Int const& v, int k) {
  if (v < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = iroot(-v, k);
    if (!r) return std::nullopt;
    return Int(-*r);
  }
  if (v < 2 || k == 1) return v;
  // bisection on [0, 2^(bits/k + 1)]
  std::size_t bits = boost::multiprecision::msb(v) + 1;
  Int lo = 0, hi = Int(1) << (bits / k + 1);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    Int p = boost::multiprecision::pow(mid, static_cast<unsigned>(k));
    if (p <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (boost::multiprecision::pow(lo, static_cast<unsigned>(k)) == v) return lo;
  return std::nullopt;
}

// value^(e12/12) as an exact rational
inline Rational rational_power12(Rational const& value, int e12) {
  if (e12 == 0) return Rational(1);
  if (value == 0) throw SpecializationError("cannot substitute 0 into a Laurent polynomial");
  int g = std::gcd(e12 < 0 ? -e12 : e12, 12);
  int num = e12 / g, den = 12 / g;
  Int a = boost::multiprecision::numerator(value), b = boost::multiprecision::denominator(value);
  auto ra = iroot(a, den), rb = iroot(b, den);
  if (!ra || !rb)
    throw SpecializationError("value has no exact root of order " + std::to_string(den));
  Rational root(*ra, *rb);
  Rational r(1);
  int k = num < 0 ? -num : num;
  for (int i = 0; i < k; ++i) r *= root;
  return num < 0 ? Rational(1) / r : r;
}

}  // namespace lp_detail

inline LPoly LPoly::specialize(std::optional<Rational> const& tv, std::optional<Rational> const& qv) const {
  std::vector<Term> out;
  for (auto const& x : terms_) {
    Rational c(x.c);
    int te = x.t12, qe = x.q12;
    if (tv) {
      c *= lp_detail::rational_power12(*tv, te);
      te = 0;
    }
    if (qv) {
      c *= lp_detail::rational_power12(*qv, qe);
      qe = 0;
    }
    if (boost::multiprecision::denominator(c) != 1)
      throw SpecializationError("substitution leaves a non-integer coefficient");
    out.push_back({te, qe, boost::multiprecision::numerator(c)});
  }
  return from_terms(std::move(out));
}

inline LPoly lp_add(LPoly const& a, LPoly const& b) { return a + b; }
inline LPoly lp_mul(LPoly const& a, LPoly const& b) { return a * b; }
inline LPoly lp_neg(LPoly const& a) { return -a; }
inline bool lp_eq(LPoly const& a, LPoly const& b) { return a == b; }
inline LPoly lp_specialize(LPoly const& p, std::optional<Rational> const& t, std::optional<Rational> const& q) {
  return p.specialize(t, q);
}

// Exponent a/12 in lowest terms: "2", "-1/3", "0".
inline std::string exponent_string(int e12) {
  int g = std::gcd(e12 < 0 ? -e12 : e12, 12);
  if (e12 == 0) return "0";
  int num = e12 / g, den = 12 / g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

inline int parse_exponent12(std::string const& s) {
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return 12 * std::stoi(s);
    int num = std::stoi(s.substr(0, slash)), den = std::stoi(s.substr(slash + 1));
    if (den <= 0 || 12 % den != 0) throw Error("exponent '" + s + "' is not on the 1/12 lattice");
    return num * (12 / den);
  } catch (std::logic_error const&) {
    throw Error("bad exponent '" + s + "'");
  }
}

inline std::string to_string(LPoly const& p) {
  if (p.is_zero()) return "0";
  std::string s;
  // highest degree first reads more naturally
  auto const& ts = p.terms();
  for (std::size_t k = ts.size(); k-- > 0;) {
    auto const& x = ts[k];
    Int c = x.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    bool unit = x.t12 == 0 && x.q12 == 0;
    std::string mono;
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (e != 12) mono += "^" + (e % 12 == 0 ? std::to_string(e / 12) : "(" + exponent_string(e) + ")");
    };
    var('t', x.t12);
    var('q', x.q12);
    if (unit || c != 1) s += c.str() + (mono.empty() ? "" : "*");
    s += mono;
  }
  return s;
}

}  // namespace cbn
