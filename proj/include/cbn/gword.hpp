#pragma once

#include <array>
#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cbn/error.hpp"
#include "cbn/words.hpp"

namespace cbn {

enum class Family {
  sigma,      // s_i
  alpha,      // a_i (permutation generator; alpha_i of Aut(F2) under the autf2 reading)
  eps,        // e_i,j
  eps3,       // E_i,j,k
  pure,       // A_r,s
  delta,      // d_i
  rho,        // r_i
  P,
  omega,      // w
  U,
  sigma_all,  // s  = s_1 s_2 ... s_{n-1}
  alpha_all,  // a  = a_{n-1} ... a_1
  sub_a,      // pa_j, the subgroup generators a_2 = d_1^2, a_3 = d_1^-1 d_2^2 d_1 of the projective braid group
};

struct GSym {
  Family family = Family::sigma;
  std::array<int, 3> idx{0, 0, 0};

  auto operator<=>(GSym const&) const = default;
  bool operator==(GSym const&) const = default;

  static GSym s(int i) { return {Family::sigma, {i, 0, 0}}; }
  static GSym a(int i) { return {Family::alpha, {i, 0, 0}}; }
  static GSym e(int i, int j) { return {Family::eps, {i, j, 0}}; }
  static GSym E(int i, int j, int k) { return {Family::eps3, {i, j, k}}; }
  static GSym A(int r, int s) { return {Family::pure, {r, s, 0}}; }
  static GSym d(int i) { return {Family::delta, {i, 0, 0}}; }
  static GSym r(int i) { return {Family::rho, {i, 0, 0}}; }
  static GSym P() { return {Family::P, {0, 0, 0}}; }
  static GSym w() { return {Family::omega, {0, 0, 0}}; }
  static GSym U() { return {Family::U, {0, 0, 0}}; }
  static GSym S() { return {Family::sigma_all, {0, 0, 0}}; }
  static GSym Al() { return {Family::alpha_all, {0, 0, 0}}; }
  static GSym pa(int j) { return {Family::sub_a, {j, 0, 0}}; }
};

inline int arity(Family f) {
  switch (f) {
    case Family::eps:
    case Family::pure:
      return 2;
    case Family::eps3:
      return 3;
    case Family::P:
    case Family::omega:
    case Family::U:
    case Family::sigma_all:
    case Family::alpha_all:
      return 0;
    default:
      return 1;
  }
}

inline char const* family_prefix(Family f) {
  switch (f) {
    case Family::sigma: return "s";
    case Family::alpha: return "a";
    case Family::eps: return "e";
    case Family::eps3: return "E";
    case Family::pure: return "A";
    case Family::delta: return "d";
    case Family::rho: return "r";
    case Family::P: return "P";
    case Family::omega: return "w";
    case Family::U: return "U";
    case Family::sigma_all: return "s";
    case Family::alpha_all: return "a";
    case Family::sub_a: return "pa";
  }
  return "?";
}

// Index checks that do not depend on the rank.
inline void validate_structure(GSym const& g) {
  int k = arity(g.family);
  for (int q = 0; q < k; ++q)
    if (g.idx[q] < 1) throw IndexError(std::string("index of ") + family_prefix(g.family) + " must be positive");
  for (int q = k; q < 3; ++q)
    if (g.idx[q] != 0) throw IndexError("unused index slot must be zero");
  switch (g.family) {
    case Family::eps:
      if (g.idx[0] == g.idx[1]) throw IndexError("e_i,j requires i != j");
      break;
    case Family::eps3:
      if (g.idx[0] == g.idx[1] || g.idx[0] == g.idx[2] || g.idx[1] == g.idx[2])
        throw IndexError("E_i,j,k requires distinct indices");
      break;
    case Family::pure:
      if (g.idx[0] >= g.idx[1]) throw IndexError("A_r,s requires r < s");
      break;
    case Family::sub_a:
      if (g.idx[0] != 2 && g.idx[0] != 3) throw IndexError("pa_j requires j in {2,3}");
      break;
    default:
      break;
  }
}

inline std::string to_string(GSym const& g) {
  std::string s = family_prefix(g.family);
  int k = arity(g.family);
  for (int q = 0; q < k; ++q) {
    if (q) s += ',';
    s += std::to_string(g.idx[q]);
  }
  return s;
}

struct Syllable {
  GSym sym;
  int exp = 1;
  bool operator==(Syllable const&) const = default;
  auto operator<=>(Syllable const&) const = default;
};

// Symbolic word over named generators; adjacent equal symbols are merged.
class GWord {
 public:
  explicit GWord(int n = 0) : n_(n) {}
  GWord(int n, std::vector<Syllable> const& syl) : n_(n) {
    for (auto const& s : syl) push(s.sym, s.exp);
  }
  GWord(int n, GSym g, int e = 1) : n_(n) { push(g, e); }

  int rank() const { return n_; }
  std::vector<Syllable> const& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }

  std::size_t length() const {
    std::size_t t = 0;
    for (auto const& s : syl_) t += static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp);
    return t;
  }

  void push(GSym const& g, int e) {
    if (e == 0) return;
    validate_structure(g);
    if (!syl_.empty() && syl_.back().sym == g) {
      syl_.back().exp += e;
      if (syl_.back().exp == 0) syl_.pop_back();
    } else {
      syl_.push_back({g, e});
    }
  }

  void append(GWord const& o) {
    if (o.n_ != n_) throw RankMismatch("GWord ranks differ");
    for (auto const& s : o.syl_) push(s.sym, s.exp);
  }

  GWord inverse() const {
    GWord r(n_);
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push(it->sym, -it->exp);
    return r;
  }

  GWord power(int k) const {
    GWord r(n_);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) r.append(k > 0 ? *this : inverse());
    return r;
  }

  // one entry per letter: (symbol, +1 or -1)
  std::vector<std::pair<GSym, int>> letters() const {
    std::vector<std::pair<GSym, int>> out;
    for (auto const& s : syl_)
      for (int i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i) out.emplace_back(s.sym, s.exp < 0 ? -1 : 1);
    return out;
  }

  bool operator==(GWord const&) const = default;
  auto operator<=>(GWord const&) const = default;

 private:
  int n_;
  std::vector<Syllable> syl_;
};

inline GWord operator*(GWord a, GWord const& b) {
  a.append(b);
  return a;
}

inline std::string to_string(GWord const& w) {
  if (w.empty()) return "1";
  std::string out;
  for (auto const& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += to_string(s.sym);
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

namespace detail {

class GWordParser {
 public:
  GWordParser(int n, std::string_view s) : n_(n), s_(s) {}

  GWord parse() {
    GWord w = sequence(false);
    skip_space(s_, pos_);
    if (pos_ != s_.size()) throw ParseError("unexpected ')'", pos_);
    return w;
  }

 private:
  GWord sequence(bool in_group) {
    GWord w(n_);
    for (;;) {
      skip_space(s_, pos_);
      if (pos_ >= s_.size()) {
        if (in_group) throw ParseError("missing ')'", pos_);
        return w;
      }
      char c = s_[pos_];
      if (c == ')') {
        if (!in_group) throw ParseError("unbalanced ')'", pos_);
        return w;
      }
      if (c == '(') {
        ++pos_;
        GWord inner = sequence(true);
        ++pos_;  // ')'
        w.append(inner.power(exponent()));
      } else if (c == '1' && (pos_ + 1 == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;
      } else {
        std::size_t tok = pos_;
        GSym g = symbol();
        int e = exponent();
        try {
          w.push(g, e);
        } catch (IndexError const& err) {
          throw ParseError(err.what(), tok);
        }
      }
    }
  }

  int exponent() {
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return parse_int(s_, pos_, true);
    }
    return 1;
  }

  GSym symbol() {
    std::size_t tok = pos_;
    std::string name;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    std::vector<int> idx;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      idx.push_back(parse_int(s_, pos_, false));
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        idx.push_back(parse_int(s_, pos_, false));
      }
    }
    auto need = [&](std::size_t k) {
      if (idx.size() != k)
        throw ParseError("symbol '" + name + "' expects " + std::to_string(k) + " indices", tok);
    };
    GSym g;
    if (name == "s" && idx.empty()) return GSym::S();
    if (name == "a" && idx.empty()) return GSym::Al();
    if (name == "s") { need(1); g = GSym::s(idx[0]); }
    else if (name == "a") { need(1); g = GSym::a(idx[0]); }
    else if (name == "e") { need(2); g = GSym::e(idx[0], idx[1]); }
    else if (name == "E") { need(3); g = GSym::E(idx[0], idx[1], idx[2]); }
    else if (name == "A") { need(2); g = GSym::A(idx[0], idx[1]); }
    else if (name == "d") { need(1); g = GSym::d(idx[0]); }
    else if (name == "r") { need(1); g = GSym::r(idx[0]); }
    else if (name == "pa") { need(1); g = GSym::pa(idx[0]); }
    else if (name == "P") { need(0); g = GSym::P(); }
    else if (name == "w") { need(0); g = GSym::w(); }
    else if (name == "U") { need(0); g = GSym::U(); }
    else if (name.empty()) throw ParseError(std::string("unexpected character '") + s_[tok] + "'", tok);
    else throw ParseError("unknown symbol '" + name + "'", tok);
    return g;
  }

  int n_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Grammar: `s1 a2 e1,3^-2 A1,4 E1,2,3 d1 r1 pa2 P w U s a`, groups `(s1 s2)^3`.
inline GWord parse_gword(int n, std::string_view s) { return detail::GWordParser(n, s).parse(); }

}  // namespace cbn
