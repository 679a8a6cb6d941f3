#pragma once

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cbn/error.hpp"

namespace cbn {

struct Letter {
  int gen = 1;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }
  bool cancels(Letter const& o) const { return gen == o.gen && sign == -o.sign; }
  auto operator<=>(Letter const&) const = default;
};

// Freely reduced word in F_n. The rank travels with the word.
class Word {
 public:
  explicit Word(int n = 0) : n_(n) {}

  Word(int n, std::vector<Letter> const& letters) : n_(n) {
    letters_.reserve(letters.size());
    for (auto const& l : letters) push(l);
  }

  Word(int n, std::initializer_list<int> signed_gens) : n_(n) {
    for (int g : signed_gens) push(Letter{g < 0 ? -g : g, g < 0 ? -1 : 1});
  }

  static Word generator(int n, int i, int e = 1) {
    Word w(n);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) w.push(Letter{i, e < 0 ? -1 : 1});
    return w;
  }

  int rank() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty(); }
  std::vector<Letter> const& letters() const { return letters_; }
  Letter const& operator[](std::size_t k) const { return letters_[k]; }

  // append with cancellation; the only way letters enter a Word
  void push(Letter l) {
    if (l.gen < 1 || l.gen > n_)
      throw IndexError("generator x" + std::to_string(l.gen) + " out of range for rank " +
                       std::to_string(n_));
    if (l.sign != 1 && l.sign != -1) throw IndexError("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().cancels(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  void append(Word const& v) {
    if (v.n_ != n_) throw RankMismatch("rank " + std::to_string(n_) + " vs " + std::to_string(v.n_));
    for (auto const& l : v.letters_) push(l);
  }

  void append_inverse(Word const& v) {
    if (v.n_ != n_) throw RankMismatch("rank " + std::to_string(n_) + " vs " + std::to_string(v.n_));
    for (auto it = v.letters_.rbegin(); it != v.letters_.rend(); ++it) push(it->inverse());
  }

  auto operator<=>(Word const&) const = default;
  bool operator==(Word const&) const = default;

 private:
  int n_;
  std::vector<Letter> letters_;
};

inline Word reduce(int n, std::vector<Letter> const& letters) { return Word(n, letters); }

inline void require_same_rank(Word const& u, Word const& v) {
  if (u.rank() != v.rank())
    throw RankMismatch("rank " + std::to_string(u.rank()) + " vs " + std::to_string(v.rank()));
}

inline Word mul(Word const& u, Word const& v) {
  require_same_rank(u, v);
  Word r = u;
  r.append(v);
  return r;
}

inline Word inv(Word const& u) {
  Word r(u.rank());
  r.append_inverse(u);
  return r;
}

inline Word operator*(Word const& u, Word const& v) { return mul(u, v); }

inline Word power(Word const& u, int k) {
  Word r(u.rank());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) {
    if (k > 0)
      r.append(u);
    else
      r.append_inverse(u);
  }
  return r;
}

// [a,b] = a^-1 b^-1 a b
inline Word commutator(Word const& a, Word const& b) {
  require_same_rank(a, b);
  Word r(a.rank());
  r.append_inverse(a);
  r.append_inverse(b);
  r.append(a);
  r.append(b);
  return r;
}

struct CyclicReduction {
  Word f;     // conjugator: w = f^-1 core f
  Word core;  // cyclically reduced
};

inline CyclicReduction cyclic_reduce(Word const& w) {
  auto const& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  int n = w.rank();
  Word core(n), f(n);
  for (std::size_t k = lo; k < hi; ++k) core.push(ls[k]);
  for (std::size_t k = hi; k < ls.size(); ++k) f.push(ls[k]);
  return {f, core};
}

inline Word product_of_generators(int n) {
  Word w(n);
  for (int i = 1; i <= n; ++i) w.push(Letter{i, 1});
  return w;
}

// `x1 x2^-1 x1^3`; identity prints as `1`
inline std::string to_string(Word const& w) {
  if (w.empty()) return "1";
  std::string out;
  auto const& ls = w.letters();
  for (std::size_t k = 0; k < ls.size();) {
    std::size_t run = 1;
    while (k + run < ls.size() && ls[k + run] == ls[k]) ++run;
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(ls[k].gen);
    long e = static_cast<long>(run) * ls[k].sign;
    if (e != 1) out += '^' + std::to_string(e);
    k += run;
  }
  return out;
}

namespace detail {

inline int parse_int(std::string_view s, std::size_t& pos, bool allow_sign) {
  std::size_t start = pos;
  bool neg = false;
  if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError("expected integer", start);
  long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1000000000L) throw ParseError("integer too large", start);
    ++pos;
  }
  return static_cast<int>(neg ? -v : v);
}

inline void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace detail

inline Word parse_word(int n, std::string_view s) {
  Word w(n);
  std::size_t pos = 0;
  detail::skip_space(s, pos);
  while (pos < s.size()) {
    std::size_t tok = pos;
    if (s[pos] == '1' && (pos + 1 == s.size() || std::isspace(static_cast<unsigned char>(s[pos + 1])))) {
      ++pos;
    } else if (s[pos] == 'x') {
      ++pos;
      int g = detail::parse_int(s, pos, false);
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = detail::parse_int(s, pos, true);
      }
      if (g < 1 || g > n)
        throw ParseError("generator x" + std::to_string(g) + " out of range for rank " + std::to_string(n), tok);
      w.append(Word::generator(n, g, e));
    } else {
      throw ParseError(std::string("unexpected character '") + s[pos] + "'", pos);
    }
    detail::skip_space(s, pos);
  }
  return w;
}

}  // namespace cbn

template <>
struct std::hash<cbn::Word> {
  std::size_t operator()(cbn::Word const& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9E3779B97F4A7C15ull;
    for (auto const& l : w.letters())
      h = (h ^ static_cast<std::size_t>(l.gen * 2 + (l.sign > 0))) * 0x100000001B3ull;
    return h;
  }
};
