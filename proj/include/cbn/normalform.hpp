#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cbn/error.hpp"
#include "cbn/gword.hpp"
#include "cbn/morphisms.hpp"
#include "cbn/permutation.hpp"
#include "cbn/realize.hpp"

namespace cbn {

inline int level(GSym const& s) {
  if (s.family != Family::eps) throw AlphabetError("level: not an e_i,j symbol: " + to_string(s));
  return std::max(s.idx[0], s.idx[1]) - 1;
}

struct NormalForm {
  int n = 0;
  std::map<int, GWord> components;  // level -> word in generators of that level
  Permutation pi;

  GWord const& component(int l) const { return components.at(l); }
};

// Endo of comp_{n-1} ... comp_1 followed by the permutation automorphism.
inline GWord nf_word(NormalForm const& nf);

inline Endo recompose(NormalForm const& nf) {
  Endo e = realize(nf_word(nf));
  if (nf.pi.size() == nf.n) e = compose(e, permutation_automorphism(nf.pi));
  return e;
}

inline GWord nf_word(NormalForm const& nf) {
  GWord w(nf.n);
  for (int l = nf.n - 1; l >= 1; --l) {
    auto it = nf.components.find(l);
    if (it != nf.components.end()) w.append(it->second);
  }
  return w;
}

namespace nf_detail {

struct ELetter {
  int i, j, s;  // e_i,j^s with s = +1 or -1
  bool operator==(ELetter const&) const = default;
};

inline int lev(ELetter const& x) { return std::max(x.i, x.j) - 1; }

inline void push_reduced(std::vector<ELetter>& w, ELetter x) {
  if (!w.empty() && w.back().i == x.i && w.back().j == x.j && w.back().s == -x.s)
    w.pop_back();
  else
    w.push_back(x);
}

inline std::vector<ELetter> inverse(std::vector<ELetter> const& w) {
  std::vector<ELetter> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->i, it->j, -it->s});
  return r;
}

// g y g^-1 for letters g = e_a,b^s and y = e_c,d^t where y has the higher level.
// With nu = -s the left side reads e_a,b^-nu y e_a,b^nu, which the conjugation rules rewrite.
inline std::vector<ELetter> conjugate(ELetter const& g, ELetter const& y) {
  int i = g.i, j = g.j, nu = -g.s;
  std::vector<ELetter> pos;  // image of y with positive exponent
  int c = y.i, d = y.j;
  bool ci = c == i, cj = c == j, di = d == i, dj = d == j;
  if (!ci && !cj && !di && !dj) {
    pos = {{c, d, 1}};  // rule 1
  } else if (dj && !ci) {
    pos = {{c, d, 1}};  // rule 2: e_k,j
  } else if (di && !cj) {
    int k = c;  // rule 3: e_k,i
    pos = {{k, j, nu}, {k, i, 1}, {k, j, -nu}};
  } else if (ci && !dj) {
    int k = d;  // rule 4: e_i,k
    pos = {{k, j, nu}, {i, k, 1}, {k, j, -nu}};
  } else if (cj && !di) {
    int k = d;  // rule 5: e_j,k -> [e_k,j^-nu, e_i,k] e_j,k
    pos = {{k, j, nu}, {i, k, -1}, {k, j, -nu}, {i, k, 1}, {j, k, 1}};
  } else {
    throw Error("conjugation of a letter by its own pair");
  }
  return y.s > 0 ? pos : inverse(pos);
}

// Multiset measure on the current word at one level: hist[m] counts high letters with m lower
// letters to their left. Compared from the largest m down.
inline bool lex_smaller(std::vector<long> const& a, std::vector<long> const& b) {
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = len; k-- > 0;) {
    long x = k < a.size() ? a[k] : 0, y = k < b.size() ? b[k] : 0;
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace nf_detail

struct DecomposeStats {
  std::size_t rewrite_steps = 0;     // adjacent low/high swaps performed
  bool measure_decreasing = true;    // multiset measure strictly dropped at every swap
  bool level_pure = true;
};

// Splits a word in the e_i,j into components of descending level, pushing each high letter left
// past lower ones with g d = (g d g^-1) g.
inline NormalForm decompose(GWord const& w, DecomposeStats* stats = nullptr) {
  using namespace nf_detail;
  int n = w.rank();
  std::vector<ELetter> cur;
  for (auto const& [sym, s] : w.letters()) {
    if (sym.family != Family::eps) throw AlphabetError("decompose: only e_i,j symbols allowed, got " + to_string(sym));
    if (sym.idx[0] > n || sym.idx[1] > n) throw IndexError("decompose: index out of range for rank " + std::to_string(n));
    cur.push_back({sym.idx[0], sym.idx[1], s});
  }
  NormalForm nf;
  nf.n = n;
  nf.pi = Permutation::identity(n);
  DecomposeStats local;
  DecomposeStats& st = stats ? *stats : local;

  for (int l = n - 1; l >= 2; --l) {
    std::vector<long> hist;
    {
      long lows = 0;
      for (auto const& x : cur) {
        if (lev(x) < l) {
          ++lows;
        } else {
          if (hist.size() <= static_cast<std::size_t>(lows)) hist.resize(lows + 1, 0);
          ++hist[lows];
        }
      }
    }
    std::vector<ELetter> high, low;
    for (auto const& x : cur) {
      if (lev(x) < l) {
        low.push_back(x);
        continue;
      }
      std::vector<ELetter> u{x};
      for (std::size_t k = low.size(); k-- > 0;) {
        std::vector<ELetter> nu;
        for (auto const& y : u)
          for (auto const& z : conjugate(low[k], y)) push_reduced(nu, z);
        auto before = hist;
        hist[k + 1] -= static_cast<long>(u.size());
        hist[k] += static_cast<long>(nu.size());
        ++st.rewrite_steps;
        if (!lex_smaller(hist, before)) st.measure_decreasing = false;
        u = std::move(nu);
        if (u.empty()) break;
      }
      // u now sits left of every low letter
      for (auto const& y : u) push_reduced(high, y);
      if (!hist.empty()) hist[0] = static_cast<long>(high.size());
    }
    GWord comp(n);
    for (auto const& y : high) {
      if (lev(y) != l) st.level_pure = false;
      comp.push(GSym::e(y.i, y.j), y.s);
    }
    nf.components[l] = comp;
    cur = std::move(low);
  }
  if (n >= 2) {
    GWord comp(n);
    for (auto const& y : cur) {
      if (lev(y) != 1) st.level_pure = false;
      comp.push(GSym::e(y.i, y.j), y.s);
    }
    nf.components[1] = comp;
  }
  return nf;
}

namespace nf_detail {

// alpha_k e_i,j = e_{t(i),t(j)} alpha_k with t = (k k+1); certified once per rank.
inline void validate_swap_rules(int n) {
  static std::mutex mu;
  static std::set<int> done;
  std::lock_guard<std::mutex> lock(mu);
  if (done.count(n)) return;
  for (int k = 1; k <= n - 1; ++k) {
    auto t = Permutation::transposition(n, k, k + 1);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        Endo lhs = compose(catalog::alpha(k, n), catalog::eps(i, j, n));
        Endo rhs = compose(catalog::eps(t(i), t(j), n), catalog::alpha(k, n));
        if (!(lhs == rhs))
          throw VerificationFailure("swap rule a" + std::to_string(k) + " e" + std::to_string(i) + "," +
                                    std::to_string(j) + " failed the automorphism check");
      }
  }
  done.insert(n);
}

}  // namespace nf_detail

struct SplitResult {
  GWord cb;
  Permutation pi;
};

// Moves every a_k to the right end: realize(w) = realize(cb) then x_i -> x_{pi(i)}.
inline SplitResult split_permutation(GWord const& w) {
  int n = w.rank();
  nf_detail::validate_swap_rules(n);
  // relabel r sends the indices of a letter read at its original place to its place left of
  // the accumulated permutation
  Permutation pi = Permutation::identity(n), r = Permutation::identity(n);
  GWord cb(n);
  for (auto const& [sym, s] : w.letters()) {
    if (sym.family == Family::alpha) {
      int k = sym.idx[0];
      if (k > n - 1) throw IndexError("split_permutation: a" + std::to_string(k) + " out of range");
      auto t = Permutation::transposition(n, k, k + 1);
      pi = pi.then(t);
      r = r.after(t);
    } else if (sym.family == Family::eps) {
      if (sym.idx[0] > n || sym.idx[1] > n) throw IndexError("split_permutation: index out of range");
      cb.push(GSym::e(r(sym.idx[0]), r(sym.idx[1])), s);
    } else {
      throw AlphabetError("split_permutation: only e_i,j and a_k allowed, got " + to_string(sym));
    }
  }
  return {cb, pi};
}

// Normal form of a word in e_i,j and a_k.
inline NormalForm normal_form(GWord const& w, DecomposeStats* stats = nullptr) {
  auto sp = split_permutation(w);
  NormalForm nf = decompose(sp.cb, stats);
  nf.pi = sp.pi;
  return nf;
}

}  // namespace cbn
