#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cbn/error.hpp"
#include "cbn/gword.hpp"
#include "cbn/morphisms.hpp"

namespace cbn {

// Replace the bare symbols s and a by s_1 ... s_{n-1} and a_{n-1} ... a_1.
inline GWord four_gen_expand(GWord const& w) {
  int n = w.rank();
  if (n < 3) throw IndexError("four-generator form needs n >= 3");
  GWord out(n);
  for (auto const& syl : w.syllables()) {
    if (syl.sym.family == Family::sigma_all || syl.sym.family == Family::alpha_all) {
      GWord base(n);
      if (syl.sym.family == Family::sigma_all)
        for (int k = 1; k <= n - 1; ++k) base.push(GSym::s(k), 1);
      else
        for (int k = n - 1; k >= 1; --k) base.push(GSym::a(k), 1);
      out.append(base.power(syl.exp));
    } else {
      out.push(syl.sym, syl.exp);
    }
  }
  return out;
}

inline bool has_bare_symbols(GWord const& w) {
  for (auto const& s : w.syllables())
    if (s.sym.family == Family::sigma_all || s.sym.family == Family::alpha_all) return true;
  return false;
}

// Catalog image of one letter under the conjugating reading.
inline Endo generator_endo(GSym const& g, int sign, int n) {
  auto const& x = g.idx;
  switch (g.family) {
    case Family::sigma:
      return sign > 0 ? catalog::sigma(x[0], n) : catalog::sigma_inv(x[0], n);
    case Family::alpha:
      return catalog::alpha(x[0], n);
    case Family::eps:
      return sign > 0 ? catalog::eps(x[0], x[1], n) : catalog::eps_inv(x[0], x[1], n);
    case Family::eps3:
      return sign > 0 ? catalog::eps3(x[0], x[1], x[2], n) : catalog::eps3_inv(x[0], x[1], x[2], n);
    case Family::pure:
      return sign > 0 ? catalog::a_rs(x[0], x[1], n) : catalog::a_rs_inv(x[0], x[1], n);
    case Family::P:
    case Family::omega:
    case Family::U:
      if (n != 2) throw IndexError(to_string(g) + " is only defined on F_2");
      if (g.family == Family::P) return catalog::P();
      if (g.family == Family::omega) return catalog::omega();
      return sign > 0 ? catalog::U() : catalog::U_inv();
    default:
      throw AlphabetError("symbol " + to_string(g) + " has no automorphism of F_n");
  }
}

// Same, but a1, a2, a3 are the Aut(F2) generators alpha_1..alpha_3.
inline Endo autf2_generator_endo(GSym const& g, int sign) {
  if (g.family == Family::alpha) {
    switch (g.idx[0]) {
      case 1: return sign > 0 ? catalog::alpha1() : catalog::alpha1_inv();
      case 2: return sign > 0 ? catalog::alpha2() : catalog::alpha2_inv();
      case 3: return sign > 0 ? catalog::alpha3() : catalog::alpha3_inv();
      default: throw IndexError("Aut(F2) generator a" + std::to_string(g.idx[0]) + " out of range");
    }
  }
  if (g.family == Family::P || g.family == Family::omega || g.family == Family::U) return generator_endo(g, sign, 2);
  throw AlphabetError("symbol " + to_string(g) + " is not an Aut(F2) generator");
}

namespace detail {

// Folds from the right: suffix automorphisms of normal-form words stay far shorter than prefixes.
template <class GenFn>
Endo realize_with(GWord const& w, int n, GenFn gen) {
  std::map<std::pair<GSym, int>, Endo> cache;
  Endo r(n);
  auto const& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    int sign = it->exp < 0 ? -1 : 1;
    auto key = std::make_pair(it->sym, sign);
    auto c = cache.find(key);
    if (c == cache.end()) c = cache.emplace(key, gen(it->sym, sign)).first;
    for (int k = 0; k < (it->exp < 0 ? -it->exp : it->exp); ++k) r = compose(c->second, r);
  }
  return r;
}

}  // namespace detail

// Right action: the leftmost letter acts first.
inline Endo realize(GWord const& w) {
  int n = w.rank();
  GWord src = has_bare_symbols(w) ? four_gen_expand(w) : w;
  return detail::realize_with(src, n, [n](GSym const& g, int sign) { return generator_endo(g, sign, n); });
}

// Aut(F2) reading over {a1, a2, a3, w, P, U}.
inline Endo realize_autf2(GWord const& w) {
  return detail::realize_with(w, 2, [](GSym const& g, int sign) { return autf2_generator_endo(g, sign); });
}

// Restricted to the alphabet {a1, a2, a3, w}.
inline Endo autf2_endo(GWord const& w) {
  for (auto const& s : w.syllables())
    if (!(s.sym.family == Family::omega || (s.sym.family == Family::alpha && s.sym.idx[0] >= 1 && s.sym.idx[0] <= 3)))
      throw AlphabetError("autf2 words use a1, a2, a3, w only; got " + to_string(s.sym));
  return realize_autf2(w);
}

}  // namespace cbn
