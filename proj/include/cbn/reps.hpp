#pragma once

#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cbn/error.hpp"
#include "cbn/gword.hpp"
#include "cbn/lpoly.hpp"
#include "cbn/matrix.hpp"
#include "cbn/permutation.hpp"
#include "cbn/presentations.hpp"
#include "cbn/realize.hpp"

namespace cbn {

namespace rep_detail {
inline void check_i(int i, int n, char const* what) {
  if (n < 2 || i < 1 || i > n - 1)
    throw IndexError(std::string(what) + ": index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
}
inline LPoly one_minus_q() { return LPoly(1) - LPoly::q(); }
}  // namespace rep_detail

// Burau on w_1..w_n, rows are images of basis vectors.
inline RMat burau_sigma(int i, int n, bool inv = false) {
  rep_detail::check_i(i, n, "burau_sigma");
  RMat m = RMat::identity(n);
  std::size_t a = i - 1, b = i;
  m(a, a) = 0;
  m(b, b) = 0;
  if (!inv) {
    m(a, a) = rep_detail::one_minus_q();
    m(a, b) = LPoly::q();
    m(b, a) = 1;
  } else {
    m(a, b) = 1;
    m(b, a) = LPoly::q(-1);
    m(b, b) = LPoly(1) - LPoly::q(-1);
  }
  return m;
}

inline RMat burau_alpha(int i, int n) {
  rep_detail::check_i(i, n, "burau_alpha");
  RMat m = RMat::identity(n);
  std::size_t a = i - 1, b = i;
  m(a, a) = 0;
  m(b, b) = 0;
  m(a, b) = 1;
  m(b, a) = 1;
  return m;
}

// 0-based row of v_ij, lexicographic on (i, j), i < j.
inline std::size_t lk_index(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw IndexError("lk_index: need 1 <= i < j <= n, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return static_cast<std::size_t>((i - 1) * n - (i - 1) * i / 2 + (j - i - 1));
}

inline std::size_t lk_dim(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

namespace rep_detail {

// Row-by-row builder: the vectors not mentioned are fixed.
struct LKBuilder {
  int n;
  RMat m;
  explicit LKBuilder(int n_) : n(n_), m(RMat::identity(lk_dim(n_))) {}
  void row(int a, int b, std::vector<std::tuple<int, int, LPoly>> const& image) {
    std::size_t r = lk_index(a, b, n);
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = 0;
    for (auto const& [x, y, c] : image) m(r, lk_index(x, y, n)) += c;
  }
};

inline LPoly t_(int k = 1) { return LPoly::t(k); }
inline LPoly q_(int k = 1) { return LPoly::q(k); }

}  // namespace rep_detail

inline RMat lk_sigma(int i, int n) {
  using namespace rep_detail;
  check_i(i, n, "lk_sigma");
  LKBuilder b(n);
  LPoly q = q_(), t = t_();
  for (int k = 1; k < i; ++k) {
    b.row(k, i, {{k, i, 1 - q}, {k, i + 1, q}, {i, i + 1, q * (q - 1)}});
    b.row(k, i + 1, {{k, i, 1}});
  }
  b.row(i, i + 1, {{i, i + 1, t * q * q}});
  for (int l = i + 2; l <= n; ++l) {
    b.row(i, l, {{i, i + 1, t * q * (q - 1)}, {i, l, 1 - q}, {i + 1, l, q}});
    b.row(i + 1, l, {{i, l, 1}});
  }
  return b.m;
}

inline RMat lk_sigma_inv(int i, int n) {
  using namespace rep_detail;
  check_i(i, n, "lk_sigma_inv");
  LKBuilder b(n);
  LPoly q = q_(), qi = q_(-1), ti = t_(-1);
  for (int k = 1; k < i; ++k) {
    b.row(k, i, {{k, i + 1, 1}});
    b.row(k, i + 1, {{k, i, qi}, {k, i + 1, (q - 1) * qi}, {i, i + 1, -(q - 1) * ti * q_(-2)}});
  }
  b.row(i, i + 1, {{i, i + 1, ti * q_(-2)}});
  for (int l = i + 2; l <= n; ++l) {
    b.row(i, l, {{i + 1, l, 1}});
    b.row(i + 1, l, {{i, i + 1, -(q - 1) * q_(-2)}, {i, l, qi}, {i + 1, l, (q - 1) * qi}});
  }
  return b.m;
}

// a_{i,i+1} = s_i^2, the separately printed table
inline RMat lk_asq(int i, int n) {
  using namespace rep_detail;
  check_i(i, n, "lk_asq");
  LKBuilder b(n);
  LPoly q = q_(), t = t_();
  LPoly a = q * q - q + 1, c = t * q * q - q + 1;
  for (int k = 1; k < i; ++k) {
    b.row(k, i, {{k, i, a}, {k, i + 1, q * (1 - q)}, {i, i + 1, q * (q - 1) * c}});
    b.row(k, i + 1, {{k, i, 1 - q}, {k, i + 1, q}, {i, i + 1, q * (q - 1)}});
  }
  b.row(i, i + 1, {{i, i + 1, t * t * q_(4)}});
  for (int l = i + 2; l <= n; ++l) {
    b.row(i, l, {{i, i + 1, t * q * (q - 1) * c}, {i, l, a}, {i + 1, l, q * (1 - q)}});
    b.row(i + 1, l, {{i, i + 1, t * q * (q - 1)}, {i, l, 1 - q}, {i + 1, l, q}});
  }
  return b.m;
}

// alpha_i scaled by x = t^(xexp12/12) on the moved vectors
inline RMat lk_alpha_x(int i, int n, int xexp12) {
  using namespace rep_detail;
  check_i(i, n, "lk_alpha_x");
  LKBuilder b(n);
  LPoly x = LPoly::mono12(xexp12, 0), xi = LPoly::mono12(-xexp12, 0);
  for (int k = 1; k < i; ++k) {
    b.row(k, i, {{k, i + 1, x}});
    b.row(k, i + 1, {{k, i, xi}});
  }
  for (int l = i + 2; l <= n; ++l) {
    b.row(i, l, {{i + 1, l, x}});
    b.row(i + 1, l, {{i, l, xi}});
  }
  return b.m;
}

inline RMat lk_alpha(int i, int n) { return lk_alpha_x(i, n, 0); }

// --- representations as generator tables -------------------------------------------------

struct RepSpec {
  std::string name;
  int n = 0;
  std::size_t dim = 0;
  std::map<std::pair<GSym, int>, RMat> table;  // (symbol, sign) -> image

  bool admits(GSym const& g) const { return table.count({g, 1}) && table.count({g, -1}); }
  void set(GSym const& g, RMat m, RMat minv) {
    table[{g, 1}] = std::move(m);
    table[{g, -1}] = std::move(minv);
  }
};

namespace rep_detail {

// bare s, a and A_r,s rewritten into the table alphabet
inline GWord expand_for(RepSpec const& spec, GWord const& w) {
  GWord src = has_bare_symbols(w) ? four_gen_expand(w) : w;
  GWord out(w.rank());
  for (auto const& syl : src.syllables()) {
    if (syl.sym.family == Family::pure && !spec.admits(syl.sym)) {
      int r = syl.sym.idx[0], s = syl.sym.idx[1];
      if (!(1 <= r && r < s && s <= w.rank())) throw IndexError("A" + std::to_string(r) + "," + std::to_string(s) + " out of range");
      GWord a(w.rank());
      for (int k = s - 1; k > r; --k) a.push(GSym::s(k), 1);
      a.push(GSym::s(r), 2);
      for (int k = r + 1; k < s; ++k) a.push(GSym::s(k), -1);
      out.append(a.power(syl.exp));
    } else {
      out.push(syl.sym, syl.exp);
    }
  }
  return out;
}

}  // namespace rep_detail

inline RMat rep_eval(RepSpec const& spec, GWord const& w) {
  if (w.rank() != spec.n)
    throw RankMismatch("word of rank " + std::to_string(w.rank()) + " for " + spec.name + " at n=" + std::to_string(spec.n));
  GWord src = rep_detail::expand_for(spec, w);
  RMat r = RMat::identity(spec.dim);
  for (auto const& syl : src.syllables()) {
    int sign = syl.exp < 0 ? -1 : 1;
    auto it = spec.table.find({syl.sym, sign});
    if (it == spec.table.end()) throw AlphabetError("symbol " + to_string(syl.sym) + " is not admissible in " + spec.name);
    for (int k = 0; k < (syl.exp < 0 ? -syl.exp : syl.exp); ++k) r = r * it->second;
  }
  return r;
}

inline RepSpec burau_spec(int n, bool with_alpha = false) {
  RepSpec s{with_alpha ? "burau_ext" : "burau", n, static_cast<std::size_t>(n), {}};
  for (int i = 1; i <= n - 1; ++i) {
    s.set(GSym::s(i), burau_sigma(i, n), burau_sigma(i, n, true));
    if (with_alpha) s.set(GSym::a(i), burau_alpha(i, n), burau_alpha(i, n));
  }
  return s;
}

inline RepSpec lk_spec(int n) {
  if (n < 2) throw IndexError("lk needs n >= 2");
  RepSpec s{"lk", n, lk_dim(n), {}};
  for (int i = 1; i <= n - 1; ++i) {
    s.set(GSym::s(i), lk_sigma(i, n), lk_sigma_inv(i, n));
    // printed square table, inverse as the square of the inverse table
    RMat inv = lk_sigma_inv(i, n);
    s.set(GSym::A(i, i + 1), lk_asq(i, n), inv * inv);
  }
  return s;
}

// Conjugating extension: sigma from LK (optionally at t=1), alpha scaled by t^(xexp12/12).
inline RepSpec lk_c_spec(std::string name, int n, bool t_one, int xexp12) {
  if (n < 2) throw IndexError(name + " needs n >= 2");
  RepSpec s{std::move(name), n, lk_dim(n), {}};
  std::optional<Rational> t;
  if (t_one) t = Rational(1);
  for (int i = 1; i <= n - 1; ++i) {
    RMat a = lk_sigma(i, n), ai = lk_sigma_inv(i, n);
    if (t_one) {
      a = specialize(a, t, std::nullopt);
      ai = specialize(ai, t, std::nullopt);
    }
    s.set(GSym::s(i), a, ai);
    RMat x = lk_alpha_x(i, n, xexp12);  // an involution for every x
    s.set(GSym::a(i), x, x);
  }
  return s;
}

inline RepSpec lk_ext_t1_spec(int n) { return lk_c_spec("lk_ext_t1", n, true, 0); }

// Relation images under a rep over the C_n suites (sigma and alpha only).
inline SuiteReport verify_rep_suite(RepSpec const& spec, Suite const& suite) {
  std::function<RMat(GWord const&)> eval = [&](GWord const& w) { return rep_eval(spec, w); };
  return check_suite<RMat>(suite, spec.n, eval);
}

inline std::vector<std::string> const& c_suite_names() {
  static std::vector<std::string> const v{"braid", "symmetric", "c_relations"};
  return v;
}

inline constexpr int kXExp12 = -4;  // x = t^(-1/3)

// n = 3: sigma symbolic, alpha scaled by t^(-1/3), verified on construction.
inline RepSpec lk_c3_table() {
  RepSpec s = lk_c_spec("lk_c3", 3, false, kXExp12);
  for (auto const& name : c_suite_names()) {
    auto rep = verify_rep_suite(s, find_suite(name));
    if (!rep.verified())
      throw VerificationFailure("lk_c3: suite " + name + " has " + std::to_string(rep.failing_pairs()) +
                                " failing relation images");
  }
  return s;
}

// Coefficient of v_{i+1,i+2} in v_{i,i+2} under s_i a_{i+1} a_i minus a_{i+1} a_i s_{i+1}.
inline LPoly prop52_obstruction(int i, int n) {
  if (n < 3 || i < 1 || i > n - 2) throw IndexError("prop52_obstruction: need n >= 3 and 1 <= i <= n-2");
  RMat l = lk_sigma(i, n) * lk_alpha(i + 1, n) * lk_alpha(i, n);
  RMat r = lk_alpha(i + 1, n) * lk_alpha(i, n) * lk_sigma(i + 1, n);
  std::size_t row = lk_index(i, i + 2, n), col = lk_index(i + 1, i + 2, n);
  return l(row, col) - r(row, col);
}

// --- Aut(F2) in dimension 12 ---------------------------------------------------------------

inline LPoly autf2_mu() { return LPoly::mono12(-2, -8); }  // t^(-1/6) q^(-2/3)

namespace rep_detail {

struct Autf2Tables {
  RMat rho[4], rho_inv[4];  // index 1..3, scaled by mu
  RMat alpha[4], alpha_inv[4], omega;
};

inline Autf2Tables const& autf2_tables() {
  static Autf2Tables const tb = [] {
    Autf2Tables t;
    LPoly mu = autf2_mu(), mui = LPoly::mono12(2, 8);
    for (int i = 1; i <= 3; ++i) {
      t.rho[i] = mat_scalar(mu, lk_sigma(i, 4));
      t.rho_inv[i] = mat_scalar(mui, lk_sigma_inv(i, 4));
      t.alpha[i] = block_diag<LPoly>({t.rho[i], t.rho_inv[i]});
      t.alpha_inv[i] = block_diag<LPoly>({t.rho_inv[i], t.rho[i]});
    }
    RMat c = t.rho[3] * t.rho[1], ci = t.rho_inv[1] * t.rho_inv[3];
    t.omega = block_monomial<LPoly>({{0, 1, c}, {1, 0, ci}}, 6, 2);
    return t;
  }();
  return tb;
}

}  // namespace rep_detail

inline RepSpec autf2_spec() {
  auto const& tb = rep_detail::autf2_tables();
  RepSpec s{"autf2", 2, 12, {}};
  for (int i = 1; i <= 3; ++i) s.set(GSym::a(i), tb.alpha[i], tb.alpha_inv[i]);
  s.set(GSym::w(), tb.omega, tb.omega);
  return s;
}

inline RMat autf2_psi(GWord const& w) {
  static RepSpec const spec = autf2_spec();
  for (auto const& syl : w.syllables())
    if (!spec.admits(syl.sym)) throw AlphabetError("autf2 words use a1, a2, a3, w only; got " + to_string(syl.sym));
  GWord w2(2, w.syllables());
  return rep_eval(spec, w2);
}

// Rep by CLI name; the induced ones live in induced.hpp.
inline RepSpec make_rep(std::string const& name, int n) {
  if (name == "burau") return burau_spec(n);
  if (name == "burau_ext") return burau_spec(n, true);
  if (name == "lk") return lk_spec(n);
  if (name == "lk_ext_t1") return lk_ext_t1_spec(n);
  if (name == "lk_c3") {
    if (n != 3) throw IndexError("lk_c3 is defined for n = 3 only");
    return lk_c3_table();
  }
  if (name == "autf2") {
    if (n != 2) throw IndexError("autf2 is defined for n = 2 only");
    return autf2_spec();
  }
  throw Error("unknown representation '" + name + "'");
}

// One alpha word per element of S_n, found breadth first (shortest words).
inline std::vector<std::pair<Permutation, GWord>> symmetric_group_words(int n) {
  std::vector<std::pair<Permutation, GWord>> out;
  std::set<std::vector<int>> seen;
  std::queue<std::pair<Permutation, GWord>> qu;
  qu.push({Permutation::identity(n), GWord(n)});
  seen.insert(Permutation::identity(n).one_line());
  while (!qu.empty()) {
    auto [p, w] = qu.front();
    qu.pop();
    out.push_back({p, w});
    for (int k = 1; k <= n - 1; ++k) {
      Permutation p2 = p.then(Permutation::transposition(n, k, k + 1));
      if (!seen.insert(p2.one_line()).second) continue;
      GWord w2 = w;
      w2.push(GSym::a(k), 1);
      qu.push({p2, w2});
    }
  }
  return out;
}

}  // namespace cbn
