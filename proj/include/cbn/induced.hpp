#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
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
#include "cbn/words.hpp"

namespace cbn {

// --- Malcev combinator ---------------------------------------------------------------------

struct CosetSystem {
  std::vector<GWord> reps;  // reps[0] is the empty word
  std::size_t index() const { return reps.size(); }
};

struct Transition {
  GWord h;  // g_i x = h g_target
  std::size_t target = 0;
};

struct TransitionTable {
  std::map<std::pair<GSym, int>, std::vector<Transition>> rows;  // (generator, sign) -> one entry per rep
};

template <class T>
struct InducedRep {
  std::size_t l = 0, m = 0;
  std::map<std::pair<GSym, int>, Matrix<T>> table;

  std::size_t dim() const { return l * m; }

  Matrix<T> eval(GWord const& w) const {
    Matrix<T> r = Matrix<T>::identity(dim());
    for (auto const& syl : w.syllables()) {
      auto it = table.find({syl.sym, syl.exp < 0 ? -1 : 1});
      if (it == table.end()) throw AlphabetError("induced rep has no image for " + to_string(syl.sym));
      for (int k = 0; k < (syl.exp < 0 ? -syl.exp : syl.exp); ++k) r = r * it->second;
    }
    return r;
  }
};

// x -> diag(subrep(h_1), ..., subrep(h_m)) D(pi_x)
template <class T, class SubRep>
InducedRep<T> malcev_build(SubRep const& subrep, std::size_t l, CosetSystem const& cs, TransitionTable const& tt) {
  std::size_t m = cs.index();
  if (m == 0 || !cs.reps[0].empty()) throw Error("coset system must start with the empty representative");
  InducedRep<T> out;
  out.l = l;
  out.m = m;
  for (auto const& [key, row] : tt.rows) {
    if (row.size() != m) throw DimensionMismatch("transition row for " + to_string(key.first) + " has wrong length");
    std::vector<bool> hit(m, false);
    std::vector<std::tuple<std::size_t, std::size_t, Matrix<T>>> blocks;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t j = row[i].target;
      if (j >= m || hit[j]) throw NotBijective("target map of " + to_string(key.first) + " is not a bijection");
      hit[j] = true;
      Matrix<T> b = subrep(row[i].h);
      if (b.rows() != l || b.cols() != l) throw DimensionMismatch("subgroup representation has the wrong dimension");
      blocks.emplace_back(i, j, std::move(b));
    }
    out.table.emplace(key, block_monomial<T>(blocks, l, m));
  }
  return out;
}

// Pushes w through the representatives starting at rep `start`.
inline std::pair<GWord, std::size_t> traverse(TransitionTable const& tt, GWord const& w, std::size_t start,
                                              int subgroup_rank) {
  GWord h(subgroup_rank);
  std::size_t cur = start;
  for (auto const& [sym, s] : w.letters()) {
    auto it = tt.rows.find({sym, s});
    if (it == tt.rows.end()) throw RewriteStuck("no transition for " + to_string(sym) + (s < 0 ? "^-1" : "") +
                                                " at representative " + std::to_string(cur));
    if (cur >= it->second.size()) throw RewriteStuck("representative " + std::to_string(cur) + " out of range");
    auto const& tr = it->second[cur];
    h.append(tr.h);
    cur = tr.target;
  }
  return {h, cur};
}

// --- coset enumeration ---------------------------------------------------------------------

// letters are +-(1..ngens)
struct FPGroup {
  int ngens = 0;
  std::vector<std::vector<int>> relators;
};

inline int letter_col(int x) { return 2 * ((x < 0 ? -x : x) - 1) + (x < 0 ? 1 : 0); }

struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> next;  // [coset][col], standardized, coset 0 = subgroup
  std::size_t index() const { return next.size(); }
  int act(int c, int x) const { return next[c][letter_col(x)]; }
};

namespace tc_detail {

// HLT strategy with coincidence processing.
class Enumerator {
 public:
  Enumerator(int ngens, std::size_t limit) : cols_(2 * ngens), limit_(limit) { new_coset(); }

  void define(int c, int col) {
    int d = new_coset();
    t_[c][col] = d;
    t_[d][col ^ 1] = c;
  }

  bool alive(int c) const { return p_[c] == c; }
  std::size_t size() const { return t_.size(); }

  void scan_and_fill(int c, std::vector<int> const& w) {
    if (w.empty()) return;
    std::vector<int> cw;
    for (int x : w) cw.push_back(letter_col(x));
    int f = c, b = c;
    long i = 0, j = static_cast<long>(cw.size()) - 1;
    for (;;) {
      while (i <= j && t_[f][cw[i]] >= 0) f = t_[f][cw[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && t_[b][cw[j] ^ 1] >= 0) b = t_[b][cw[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        t_[f][cw[i]] = b;
        t_[b][cw[i] ^ 1] = f;
        return;
      }
      define(f, cw[i]);
    }
  }

  void run(FPGroup const& g, std::vector<std::vector<int>> const& subgroup) {
    for (auto const& w : subgroup) scan_and_fill(0, w);
    for (std::size_t c = 0; c < t_.size(); ++c) {
      for (auto const& r : g.relators) {
        if (!alive(static_cast<int>(c))) break;
        scan_and_fill(static_cast<int>(c), r);
      }
      if (!alive(static_cast<int>(c))) continue;
      for (int x = 0; x < cols_; ++x)
        if (t_[c][x] < 0) define(static_cast<int>(c), x);
    }
  }

  // live cosets renumbered in breadth-first order from coset 0
  CosetTable standardize(int ngens) {
    std::vector<int> num(t_.size(), -1), order;
    num[0] = 0;
    order.push_back(0);
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < cols_; ++x) {
        int d = rep(t_[order[k]][x]);
        if (num[d] < 0) {
          num[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    CosetTable ct;
    ct.ngens = ngens;
    ct.next.assign(order.size(), std::vector<int>(cols_));
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < cols_; ++x) ct.next[k][x] = num[rep(t_[order[k]][x])];
    return ct;
  }

 private:
  int new_coset() {
    if (t_.size() >= limit_) throw Error("coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    t_.emplace_back(cols_, -1);
    p_.push_back(static_cast<int>(p_.size()));
    return static_cast<int>(t_.size()) - 1;
  }

  int rep(int k) {
    int r = k;
    while (p_[r] != r) r = p_[r];
    while (p_[k] != r) {
      int nx = p_[k];
      p_[k] = r;
      k = nx;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& q) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    p_[l] = k;
    q.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> q;
    merge(a, b, q);
    for (std::size_t n = 0; n < q.size(); ++n) {
      int e = q[n];
      for (int x = 0; x < cols_; ++x) {
        int f = t_[e][x];
        if (f < 0) continue;
        t_[f][x ^ 1] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (t_[e1][x] >= 0)
          merge(f1, t_[e1][x], q);
        else if (t_[f1][x ^ 1] >= 0)
          merge(e1, t_[f1][x ^ 1], q);
        else {
          t_[e1][x] = f1;
          t_[f1][x ^ 1] = e1;
        }
      }
    }
  }

  int cols_;
  std::size_t limit_;
  std::vector<std::vector<int>> t_;
  std::vector<int> p_;
};

}  // namespace tc_detail

inline CosetTable enumerate_cosets(FPGroup const& g, std::vector<std::vector<int>> const& subgroup,
                                   std::size_t limit = 2'000'000) {
  tc_detail::Enumerator e(g.ngens, limit);
  e.run(g, subgroup);
  return e.standardize(g.ngens);
}

// --- subgroup labels on the coset graph ----------------------------------------------------

// For a subgroup that is free on the given generators: lab(c, x) is the subgroup element with
// s_c x = lab(c, x) s_{cx}, s_c the breadth-first Schreier representative. Labels are deduced from
// the relator loops and the subgroup generator paths, one unknown at a time.
struct SchreierLabels {
  CosetTable table;
  int rank = 0;                             // rank of the free subgroup
  std::vector<std::vector<int>> schreier;   // Schreier word per coset
  std::vector<Word> label;                  // [coset * ngens + gen-1], positive direction

  Word edge(int c, int x) const {
    if (x > 0) return label[static_cast<std::size_t>(c) * table.ngens + (x - 1)];
    int d = table.act(c, x);
    return inv(label[static_cast<std::size_t>(d) * table.ngens + (-x - 1)]);
  }

  // w = (returned label) s_end
  std::pair<Word, int> trace(std::vector<int> const& w, int start = 0) const {
    Word h(rank);
    int c = start;
    for (int x : w) {
      h.append(edge(c, x));
      c = table.act(c, x);
    }
    return {h, c};
  }
};

inline SchreierLabels deduce_labels(FPGroup const& g, CosetTable const& t,
                                    std::vector<std::vector<int>> const& subgroup_gens) {
  int ng = g.ngens, rank = static_cast<int>(subgroup_gens.size());
  std::size_t m = t.index();
  std::vector<std::optional<Word>> lab(m * ng);
  SchreierLabels out;
  out.table = t;
  out.rank = rank;
  out.schreier.assign(m, {});
  std::vector<bool> seen(m, false);
  seen[0] = true;
  std::queue<int> qu;
  qu.push(0);
  while (!qu.empty()) {
    int c = qu.front();
    qu.pop();
    for (int gi = 1; gi <= ng; ++gi)
      for (int x : {gi, -gi}) {
        int d = t.act(c, x);
        if (seen[d]) continue;
        seen[d] = true;
        out.schreier[d] = out.schreier[c];
        out.schreier[d].push_back(x);
        if (x > 0)
          lab[static_cast<std::size_t>(c) * ng + (x - 1)] = Word(rank);
        else
          lab[static_cast<std::size_t>(d) * ng + (-x - 1)] = Word(rank);
        qu.push(d);
      }
  }

  struct Equation {
    int start;
    std::vector<int> w;
    Word value;
  };
  std::vector<Equation> eqs;
  for (int k = 0; k < rank; ++k) eqs.push_back({0, subgroup_gens[k], Word::generator(rank, k + 1)});
  for (int c = 0; c < static_cast<int>(m); ++c)
    for (auto const& r : g.relators) eqs.push_back({c, r, Word(rank)});

  auto slot = [&](int c, int x) -> std::pair<std::size_t, int> {
    if (x > 0) return {static_cast<std::size_t>(c) * ng + (x - 1), 1};
    return {static_cast<std::size_t>(t.act(c, x)) * ng + (-x - 1), -1};
  };

  std::vector<bool> done(eqs.size(), false);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      if (done[e]) continue;
      auto const& eq = eqs[e];
      std::optional<std::size_t> unknown;
      int usign = 0, count = 0;
      bool several = false;
      Word pre(rank), suf(rank);
      int c = eq.start;
      for (int x : eq.w) {
        auto [s, sg] = slot(c, x);
        if (!lab[s]) {
          if (unknown && *unknown != s) several = true;
          unknown = s;
          usign = sg;
          ++count;
        } else {
          Word v = sg > 0 ? *lab[s] : inv(*lab[s]);
          (unknown ? suf : pre).append(v);
        }
        c = t.act(c, x);
        if (several) break;
      }
      if (several || count > 1) continue;
      done[e] = true;
      if (!unknown) continue;
      // pre L^usign suf = value
      Word v = inv(pre) * eq.value * inv(suf);
      lab[*unknown] = usign > 0 ? v : inv(v);
      progress = true;
    }
  }
  for (std::size_t k = 0; k < lab.size(); ++k)
    if (!lab[k])
      throw RewriteStuck("label of coset " + std::to_string(k / ng) + " under generator " + std::to_string(k % ng + 1) +
                         " is not determined by the relators");
  out.label.reserve(lab.size());
  for (auto& x : lab) out.label.push_back(*x);
  std::size_t bad = 0;
  for (auto const& eq : eqs) {
    auto [h, end] = out.trace(eq.w, eq.start);
    if (!(h == eq.value) || (eq.value.empty() && end != eq.start)) ++bad;
  }
  if (bad) throw VerificationFailure(std::to_string(bad) + " relator loops carry a nontrivial subgroup label");
  return out;
}

// --- Sanov ---------------------------------------------------------------------------------

// words over r1 and pa2
inline ZMat sanov(GWord const& w) {
  ZMat r = ZMat::identity(2);
  for (auto const& syl : w.syllables()) {
    int which = 0;
    if (syl.sym == GSym::r(1)) which = 1;
    if (syl.sym == GSym::pa(2)) which = 2;
    if (!which) throw AlphabetError("sanov: words use r1 and pa2 only; got " + to_string(syl.sym));
    // [[1,2k],[0,1]] is the k-th power
    ZMat g = ZMat::identity(2);
    if (which == 1)
      g(0, 1) = 2 * syl.exp;
    else
      g(1, 0) = 2 * syl.exp;
    r = r * g;
  }
  return r;
}

// --- B_3(P^2) ------------------------------------------------------------------------------

// d1, d2, r1 generate; r2, r3, pa2, pa3 abbreviate words in them.
inline GWord bp2_expand(GWord const& w) {
  if (w.rank() != 3) throw RankMismatch("B_3(P^2) words have rank 3");
  GWord out(3);
  GWord r2 = GWord(3, GSym::d(1), -1) * GWord(3, GSym::r(1)) * GWord(3, GSym::d(1), -1);
  GWord r3 = GWord(3, GSym::d(2), -1) * r2 * GWord(3, GSym::d(2), -1);
  GWord a2(3, GSym::d(1), 2);
  GWord a3 = GWord(3, GSym::d(1), -1) * GWord(3, GSym::d(2), 2) * GWord(3, GSym::d(1));
  for (auto const& syl : w.syllables()) {
    auto const& g = syl.sym;
    if ((g.family == Family::delta && g.idx[0] <= 2) || g == GSym::r(1))
      out.push(g, syl.exp);
    else if (g == GSym::r(2))
      out.append(r2.power(syl.exp));
    else if (g == GSym::r(3))
      out.append(r3.power(syl.exp));
    else if (g == GSym::pa(2))
      out.append(a2.power(syl.exp));
    else if (g == GSym::pa(3))
      out.append(a3.power(syl.exp));
    else
      throw AlphabetError("symbol " + to_string(g) + " is not in B_3(P^2)");
  }
  return out;
}

namespace bp2_detail {

inline std::vector<int> letters_of(GWord const& w) {
  std::vector<int> out;
  for (auto const& [g, s] : bp2_expand(w).letters()) {
    int k = g.family == Family::delta ? g.idx[0] : 3;
    out.push_back(s * k);
  }
  return out;
}

inline std::vector<std::string> const& relator_strings() {
  static std::vector<std::string> const v{
      "d1 d2 d1 d2^-1 d1^-1 d2^-1", "d1 r3 d1^-1 r3^-1",     "d2 r1 d2^-1 r1^-1",
      "r2^-1 r1^-1 r2 r1 d1^-2",    "r3^-1 r2^-1 r3 r2 d2^-2", "d1 d2^2 d1 r1^-2",
  };
  return v;
}

inline GSym gen_sym(int k) { return k <= 2 ? GSym::d(k) : GSym::r(1); }

inline GWord subgroup_word(Word const& h) {
  GWord out(3);
  for (auto const& l : h.letters()) out.push(l.gen == 1 ? GSym::r(1) : GSym::pa(2), l.sign);
  return out;
}

}  // namespace bp2_detail

inline std::vector<GWord> bp2_relators() {
  std::vector<GWord> out;
  for (auto const& s : bp2_detail::relator_strings()) out.push_back(parse_gword(3, s));
  return out;
}

struct Bp2System {
  SchreierLabels labels;
  CosetSystem cs;                 // 48 representatives Q[q] S3[c], index c*8 + q
  std::vector<int> coset_of_rep;  // representative -> enumerated coset
  std::vector<int> rep_of_coset;
  TransitionTable tt;
  InducedRep<Int> rep;            // generator table over d1, d2, r1

  static constexpr std::size_t kIndex = 48;
};

inline std::vector<GWord> bp2_s3_part() {
  std::vector<GWord> v;
  for (auto s : {"1", "d1", "d2", "d2 d1", "d1 d2", "d1 d2 d1"}) v.push_back(parse_gword(3, s));
  return v;
}

inline std::vector<GWord> bp2_q_part() {
  std::vector<GWord> v;
  for (auto s : {"1", "r2", "r2^2", "r2^3", "r3", "r3 r2", "r3 r2^2", "r3 r2^3"}) v.push_back(parse_gword(3, s));
  return v;
}

inline Bp2System build_bp2() {
  using namespace bp2_detail;
  FPGroup g{3, {}};
  for (auto const& r : bp2_relators()) g.relators.push_back(letters_of(r));
  std::vector<std::vector<int>> sub{letters_of(parse_gword(3, "r1")), letters_of(parse_gword(3, "pa2"))};
  CosetTable ct = enumerate_cosets(g, sub);
  if (ct.index() != Bp2System::kIndex)
    throw VerificationFailure("subgroup <r1, d1^2> has index " + std::to_string(ct.index()) + ", expected 48");

  Bp2System sys;
  sys.labels = deduce_labels(g, ct, sub);
  auto S3 = bp2_s3_part();
  auto Q = bp2_q_part();
  std::size_t m = Bp2System::kIndex;
  sys.coset_of_rep.assign(m, -1);
  sys.rep_of_coset.assign(m, -1);
  std::vector<Word> lambda(m, Word(2));
  for (std::size_t c = 0; c < S3.size(); ++c)
    for (std::size_t q = 0; q < Q.size(); ++q) {
      GWord w = Q[q] * S3[c];
      std::size_t i = c * 8 + q;
      auto [h, end] = sys.labels.trace(letters_of(w));
      if (sys.rep_of_coset[end] >= 0)
        throw VerificationFailure("representatives " + to_string(w) + " and " + to_string(sys.cs.reps.at(sys.rep_of_coset[end])) +
                                  " lie in one coset");
      sys.cs.reps.push_back(w);
      sys.coset_of_rep[i] = end;
      sys.rep_of_coset[end] = static_cast<int>(i);
      lambda[i] = h;
    }
  for (int k = 1; k <= 3; ++k)
    for (int s : {1, -1}) {
      std::vector<Transition> row;
      for (std::size_t i = 0; i < m; ++i) {
        int c = sys.coset_of_rep[i], x = s * k;
        int d = ct.act(c, x);
        std::size_t j = static_cast<std::size_t>(sys.rep_of_coset[d]);
        // g_i x = lambda_i s_c x = lambda_i lab(c,x) s_d = lambda_i lab(c,x) lambda_j^-1 g_j
        Word h = lambda[i] * sys.labels.edge(c, x) * inv(lambda[j]);
        row.push_back({subgroup_word(h), j});
      }
      sys.tt.rows[{gen_sym(k), s}] = std::move(row);
    }
  sys.rep = malcev_build<Int>([](GWord const& h) { return sanov(h); }, 2, sys.cs, sys.tt);
  return sys;
}

inline Bp2System const& bp2_system() {
  static Bp2System const sys = build_bp2();
  return sys;
}

// (h over r1, pa2; target representative, 0-based)
inline std::pair<GWord, std::size_t> bp2_rewrite(GWord const& w, std::size_t start = 0) {
  auto const& sys = bp2_system();
  if (start >= sys.cs.index()) throw IndexError("representative " + std::to_string(start) + " out of range");
  return traverse(sys.tt, bp2_expand(w), start, 3);
}

// 96 x 96 image assembled from one rewrite per representative.
inline ZMat bp2_rep(GWord const& w) {
  auto const& sys = bp2_system();
  std::size_t m = sys.cs.index();
  std::vector<std::tuple<std::size_t, std::size_t, ZMat>> blocks;
  GWord e = bp2_expand(w);
  for (std::size_t i = 0; i < m; ++i) {
    auto [h, j] = traverse(sys.tt, e, i, 3);
    blocks.emplace_back(i, j, sanov(h));
  }
  return block_monomial<Int>(blocks, 2, m);
}

// Same image as a product of generator matrices.
inline ZMat bp2_rep_product(GWord const& w) { return bp2_system().rep.eval(bp2_expand(w)); }

// delta_i -> (i i+1), rho_j -> identity
inline Permutation s3_image(GWord const& w) {
  Permutation p = Permutation::identity(3);
  for (auto const& [g, s] : bp2_expand(w).letters())
    if (g.family == Family::delta) p = p.then(Permutation::transposition(3, g.idx[0], g.idx[0] + 1));
  return p;
}

// target representative of each start representative under w
inline std::vector<std::size_t> bp2_block_permutation(ZMat const& m) {
  std::size_t k = m.rows() / 2;
  std::vector<std::size_t> out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k && out[i] == k; ++c)
      if (m(2 * i, 2 * c) != 0 || m(2 * i, 2 * c + 1) != 0 || m(2 * i + 1, 2 * c) != 0 || m(2 * i + 1, 2 * c + 1) != 0)
        out[i] = c;
  for (auto j : out)
    if (j == k) throw Error("zero block row");
  return out;
}

inline GWord random_bp2_word(std::mt19937_64& rng, std::size_t max_len, bool allow_empty = true) {
  std::uniform_int_distribution<std::size_t> len(allow_empty ? 0 : 1, max_len);
  std::uniform_int_distribution<int> gen(1, 3), sgn(0, 1);
  GWord w(3);
  std::size_t L = len(rng);
  for (std::size_t k = 0; k < L; ++k) w.push(bp2_detail::gen_sym(gen(rng)), sgn(rng) ? 1 : -1);
  return w;
}

// projective suites are checked through bp2_rep
inline SuiteReport verify_bp2_suite(Suite const& s) {
  std::function<ZMat(GWord const&)> eval = [](GWord const& w) { return bp2_rep(w); };
  return check_suite<ZMat>(s, 3, eval);
}

// --- small instances -----------------------------------------------------------------------

// Z = <d1> over 2Z = <r1>, r1 -> (t^2), representatives 1 and d1.
inline InducedRep<LPoly> malcev_toy() {
  CosetSystem cs{{GWord(1), GWord(1, GSym::d(1))}};
  TransitionTable tt;
  tt.rows[{GSym::d(1), 1}] = {{GWord(1), 1}, {GWord(1, GSym::r(1)), 0}};
  tt.rows[{GSym::d(1), -1}] = {{GWord(1, GSym::r(1), -1), 1}, {GWord(1), 0}};
  auto sub = [](GWord const& h) {
    int k = 0;
    for (auto const& syl : h.syllables()) {
      if (!(syl.sym == GSym::r(1))) throw AlphabetError("toy subgroup is generated by r1");
      k += syl.exp;
    }
    RMat m(1, 1);
    m(0, 0) = LPoly::t(2 * k);
    return m;
  };
  return malcev_build<LPoly>(sub, 1, cs, tt);
}

inline Int m0n_dim(int n) {
  if (n < 4) throw IndexError("m0n_dim needs n >= 4");
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Int(n - 1) * (n - 2) * f / 2;
}

// index used for the sphere braid group, twice the mapping class group one
inline Int sphere_index(int n) { return 2 * m0n_dim(n); }

}  // namespace cbn
