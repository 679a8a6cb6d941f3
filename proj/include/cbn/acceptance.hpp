#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cbn/induced.hpp"
#include "cbn/normalform.hpp"
#include "cbn/presentations.hpp"
#include "cbn/reps.hpp"

namespace cbn {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

namespace acc_detail {

struct Detail {
  std::ostringstream os;
  bool first = true;
  template <class T>
  Detail& operator<<(T const& v) {
    os << v;
    return *this;
  }
  void item(std::string const& s) {
    if (!first) os << "; ";
    first = false;
    os << s;
  }
};

inline std::string suite_line(SuiteReport const& r) {
  std::ostringstream os;
  os << r.suite << "@" << r.n << " " << r.total_pairs << " pairs";
  std::size_t bad = 0;
  for (auto const& g : r.groups)
    if (!g.holds()) ++bad;
  if (bad) os << ", " << bad << " relations FAIL";
  for (auto const& g : r.groups)
    if (g.variants.size() > 1) {
      auto v = g.holding_variant();
      os << ", " << g.group << " holds as '" << (v ? *v : std::string("none")) << "'";
    }
  return os.str();
}

inline GWord random_cb_word(std::mt19937_64& rng, int n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, n), sgn(0, 1);
  GWord w(n);
  std::size_t L = len(rng);
  while (w.length() < L) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    w.push(GSym::e(i, j), sgn(rng) ? 1 : -1);
  }
  return w;
}

inline GWord random_c_word(std::mt19937_64& rng, int n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, n - 1), fam(0, 1), sgn(0, 1);
  GWord w(n);
  std::size_t L = len(rng);
  for (std::size_t k = 0; k < L; ++k) {
    int i = idx(rng);
    if (fam(rng))
      w.push(GSym::s(i), sgn(rng) ? 1 : -1);
    else
      w.push(GSym::a(i), 1);
  }
  return w;
}

// underlying permutation of a word in s_i, a_i as a 0-based sequence (row k -> column seq[k])
inline std::vector<std::size_t> underlying_perm(GWord const& w) {
  Permutation p = Permutation::identity(w.rank());
  for (auto const& [g, s] : w.letters()) p = p.then(Permutation::transposition(w.rank(), g.idx[0], g.idx[0] + 1));
  std::vector<std::size_t> seq;
  for (int k = 1; k <= w.rank(); ++k) seq.push_back(static_cast<std::size_t>(p(k) - 1));
  return seq;
}

inline std::string matrix_key(RMat const& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s += to_string(m(i, j));
      s += '|';
    }
  return s;
}

}  // namespace acc_detail

inline CriterionResult criterion_relation_suites() {
  CriterionResult r{1, "relation suites verify as automorphisms, n = 3..6", true, "", 0};
  acc_detail::Detail d;
  std::size_t pairs = 0;
  std::set<std::string> variant_notes;
  for (auto const* name : {"braid", "pure", "mccool", "symmetric", "lemma41", "lemma31", "pure_eps", "d2"})
    for (int n = 3; n <= 6; ++n) {
      auto rep = verify_suite(name, n);
      pairs += rep.total_pairs;
      if (!rep.verified()) {
        r.pass = false;
        d.item(acc_detail::suite_line(rep));
      }
      for (auto const& g : rep.groups)
        if (g.variants.size() > 1) {
          auto v = g.holding_variant();
          variant_notes.insert(g.group + " holds as '" + (v ? *v : std::string("none")) + "'");
        }
    }
  d.item(std::to_string(pairs) + " pairs checked");
  for (auto const& s : variant_notes) d.item(s);
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_mixed_suite() {
  CriterionResult r{2, "mixed suite: a reading of the middle permutation relation holds, n = 3..5", true, "", 0};
  acc_detail::Detail d;
  for (int n = 3; n <= 5; ++n) {
    auto rep = verify_suite("mixed", n);
    if (!rep.verified()) r.pass = false;
    auto const* g = rep.group("(17b)");
    std::string s = "n=" + std::to_string(n) + ":";
    for (auto const& v : g->variants)
      s += " '" + v.variant + "' " + (v.holds() ? "holds" : std::to_string(v.failures.size()) + "/" + std::to_string(v.pairs) + " fail");
    if (!rep.verified()) s += " [other relations fail]";
    d.item(s);
  }
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_four_generator() {
  CriterionResult r{3, "four-generator presentation verifies after expansion, n = 4, 5", true, "", 0};
  acc_detail::Detail d;
  for (int n = 4; n <= 5; ++n) {
    auto rep = verify_suite("prop43", n);
    if (!rep.verified()) r.pass = false;
    d.item(acc_detail::suite_line(rep));
  }
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_normal_form(std::uint64_t seed) {
  CriterionResult r{4, "normal form of 200 random basis-conjugating words (n=4, length <= 25)", true, "", 0};
  std::mt19937_64 rng(seed);
  std::size_t bad_round = 0, impure = 0, nondecreasing = 0, steps = 0;
  for (int k = 0; k < 200; ++k) {
    GWord w = acc_detail::random_cb_word(rng, 4, 25);
    DecomposeStats st;
    NormalForm nf = decompose(w, &st);
    steps += st.rewrite_steps;
    if (!(recompose(nf) == realize(w))) ++bad_round;
    if (!st.level_pure) ++impure;
    if (!st.measure_decreasing) ++nondecreasing;
  }
  r.pass = bad_round == 0 && impure == 0 && nondecreasing == 0;
  std::ostringstream os;
  os << "round-trip failures " << bad_round << ", impure components " << impure << ", words with a non-decreasing step "
     << nondecreasing << ", " << steps << " rewrite steps";
  r.detail = os.str();
  return r;
}

inline CriterionResult criterion_abelianization() {
  CriterionResult r{5, "abelianization kills relators; generator images form the standard basis, n = 3..5", true, "", 0};
  std::size_t cb_pairs = 0, c_pairs = 0, cb_bad = 0, c_bad = 0, basis_bad = 0;
  for (int n = 3; n <= 5; ++n) {
    for (auto const* name : {"mccool", "lemma31", "normalizer", "d2"})
      for (auto const& inst : instantiate(find_suite(name), n)) {
        ++cb_pairs;
        if (abelianize_cb(inst.lhs) != abelianize_cb(inst.rhs)) ++cb_bad;
      }
    for (auto const* name : {"braid", "symmetric", "lemma41", "c_relations", "prop43"})
      for (auto const& inst : instantiate(find_suite(name), n)) {
        ++c_pairs;
        GWord a = has_bare_symbols(inst.lhs) ? four_gen_expand(inst.lhs) : inst.lhs;
        GWord b = has_bare_symbols(inst.rhs) ? four_gen_expand(inst.rhs) : inst.rhs;
        if (!(abelianize_c(a * b.inverse()) == CAbelian{})) ++c_bad;
      }
    std::set<std::size_t> hit;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto v = abelianize_cb(GWord(n, GSym::e(i, j)));
        std::size_t ones = 0, pos = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (v[k] == 1) {
            ++ones;
            pos = k;
          } else if (v[k] != 0) {
            ones = 99;
          }
        }
        if (ones != 1 || !hit.insert(pos).second) ++basis_bad;
      }
    if (hit.size() != static_cast<std::size_t>(n * (n - 1))) ++basis_bad;
  }
  r.pass = cb_bad == 0 && c_bad == 0 && basis_bad == 0;
  std::ostringstream os;
  os << "Cb pairs " << cb_pairs << " (" << cb_bad << " bad), C pairs " << c_pairs << " (" << c_bad << " bad), basis defects "
     << basis_bad;
  r.detail = os.str();
  return r;
}

inline CriterionResult criterion_burau_ext(std::uint64_t seed) {
  CriterionResult r{6, "Burau extension: relator images are identity, n = 3..5; permutation matrices at q = 1", true, "", 0};
  acc_detail::Detail d;
  std::mt19937_64 rng(seed);
  std::size_t pairs = 0, perm_bad = 0, words = 0;
  for (int n = 3; n <= 5; ++n) {
    RepSpec spec = burau_spec(n, true);
    for (auto const& name : c_suite_names()) {
      auto rep = verify_rep_suite(spec, find_suite(name));
      pairs += rep.total_pairs;
      if (!rep.verified()) {
        r.pass = false;
        d.item(acc_detail::suite_line(rep));
      }
    }
    std::vector<GWord> sample;
    for (int i = 1; i <= n - 1; ++i) {
      sample.push_back(GWord(n, GSym::s(i)));
      sample.push_back(GWord(n, GSym::s(i), -1));
      sample.push_back(GWord(n, GSym::a(i)));
    }
    for (int k = 0; k < 30; ++k) sample.push_back(acc_detail::random_c_word(rng, n, 10));
    for (auto const& w : sample) {
      ++words;
      RMat m = specialize(rep_eval(spec, w), std::nullopt, Rational(1));
      if (!is_permutation_matrix(m) || !(m == permutation_matrix<LPoly>(acc_detail::underlying_perm(w)))) ++perm_bad;
    }
  }
  if (perm_bad) r.pass = false;
  d.item(std::to_string(pairs) + " relator pairs");
  d.item(std::to_string(words) + " words at q=1, " + std::to_string(perm_bad) + " not the expected permutation matrix");
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_lk_consistency() {
  CriterionResult r{7, "LK tables: inverse and square tables, braid relators, center image", true, "", 0};
  acc_detail::Detail d;
  std::size_t table_bad = 0, cases = 0;
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i <= n - 1; ++i) {
      ++cases;
      if (!(lk_sigma(i, n) * lk_sigma_inv(i, n)).is_identity() || !(lk_sigma_inv(i, n) * lk_sigma(i, n)).is_identity())
        ++table_bad;
      RMat s = lk_sigma(i, n);
      if (!(s * s == lk_asq(i, n))) ++table_bad;
    }
  d.item(std::to_string(cases) + " (i, n) table cases, " + std::to_string(table_bad) + " bad");
  if (table_bad) r.pass = false;
  for (int n = 2; n <= 5; ++n) {
    auto rep = verify_rep_suite(lk_spec(n), find_suite("braid"));
    if (!rep.verified()) {
      r.pass = false;
      d.item(acc_detail::suite_line(rep));
    }
  }
  RMat c = rep_eval(lk_spec(4), parse_gword(4, "(s1 s2 s3)^4"));
  bool center = c == mat_scalar(LPoly::mono12(24, 96), RMat::identity(6));
  d.item(std::string("center image ") + (center ? "= t^2 q^8 E" : "WRONG"));
  if (!center) r.pass = false;
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_obstruction() {
  CriterionResult r{8, "extension obstruction vanishes exactly at t = 1; t = 1 extension is a representation", true, "", 0};
  acc_detail::Detail d;
  std::set<std::string> values;
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i <= n - 2; ++i) {
      LPoly o = prop52_obstruction(i, n);
      values.insert(to_string(o));
      if (o.is_zero() || !o.specialize(Rational(1), std::nullopt).is_zero()) {
        r.pass = false;
        d.item("bad obstruction at i=" + std::to_string(i) + ", n=" + std::to_string(n));
      }
    }
  for (auto const& v : values) d.item("obstruction " + v);
  std::size_t pairs = 0;
  for (int n = 2; n <= 4; ++n) {
    RepSpec spec = lk_ext_t1_spec(n);
    for (auto const* name : {"braid", "symmetric", "c_relations", "lemma41"}) {
      auto rep = verify_rep_suite(spec, find_suite(name));
      pairs += rep.total_pairs;
      if (!rep.verified()) {
        r.pass = false;
        d.item(acc_detail::suite_line(rep));
      }
    }
  }
  d.item(std::to_string(pairs) + " relator pairs at t=1");
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_c3_table() {
  CriterionResult r{9, "C_3 table with x = t^(-1/3); n = 4 analogue breaks a1 s3 = s3 a1", true, "", 0};
  acc_detail::Detail d;
  try {
    lk_c3_table();
    d.item("lk_c3 constructed, all C_3 relator images identity");
  } catch (VerificationFailure const& e) {
    r.pass = false;
    d.item(e.what());
  }
  GWord l = parse_gword(4, "a1 s3"), rr = parse_gword(4, "s3 a1");
  RepSpec sx = lk_c_spec("lk_c4", 4, false, kXExp12);
  bool fails_x = !(rep_eval(sx, l) == rep_eval(sx, rr));
  RepSpec s1 = lk_c_spec("lk_c4", 4, false, 0);
  bool holds_1 = rep_eval(s1, l) == rep_eval(s1, rr);
  if (!fails_x) r.pass = false;
  d.item(std::string("n=4, x=t^(-1/3): a1 s3 = s3 a1 ") + (fails_x ? "fails" : "holds"));
  d.item(std::string("n=4, x=1: a1 s3 = s3 a1 ") + (holds_1 ? "holds" : "fails"));
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_symmetric_images() {
  CriterionResult r{10, "S_4 acts faithfully through the LK permutation matrices (plain and x-scaled)", true, "", 0};
  acc_detail::Detail d;
  auto words = symmetric_group_words(4);
  for (int x : {0, kXExp12}) {
    RepSpec spec = lk_c_spec("s4", 4, false, x);
    std::set<std::string> keys;
    for (auto const& [p, w] : words) keys.insert(acc_detail::matrix_key(rep_eval(spec, w)));
    if (words.size() != 24 || keys.size() != 24) r.pass = false;
    d.item(std::string(x ? "x=t^(-1/3)" : "x=1") + ": " + std::to_string(keys.size()) + " distinct of " +
           std::to_string(words.size()));
  }
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_autf2() {
  CriterionResult r{11, "Aut(F2): coset rules as automorphisms and 12x12 matrices; faithfulness at length <= 4", true, "", 0};
  acc_detail::Detail d;
  Suite const& s = find_suite("autf2");
  std::size_t rules = 0;
  for (auto const& inst : instantiate(s, 2)) {
    if (inst.group.rfind("coset rule", 0) != 0) continue;
    ++rules;
    bool e = realize_autf2(inst.lhs) == realize_autf2(inst.rhs);
    bool m = autf2_psi(inst.lhs) == autf2_psi(inst.rhs);
    if (!e || !m) {
      r.pass = false;
      d.item(inst.group + (e ? "" : " fails in Aut(F2)") + (m ? "" : " fails as matrices"));
    }
  }
  d.item(std::to_string(rules) + " coset rules");
  bool w2 = autf2_psi(parse_gword(2, "w w")).is_identity();
  if (!w2) r.pass = false;
  d.item(std::string("psi(w)^2 ") + (w2 ? "= E" : "!= E"));

  // reduced words over a1^+-, a2^+-, a3^+-, w
  RepSpec spec = autf2_spec();
  std::vector<std::pair<GSym, int>> alphabet;
  for (int i = 1; i <= 3; ++i) {
    alphabet.push_back({GSym::a(i), 1});
    alphabet.push_back({GSym::a(i), -1});
  }
  alphabet.push_back({GSym::w(), 1});
  std::map<std::string, std::vector<std::size_t>> by_matrix;
  std::map<Endo, std::vector<std::size_t>> by_endo;
  std::size_t count = 0;
  std::function<void(int, RMat const&, Endo const&, int)> dfs = [&](int depth, RMat const& m, Endo const& e, int last) {
    by_matrix[acc_detail::matrix_key(m)].push_back(count);
    by_endo[e].push_back(count);
    ++count;
    if (depth == 4) return;
    for (int k = 0; k < static_cast<int>(alphabet.size()); ++k) {
      auto const& [g, sg] = alphabet[k];
      if (last >= 0) {
        auto const& [pg, ps] = alphabet[last];
        if (pg == g && (g.family == Family::omega || ps == -sg)) continue;
      }
      RMat m2 = m * spec.table.at({g, sg});
      Endo e2 = compose(e, autf2_generator_endo(g, sg));
      dfs(depth + 1, m2, e2, k);
    }
  };
  dfs(0, RMat::identity(12), Endo(2), -1);
  // partitions agree iff every matrix class is an automorphism class
  std::map<std::size_t, std::size_t> endo_class;
  std::size_t cls = 0;
  for (auto const& [e, v] : by_endo) {
    for (auto k : v) endo_class[k] = cls;
    ++cls;
  }
  std::size_t mismatched = 0;
  for (auto const& [key, v] : by_matrix)
    for (auto k : v)
      if (endo_class[k] != endo_class[v.front()]) ++mismatched;
  bool same = mismatched == 0 && by_matrix.size() == by_endo.size();
  if (!same) r.pass = false;
  d.item(std::to_string(count) + " reduced words, " + std::to_string(by_endo.size()) + " automorphisms, " +
         std::to_string(by_matrix.size()) + " matrices");
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_bp2(std::uint64_t seed) {
  CriterionResult r{12, "B_3(P^2) in 96x96 integer matrices", true, "", 0};
  acc_detail::Detail d;
  std::size_t relbad = 0;
  for (auto const& rel : bp2_relators())
    if (!bp2_rep(rel).is_identity() || !bp2_rep_product(rel).is_identity()) ++relbad;
  if (relbad) r.pass = false;
  d.item(std::to_string(bp2_relators().size()) + " relators, " + std::to_string(relbad) + " not E96");
  std::size_t genbad = 0;
  for (auto const* g : {"d1", "d2", "r1"}) {
    ZMat m = bp2_rep(parse_gword(3, g));
    Int det = determinant(m);
    if (m.is_identity() || det != 1) {
      ++genbad;
      d.item(std::string(g) + " identity or det " + det.str());
    }
  }
  if (genbad) r.pass = false;
  d.item("generators d1 d2 r1: " + std::to_string(3 - genbad) + " of 3 non-identity with det 1");
  std::mt19937_64 rng(seed);
  std::size_t hombad = 0;
  for (int k = 0; k < 100; ++k) {
    GWord u = random_bp2_word(rng, 8), v = random_bp2_word(rng, 8);
    if (!(bp2_rep(u * v) == bp2_rep_product(u) * bp2_rep_product(v))) ++hombad;
  }
  if (hombad) r.pass = false;
  d.item("homomorphism: " + std::to_string(hombad) + " of 100 pairs fail");
  auto S3 = bp2_s3_part();
  std::size_t qbad = 0;
  for (int k = 0; k < 50; ++k) {
    GWord w = random_bp2_word(rng, 12);
    auto tgt = bp2_block_permutation(bp2_rep(w));
    Permutation nw = s3_image(w);
    for (std::size_t i = 0; i < tgt.size(); ++i)
      if (!(s3_image(S3[tgt[i] / 8]) == s3_image(S3[i / 8]).then(nw))) {
        ++qbad;
        break;
      }
  }
  if (qbad) r.pass = false;
  d.item("S_3 quotient: " + std::to_string(qbad) + " of 50 words inconsistent");
  r.detail = d.os.str();
  return r;
}

inline CriterionResult criterion_malcev_toy(std::uint64_t seed) {
  CriterionResult r{13, "Malcev combinator on the 2Z <= Z toy instance", true, "", 0};
  auto toy = malcev_toy();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 12), sgn(0, 1);
  // closed form: d1^k -> t^k E for k even, [[0, t^(k-1)], [t^(k+1), 0]] for k odd
  auto oracle = [](int k) {
    RMat m(2, 2);
    if (k % 2 == 0) {
      m(0, 0) = LPoly::t(k);
      m(1, 1) = LPoly::t(k);
    } else {
      m(0, 1) = LPoly::t(k - 1);
      m(1, 0) = LPoly::t(k + 1);
    }
    return m;
  };
  std::size_t bad = 0;
  for (int k = 0; k < 100; ++k) {
    GWord u(1), v(1);
    int eu = 0, ev = 0;
    for (int q = len(rng); q > 0; --q) {
      int s = sgn(rng) ? 1 : -1;
      u.push(GSym::d(1), s);
      eu += s;
    }
    for (int q = len(rng); q > 0; --q) {
      int s = sgn(rng) ? 1 : -1;
      v.push(GSym::d(1), s);
      ev += s;
    }
    RMat a = toy.eval(u), b = toy.eval(v), ab = toy.eval(u * v);
    if (!(ab == a * b) || !(a == oracle(eu)) || !(ab == oracle(eu + ev))) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(bad) + " of 100 pairs fail";
  return r;
}

inline CriterionResult criterion_m0n_dim() {
  CriterionResult r{14, "mapping class group matrix dimension formula", true, "", 0};
  Int a = m0n_dim(4), b = m0n_dim(5);
  r.pass = a == 72 && b == 720;
  r.detail = "m(4) = " + a.str() + ", m(5) = " + b.str();
  return r;
}

inline std::vector<std::function<CriterionResult()>> acceptance_criteria(std::uint64_t seed = kDefaultSeed) {
  return {
      [] { return criterion_relation_suites(); },   [] { return criterion_mixed_suite(); },
      [] { return criterion_four_generator(); },    [=] { return criterion_normal_form(seed); },
      [] { return criterion_abelianization(); },    [=] { return criterion_burau_ext(seed); },
      [] { return criterion_lk_consistency(); },    [] { return criterion_obstruction(); },
      [] { return criterion_c3_table(); },          [] { return criterion_symmetric_images(); },
      [] { return criterion_autf2(); },             [=] { return criterion_bp2(seed); },
      [=] { return criterion_malcev_toy(seed); },   [] { return criterion_m0n_dim(); },
  };
}

inline std::string format_result(CriterionResult const& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] " << r.title << " -- " << r.detail;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << r.seconds << "s)";
  return os.str();
}

// Runs every criterion; an exception counts as a failure.
inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed, std::ostream* live = nullptr) {
  std::vector<CriterionResult> out;
  int id = 0;
  for (auto const& c : acceptance_criteria(seed)) {
    ++id;
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c();
    } catch (std::exception const& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (live) *live << format_result(r) << std::endl;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cbn
