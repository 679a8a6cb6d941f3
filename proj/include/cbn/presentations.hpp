#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbn/error.hpp"
#include "cbn/gword.hpp"
#include "cbn/morphisms.hpp"
#include "cbn/realize.hpp"
#include "cbn/templates.hpp"

namespace cbn {

// How the symbols of a suite are read.
enum class Interpretation {
  conjugating,  // automorphisms of F_n
  autf2,        // Aut(F2) generators, a1..a3 = alpha_1..alpha_3
  projective,   // projective-plane braid group B_3(P^2), checked through its induced representation
};

struct RelationTemplate {
  std::string group;    // relations sharing a group are alternative readings of one printed relation
  std::string variant;  // "" when the group has a single reading
  std::string vars;     // see parse_vars
  std::function<bool(Env const&)> where;
  std::string lhs, rhs;
};

struct Suite {
  std::string name;
  std::string title;
  Interpretation interp = Interpretation::conjugating;
  int min_n = 2, max_n = 0;  // max_n == 0: unbounded
  std::vector<RelationTemplate> relations;

  bool admits(int n) const { return n >= min_n && (max_n == 0 || n <= max_n); }
};

struct RelationInstance {
  std::string group, variant, binding;
  GWord lhs, rhs;
};

inline std::vector<RelationInstance> instantiate(Suite const& s, int n) {
  if (!s.admits(n)) throw IndexError("suite " + s.name + " is not defined at n=" + std::to_string(n));
  std::vector<RelationInstance> out;
  for (auto const& t : s.relations) {
    auto vars = parse_vars(t.vars);
    std::string order;
    for (auto const& v : vars) order += v.name;
    Env env;
    env.set('n', n);
    for_each_binding(vars, env, [&](Env const& e) {
      if (t.where && !t.where(e)) return;
      out.push_back({t.group, t.variant, e.describe(order), parse_gword(n, expand_template(t.lhs, e)),
                     parse_gword(n, expand_template(t.rhs, e))});
    });
  }
  return out;
}

namespace suites_detail {

inline bool far(Env const& e, char a, char b) { return std::abs(e[a] - e[b]) >= 2; }

inline std::vector<Suite> build() {
  std::vector<Suite> S;

  S.push_back({"braid", "braid relations", Interpretation::conjugating, 2, 0,
               {
                   {"(1)", "", "i=1..n-2", nullptr, "s{i} s{i+1} s{i}", "s{i+1} s{i} s{i+1}"},
                   {"(2)", "", "i=1..n-1 j=1..n-1", [](Env const& e) { return far(e, 'i', 'j'); }, "s{i} s{j}",
                    "s{j} s{i}"},
               }});

  S.push_back(
      {"pure", "pure braid relations", Interpretation::conjugating, 3, 0,
       {
           {"P1", "", "i k j v=pm", [](Env const& e) { return e['i'] < e['k'] && e['k'] < e['j']; },
            "A{i},{k}^{-v} A{k},{j} A{i},{k}^{v}", "(A{i},{j} A{k},{j})^{v} A{k},{j} (A{i},{j} A{k},{j})^{-v}"},
           {"P2", "", "k m j v=pm", [](Env const& e) { return e['k'] < e['m'] && e['m'] < e['j']; },
            "A{k},{m}^{-v} A{k},{j} A{k},{m}^{v}", "(A{k},{j} A{m},{j})^{v} A{k},{j} (A{k},{j} A{m},{j})^{-v}"},
           {"P3", "", "i k m j v=pm",
            [](Env const& e) { return e['i'] < e['k'] && e['k'] < e['m'] && e['m'] < e['j']; },
            "A{i},{m}^{-v} A{k},{j} A{i},{m}^{v}",
            "(A{i},{j}^{v} A{m},{j}^{v} A{i},{j}^{-v} A{m},{j}^{-v})^{v} A{k},{j} "
            "(A{i},{j}^{v} A{m},{j}^{v} A{i},{j}^{-v} A{m},{j}^{-v})^{-v}"},
           {"P4", "", "i m k j v=pm",
            [](Env const& e) {
              int i = e['i'], m = e['m'], k = e['k'], j = e['j'];
              return distinct(e, "imkj") && i < m && k < j && ((k < i && m < j) || m < k);
            },
            "A{i},{m}^{-v} A{k},{j} A{i},{m}^{v}", "A{k},{j}"},
       }});

  S.push_back({"mccool", "basis-conjugating relations", Interpretation::conjugating, 2, 0,
               {
                   {"(3)", "", "i j k l", [](Env const& e) { return distinct(e, "ijkl"); }, "e{i},{j} e{k},{l}",
                    "e{k},{l} e{i},{j}"},
                   {"(4)", "", "i j k", [](Env const& e) { return distinct(e, "ijk"); }, "e{i},{j} e{k},{j}",
                    "e{k},{j} e{i},{j}"},
                   {"(5)", "", "i j k", [](Env const& e) { return distinct(e, "ijk"); },
                    "e{i},{j} e{k},{j} e{i},{k}", "e{i},{k} e{i},{j} e{k},{j}"},
               }});

  S.push_back({"symmetric", "symmetric group relations", Interpretation::conjugating, 2, 0,
               {
                   {"(13)", "", "j=1..n-1", nullptr, "a{j}^2", "1"},
                   {"(14)", "", "j=1..n-2", nullptr, "a{j} a{j+1} a{j}", "a{j+1} a{j} a{j+1}"},
                   {"(15)", "", "k=1..n-1 l=1..n-1", [](Env const& e) { return far(e, 'k', 'l'); }, "a{k} a{l}",
                    "a{l} a{k}"},
               }});

  S.push_back(
      {"mixed", "basis-conjugating and permutation generators", Interpretation::conjugating, 2, 0,
       {
           {"(16)", "", "i j k=1..n-1",
            [](Env const& e) {
              int i = e['i'], j = e['j'], k = e['k'];
              return i != j && k != i - 1 && k != i && k != j - 1 && k != j;
            },
            "e{i},{j} a{k}", "a{k} e{i},{j}"},
           {"(17a)", "", "i=1..n-1 j", [](Env const& e) { return e['j'] != e['i'] && e['j'] != e['i'] + 1; },
            "e{i},{j} a{i}", "a{i} e{i+1},{j}"},
           {"(17b)", "printed e_i,i+1", "i j=1..n-1",
            [](Env const& e) { return e['i'] != e['j'] && e['i'] != e['j'] + 1 && e['i'] + 1 <= e['n']; },
            "e{i},{j} a{j}", "a{j} e{i},{i+1}"},
           {"(17b)", "e_i,j+1", "i j=1..n-1", [](Env const& e) { return e['i'] != e['j'] && e['i'] != e['j'] + 1; },
            "e{i},{j} a{j}", "a{j} e{i},{j+1}"},
           {"(17c)", "", "i=1..n-1", nullptr, "e{i},{i+1} a{i}", "a{i} e{i+1},{i}"},
       }});

  S.push_back({"lemma31", "conjugation rules in the basis-conjugating group", Interpretation::conjugating, 2, 0,
               {
                   {"rule 1", "", "i j k l v=pm", [](Env const& e) { return distinct(e, "ijkl"); },
                    "e{i},{j}^{-v} e{k},{l} e{i},{j}^{v}", "e{k},{l}"},
                   {"rule 2", "", "i j k v=pm", [](Env const& e) { return distinct(e, "ijk"); },
                    "e{i},{j}^{-v} e{k},{j} e{i},{j}^{v}", "e{k},{j}"},
                   {"rule 3", "", "i j k v=pm", [](Env const& e) { return distinct(e, "ijk"); },
                    "e{i},{j}^{-v} e{k},{i} e{i},{j}^{v}", "e{k},{j}^{v} e{k},{i} e{k},{j}^{-v}"},
                   {"rule 4", "", "i j k v=pm", [](Env const& e) { return distinct(e, "ijk"); },
                    "e{i},{j}^{-v} e{i},{k} e{i},{j}^{v}", "e{k},{j}^{v} e{i},{k} e{k},{j}^{-v}"},
                   {"rule 5", "", "i j k v=pm", [](Env const& e) { return distinct(e, "ijk"); },
                    "e{i},{j}^{-v} e{j},{k} e{i},{j}^{v}", "e{k},{j}^{v} e{i},{k}^-1 e{k},{j}^{-v} e{i},{k} e{j},{k}"},
               }});

  // the rules listed for D_{k-1} normalizing D_{l-1}, 1 <= i < k < l
  auto ikl = [](Env const& e) { return e['i'] < e['k'] && e['k'] < e['l']; };
  auto iklj = [](Env const& e) {
    return e['i'] < e['k'] && e['k'] < e['l'] && e['j'] != e['i'] && e['j'] != e['k'] && e['j'] != e['l'];
  };
  S.push_back({"normalizer", "normalizer rules between levels", Interpretation::conjugating, 3, 0,
               {
                   {"N1 e_lj", "", "i k l j v=pm", iklj, "e{k},{i}^{-v} e{l},{j} e{k},{i}^{v}", "e{l},{j}"},
                   {"N1 e_jl", "", "i k l j v=pm", iklj, "e{k},{i}^{-v} e{j},{l} e{k},{i}^{v}", "e{j},{l}"},
                   {"N1 e_li", "", "i k l v=pm", ikl, "e{k},{i}^{-v} e{l},{i} e{k},{i}^{v}", "e{l},{i}"},
                   {"N1 e_lk", "", "i k l v=pm", ikl, "e{k},{i}^{-v} e{l},{k} e{k},{i}^{v}",
                    "e{l},{i}^{v} e{l},{k} e{l},{i}^{-v}"},
                   {"N1 e_kl", "", "i k l v=pm", ikl, "e{k},{i}^{-v} e{k},{l} e{k},{i}^{v}",
                    "e{l},{i}^{v} e{k},{l} e{l},{i}^{-v}"},
                   {"N1 e_il", "", "i k l v=pm", ikl, "e{k},{i}^{-v} e{i},{l} e{k},{i}^{v}",
                    "e{l},{i}^{v} e{k},{l}^-1 e{l},{i}^{-v} e{k},{l} e{i},{l}"},
                   {"N2 e_lj", "", "i k l j v=pm", iklj, "e{i},{k}^{-v} e{l},{j} e{i},{k}^{v}", "e{l},{j}"},
                   {"N2 e_jl", "", "i k l j v=pm", iklj, "e{i},{k}^{-v} e{j},{l} e{i},{k}^{v}", "e{j},{l}"},
                   {"N2 e_lk", "", "i k l v=pm", ikl, "e{i},{k}^{-v} e{l},{k} e{i},{k}^{v}", "e{l},{k}"},
                   {"N2 e_li", "", "i k l v=pm", ikl, "e{i},{k}^{-v} e{l},{i} e{i},{k}^{v}",
                    "e{l},{k}^{v} e{l},{i} e{l},{k}^{-v}"},
                   {"N2 e_il", "", "i k l v=pm", ikl, "e{i},{k}^{-v} e{i},{l} e{i},{k}^{v}",
                    "e{l},{k}^{v} e{i},{l} e{l},{k}^{-v}"},
                   {"N2 e_kl", "", "i k l v=pm", ikl, "e{i},{k}^{-v} e{k},{l} e{i},{k}^{v}",
                    "e{l},{k}^{v} e{i},{l}^-1 e{l},{k}^{-v} e{i},{l} e{k},{l}"},
               }});

  auto gap2 = [](Env const& e) { return e['i'] + 1 < e['j']; };
  S.push_back({"pure_eps", "pure braid generators in basis-conjugating generators", Interpretation::conjugating, 2, 0,
               {
                   {"(18)", "", "i=1..n-1", nullptr, "A{i},{i+1}", "e{i},{i+1}^-1 e{i+1},{i}^-1"},
                   {"(19) first form", "", "i j", gap2, "A{i},{j}",
                    "[k=j-1..i+1: e{k},{i}] e{i},{j}^-1 e{j},{i}^-1 [k=i+1..j-1: e{k},{i}^-1]"},
                   {"(19) second form", "", "i j", gap2, "A{i},{j}",
                    "[k=j-1..i+1: e{k},{j}^-1] e{i},{j}^-1 e{j},{i}^-1 [k=i+1..j-1: e{k},{j}]"},
                   {"(20)", "", "i k j", [](Env const& e) { return e['i'] < e['k'] && e['k'] < e['j']; },
                    "e{k},{i} e{i},{j}^-1 e{j},{i}^-1 e{k},{i}^-1", "e{k},{j}^-1 e{i},{j}^-1 e{j},{i}^-1 e{k},{j}"},
               }});

  S.push_back({"d2", "extra relations of D_2", Interpretation::conjugating, 3, 0,
               {
                   {"conjugate by e3,2", "", "k=-3..3", nullptr,
                    "(e1,3 e2,3)^-1 (e3,2^{k} e1,3 e3,2^{-k})^-1 e1,3 e2,3 e3,2^{k} e1,3 e3,2^{-k}", "1"},
                   {"conjugate by e3,1", "", "k=-3..3", nullptr,
                    "(e1,3 e2,3)^-1 (e3,1^{k} e2,3 e3,1^{-k})^-1 e1,3 e2,3 e3,1^{k} e2,3 e3,1^{-k}", "1"},
               }});

  auto far_ij = [](Env const& e) { return far(e, 'i', 'j'); };
  S.push_back({"lemma41", "braid and permutation generators", Interpretation::conjugating, 2, 0,
               {
                   {"(21)", "", "i=1..n-1 j=1..n-1", far_ij, "a{i} s{j}", "s{j} a{i}"},
                   {"(22a)", "", "i=1..n-2", nullptr, "s{i} a{i+1} a{i}", "a{i+1} a{i} s{i+1}"},
                   {"(22b)", "printed", "i=1..n-2", nullptr, "s{i} s{i+1} a{i}", "a{i+1} s{i} s{i+1}"},
                   {"(22b)", "as (32)", "i=1..n-2", nullptr, "s{i+1} s{i} a{i+1}", "a{i} s{i+1} s{i}"},
               }});

  S.push_back({"c_relations", "mixed relations used for the matrix extensions", Interpretation::conjugating, 2, 0,
               {
                   {"(30)", "", "i=1..n-1 j=1..n-1", far_ij, "a{i} s{j}", "s{j} a{i}"},
                   {"(31)", "", "i=1..n-2", nullptr, "s{i} a{i+1} a{i}", "a{i+1} a{i} s{i+1}"},
                   {"(32)", "", "i=1..n-2", nullptr, "s{i+1} s{i} a{i+1}", "a{i} s{i+1} s{i}"},
               }});

  auto far_ij_small = [](Env const& e) { return far(e, 'i', 'j'); };
  S.push_back(
      {"prop43", "four-generator presentation", Interpretation::conjugating, 3, 0,
       {
           {"(23a)", "", "", nullptr, "s^{n}", "(s s1)^{n-1}"},
           {"(23b)", "", "j=2..n/2", nullptr, "s1 s^{-j} s1 s^{j}", "s^{-j} s1 s^{j} s1"},
           {"(24a)", "printed a^2", "", nullptr, "a^2", "1"},
           {"(24a)", "a1^2", "", nullptr, "a1^2", "1"},
           {"(24b)", "", "", nullptr, "a^{n}", "(a1 a)^{n-1}"},
           {"(24c)", "", "j=2..n/2", nullptr, "a1 a^{-j} a1 a^{j}", "a^{-j} a1 a^{j} a1"},
           {"(25)", "", "i=1..n-2 j=1..n-2", far_ij_small, "a^{-i} a1 a^{i} s^{j} s1 s^{-j}",
            "s^{j} s1 s^{-j} a^{-i} a1 a^{i}"},
           {"(26)", "printed 2<=i<=n-1", "i=2..n-1", nullptr, "s^{i-1} s1 s^{-(i-1)} a^{-i} a1 a a1 a^{i-1}",
            "a^{-i} a1 a a1 a^{i-1} s^{i} s1 s^{-i}"},
           {"(26)", "1<=i<=n-2", "i=1..n-2", nullptr, "s^{i-1} s1 s^{-(i-1)} a^{-i} a1 a a1 a^{i-1}",
            "a^{-i} a1 a a1 a^{i-1} s^{i} s1 s^{-i}"},
           {"(27)", "printed", "i=2..n-1", nullptr, "s^{i-1} s1 s s1 s^{-i} a^{-(i-1)} a1 a^{i-1}",
            "a^{-i} a1 a^{i} s^{i-1} s1 s s1 s^{-i}"},
           {"(27)", "rederived from (22b) as (32)", "i=1..n-2", nullptr,
            "s^{i} s1 s^-1 s1 s^{-(i-1)} a^{-i} a1 a^{i}", "a^{-(i-1)} a1 a^{i-1} s^{i} s1 s^-1 s1 s^{-(i-1)}"},
           {"(29) sigma", "", "i=1..n-2", nullptr, "s{i+1}", "s^{i} s1 s^{-i}"},
           {"(29) alpha", "", "i=1..n-2", nullptr, "a{i+1}", "a^{-i} a1 a^{i}"},
       }});

  S.push_back({"autf2", "Aut(F2) presentation and generator formulas", Interpretation::autf2, 2, 2,
               {
                   {"P^2", "", "", nullptr, "P^2", "1"},
                   {"w^2", "", "", nullptr, "w^2", "1"},
                   {"(wP)^4", "", "", nullptr, "(w P)^4", "1"},
                   {"(PwPU)^2", "", "", nullptr, "(P w P U)^2", "1"},
                   {"(UPw)^3", "", "", nullptr, "(U P w)^3", "1"},
                   {"[w,wUw]", "printed", "", nullptr, "w^-1 (w U w)^-1 w w U w", "1"},
                   {"[w,wUw]", "[U,wUw]", "", nullptr, "U^-1 (w U w)^-1 U w U w", "1"},
                   {"a1 formula", "", "", nullptr, "a1", "P U^-1 P"},
                   {"a2 formula", "", "", nullptr, "a2", "P U w U^-1"},
                   {"a3 formula", "", "", nullptr, "a3", "P w U w P"},
                   {"coset rule 1", "", "", nullptr, "w a1", "a1^-1 w"},
                   {"coset rule 2", "", "", nullptr, "w a2", "a3 a1 a2^-1 a1^-1 a3^-1 w"},
                   {"coset rule 3", "", "", nullptr, "w a3", "a3^-1 w"},
               }});

  S.push_back({"bp2", "projective-plane braid group B_3(P^2)", Interpretation::projective, 3, 3,
               {
                   {"braid", "", "", nullptr, "d1 d2 d1", "d2 d1 d2"},
                   {"d1 r3", "", "", nullptr, "d1 r3", "r3 d1"},
                   {"d2 r1", "", "", nullptr, "d2 r1", "r1 d2"},
                   {"r1 = d1 r2 d1", "", "", nullptr, "r1", "d1 r2 d1"},
                   {"r2 = d2 r3 d2", "", "", nullptr, "r2", "d2 r3 d2"},
                   {"commutator i=1", "", "", nullptr, "r2^-1 r1^-1 r2 r1", "d1^2"},
                   {"commutator i=2", "", "", nullptr, "r3^-1 r2^-1 r3 r2", "d2^2"},
                   {"d1 d2^2 d1", "", "", nullptr, "d1 d2^2 d1", "r1^2"},
               }});

  // conjugation rules inside B_3(P^2); x^g read both ways
  std::vector<RelationTemplate> rules;
  auto rule = [&](std::string const& name, std::string const& g, std::string const& x, std::string const& rhs,
                  std::string const& vars = "") {
    std::string gi = "(" + g + ")^-1";
    rules.push_back({name, "x^g = g^-1 x g", vars, nullptr, gi + " " + x + " " + g, rhs});
    rules.push_back({name, "x^g = g x g^-1", vars, nullptr, g + " " + x + " " + gi, rhs});
  };
  rules.push_back({"a2 a3", "", "", nullptr, "pa2 pa3", "r1^2"});
  rule("r3 fixes a2", "r3^{v}", "pa2", "pa2", "v=pm");
  rule("r1^r2", "r2", "r1", "r1 pa2^-1");
  rule("r1^r3", "r3", "r1", "r1 pa3^-1");
  rule("a3^r2", "r2", "pa3", "pa2 pa3 pa2^-1");
  rule("a2^r2", "r2", "pa2", "r1 pa2^-1 r1^-1");
  rule("a2^d1", "d1", "pa2", "pa2");
  rule("r1^d1", "d1", "r1", "r2 pa2");
  rule("r2^d1", "d1", "r2", "pa2^-1 r1");
  rule("r3^d1", "d1", "r3", "r3");
  rule("a2^d2", "d2", "pa2", "r1^2 pa2^-1");
  rule("r1^d2", "d2", "r1", "r1");
  rule("r2^d2", "d2", "r2", "r3 d2^2");
  rule("r3^d2", "d2", "r3", "d2^-2 r2");
  S.push_back({"bp2_rules", "conjugation rules in B_3(P^2)", Interpretation::projective, 3, 3, rules});

  return S;
}

}  // namespace suites_detail

inline std::vector<Suite> const& all_suites() {
  static std::vector<Suite> const s = suites_detail::build();
  return s;
}

inline Suite const& find_suite(std::string const& name) {
  for (auto const& s : all_suites())
    if (s.name == name) return s;
  throw Error("unknown suite '" + name + "'");
}

struct RelationFailure {
  std::string binding;
  std::string lhs, rhs;
  std::string lhs_image, rhs_image;
};

struct VariantReport {
  std::string variant;
  std::size_t pairs = 0;
  std::vector<RelationFailure> failures;
  bool holds() const { return failures.empty(); }
};

struct GroupReport {
  std::string group;
  std::vector<VariantReport> variants;
  bool holds() const {
    for (auto const& v : variants)
      if (v.holds()) return true;
    return variants.empty();
  }
  // first variant that holds, if any
  std::optional<std::string> holding_variant() const {
    for (auto const& v : variants)
      if (v.holds()) return v.variant;
    return std::nullopt;
  }
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::size_t total_pairs = 0;
  std::vector<GroupReport> groups;

  bool verified() const {
    for (auto const& g : groups)
      if (!g.holds()) return false;
    return true;
  }
  std::size_t failing_pairs() const {
    std::size_t k = 0;
    for (auto const& g : groups)
      for (auto const& v : g.variants) k += v.failures.size();
    return k;
  }
  GroupReport const* group(std::string const& name) const {
    for (auto const& g : groups)
      if (g.group == name) return &g;
    return nullptr;
  }
};

// Checks lhs == rhs for every instance, with a caller-supplied evaluator.
template <class Value>
SuiteReport check_suite(Suite const& s, int n, std::function<Value(GWord const&)> const& eval,
                        std::function<std::string(Value const&)> const& describe = nullptr) {
  SuiteReport rep;
  rep.suite = s.name;
  rep.n = n;
  for (auto const& inst : instantiate(s, n)) {
    ++rep.total_pairs;
    GroupReport* g = nullptr;
    for (auto& x : rep.groups)
      if (x.group == inst.group) g = &x;
    if (!g) {
      rep.groups.push_back({inst.group, {}});
      g = &rep.groups.back();
    }
    VariantReport* v = nullptr;
    for (auto& x : g->variants)
      if (x.variant == inst.variant) v = &x;
    if (!v) {
      g->variants.push_back({inst.variant, 0, {}});
      v = &g->variants.back();
    }
    ++v->pairs;
    Value a = eval(inst.lhs), b = eval(inst.rhs);
    if (!(a == b))
      v->failures.push_back({inst.binding, to_string(inst.lhs), to_string(inst.rhs), describe ? describe(a) : "",
                             describe ? describe(b) : ""});
  }
  return rep;
}

inline SuiteReport verify_suite(Suite const& s, int n) {
  std::function<std::string(Endo const&)> describe = [](Endo const& e) { return to_string(e); };
  switch (s.interp) {
    case Interpretation::conjugating:
      return check_suite<Endo>(s, n, [](GWord const& w) { return realize(w); }, describe);
    case Interpretation::autf2:
      return check_suite<Endo>(s, n, [](GWord const& w) { return realize_autf2(w); }, describe);
    case Interpretation::projective:
      break;
  }
  throw AlphabetError("suite " + s.name + " is checked through its matrix representation, not as automorphisms");
}

inline SuiteReport verify_suite(std::string const& name, int n) { return verify_suite(find_suite(name), n); }

// Exponent sums over ordered pairs (i,j), i != j, lexicographic.
inline std::size_t eps_pair_index(int i, int j, int n) {
  return static_cast<std::size_t>((i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0));
}

inline std::vector<long> abelianize_cb(GWord const& w) {
  int n = w.rank();
  std::vector<long> v(static_cast<std::size_t>(n) * (n - 1), 0);
  for (auto const& s : w.syllables()) {
    if (s.sym.family != Family::eps) throw AlphabetError("abelianize_cb: foreign symbol " + to_string(s.sym));
    int i = s.sym.idx[0], j = s.sym.idx[1];
    if (i > n || j > n) throw IndexError("abelianize_cb: index out of range for rank " + std::to_string(n));
    v[eps_pair_index(i, j, n)] += s.exp;
  }
  return v;
}

struct CAbelian {
  int parity = 0;   // alpha exponents mod 2
  long degree = 0;  // sigma exponent sum
  bool operator==(CAbelian const&) const = default;
};

inline CAbelian abelianize_c(GWord const& w) {
  CAbelian r;
  long a = 0;
  for (auto const& s : w.syllables()) {
    if (s.sym.family == Family::sigma)
      r.degree += s.exp;
    else if (s.sym.family == Family::alpha)
      a += s.exp;
    else
      throw AlphabetError("abelianize_c: foreign symbol " + to_string(s.sym));
  }
  r.parity = static_cast<int>(((a % 2) + 2) % 2);
  return r;
}

}  // namespace cbn
