#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "CLI11.hpp"

#include "cbn/acceptance.hpp"
#include "cbn/induced.hpp"
#include "cbn/morphisms.hpp"
#include "cbn/normalform.hpp"
#include "cbn/presentations.hpp"
#include "cbn/reps.hpp"
#include "cbn/serialize.hpp"

namespace cbn {

namespace cli_detail {

struct Options {
  int n = 0;
  std::string word, word2, on, suite, name, format = "human", interp = "conjugating";
  std::uint64_t seed = kDefaultSeed;
  bool table = false;
};

inline bool json_out(Options const& o) { return o.format == "json"; }

inline Endo realize_as(Options const& o, GWord const& w) {
  if (o.interp == "autf2") {
    if (o.n != 2) throw IndexError("the autf2 reading needs --n 2");
    return realize_autf2(w);
  }
  return realize(w);
}

template <class T>
std::string matrix_text(Matrix<T> const& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      if constexpr (std::is_same_v<T, LPoly>)
        s += to_string(m(i, j));
      else
        s += m(i, j).str();
    }
    s += "]\n";
  }
  return s;
}

inline json report_json(SuiteReport const& r) {
  json groups = json::array();
  for (auto const& g : r.groups) {
    json vs = json::array();
    for (auto const& v : g.variants) {
      json fs = json::array();
      for (auto const& f : v.failures)
        fs.push_back({{"binding", f.binding},
                      {"lhs", f.lhs},
                      {"rhs", f.rhs},
                      {"lhs_image", f.lhs_image},
                      {"rhs_image", f.rhs_image}});
      vs.push_back({{"variant", v.variant}, {"pairs", v.pairs}, {"holds", v.holds()}, {"failures", fs}});
    }
    groups.push_back({{"relation", g.group}, {"holds", g.holds()}, {"variants", vs}});
  }
  return {{"suite", r.suite},           {"n", r.n}, {"pairs", r.total_pairs}, {"verified", r.verified()},
          {"failures", r.failing_pairs()}, {"relations", groups}};
}

inline std::size_t hard_failures(SuiteReport const& r) {
  std::size_t k = 0;
  for (auto const& g : r.groups)
    if (!g.holds())
      for (auto const& v : g.variants) k += v.failures.size();
  return k;
}

inline void report_text(SuiteReport const& r, std::ostream& out) {
  out << "suite " << r.suite << " n=" << r.n << ": " << r.total_pairs << " pairs, " << hard_failures(r) << " failures\n";
  for (auto const& g : r.groups) {
    if (g.variants.size() > 1) {
      out << "  " << g.group << ":";
      for (auto const& v : g.variants)
        out << " '" << v.variant << "' " << (v.holds() ? "holds" : std::to_string(v.failures.size()) + "/" + std::to_string(v.pairs) + " fail") << ";";
      out << (g.holds() ? "" : " NO READING HOLDS") << "\n";
    }
    if (!g.holds())
      for (auto const& v : g.variants)
        for (auto const& f : v.failures) {
          out << "  FAIL " << g.group << (v.variant.empty() ? "" : " [" + v.variant + "]") << " " << f.binding << ": " << f.lhs
              << " = " << f.rhs << "\n";
          if (!f.lhs_image.empty()) out << "    lhs: " << f.lhs_image << "\n    rhs: " << f.rhs_image << "\n";
        }
  }
}

inline SuiteReport verify_any(Suite const& s, int n) {
  if (s.interp == Interpretation::projective) {
    if (n != 3) throw IndexError("suite " + s.name + " is defined for n = 3 only");
    return verify_bp2_suite(s);
  }
  return verify_suite(s, n);
}

inline int cmd_apply(Options const& o, std::ostream& out) {
  Endo e = realize_as(o, parse_gword(o.n, o.word));
  Word r = e.apply(parse_word(o.n, o.on));
  if (json_out(o))
    out << json{{"word", o.word}, {"on", o.on}, {"result", to_string(r)}}.dump() << "\n";
  else
    out << to_string(r) << "\n";
  return 0;
}

inline int cmd_equal(Options const& o, std::ostream& out) {
  bool eq = equal(realize_as(o, parse_gword(o.n, o.word)), realize_as(o, parse_gword(o.n, o.word2)));
  if (json_out(o))
    out << json{{"equal", eq}}.dump() << "\n";
  else
    out << (eq ? "true" : "false") << "\n";
  return eq ? 0 : 1;
}

inline int cmd_conj_form(Options const& o, std::ostream& out) {
  ConjForm cf = to_conj_form(realize_as(o, parse_gword(o.n, o.word)));
  if (json_out(o)) {
    json c = json::array();
    for (auto const& f : cf.conjugators) c.push_back(to_string(f));
    out << json{{"permutation", cf.pi.one_line()}, {"conjugators", c}}.dump() << "\n";
  } else {
    out << "permutation: " << to_string(cf.pi) << "\n";
    for (int i = 1; i <= o.n; ++i)
      out << "x" << i << " -> f^-1 x" << cf.pi(i) << " f, f = " << to_string(cf.conjugators[i - 1]) << "\n";
  }
  return 0;
}

inline int cmd_normal_form(Options const& o, std::ostream& out) {
  DecomposeStats st;
  NormalForm nf = normal_form(parse_gword(o.n, o.word), &st);
  if (json_out(o)) {
    json comps = json::object();
    for (auto const& [l, w] : nf.components) comps[std::to_string(l)] = to_string(w);
    out << json{{"components", comps}, {"permutation", nf.pi.one_line()}, {"rewrite_steps", st.rewrite_steps}}.dump() << "\n";
  } else {
    for (int l = o.n - 1; l >= 1; --l) {
      auto it = nf.components.find(l);
      out << "level " << l << ": " << (it == nf.components.end() ? "1" : to_string(it->second)) << "\n";
    }
    out << "permutation: " << to_string(nf.pi) << "\n";
  }
  return 0;
}

inline int cmd_abelianize(Options const& o, std::ostream& out) {
  GWord w = parse_gword(o.n, o.word);
  bool eps_only = true;
  for (auto const& s : w.syllables())
    if (s.sym.family != Family::eps) eps_only = false;
  if (eps_only) {
    auto v = abelianize_cb(w);
    if (json_out(o)) {
      out << json{{"target", "Z^n(n-1)"}, {"vector", v}}.dump() << "\n";
    } else {
      for (int i = 1, k = 0; i <= o.n; ++i)
        for (int j = 1; j <= o.n; ++j)
          if (i != j) {
            long x = v[eps_pair_index(i, j, o.n)];
            if (x) out << (k++ ? " " : "") << "e" << i << "," << j << ":" << x;
          }
      out << (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }) ? "0" : "") << "\n";
    }
  } else {
    GWord src = has_bare_symbols(w) ? four_gen_expand(w) : w;
    CAbelian a = abelianize_c(src);
    if (json_out(o))
      out << json{{"target", "Z2 x Z"}, {"parity", a.parity}, {"degree", a.degree}}.dump() << "\n";
    else
      out << "parity " << a.parity << ", degree " << a.degree << "\n";
  }
  return 0;
}

inline int cmd_verify(Options const& o, std::ostream& out) {
  std::vector<Suite const*> suites;
  if (o.suite == "all") {
    for (auto const& s : all_suites())
      if (s.admits(o.n)) suites.push_back(&s);
  } else {
    suites.push_back(&find_suite(o.suite));
  }
  bool ok = true;
  json all = json::array();
  for (auto const* s : suites) {
    SuiteReport r = verify_any(*s, o.n);
    ok = ok && r.verified();
    if (json_out(o))
      all.push_back(report_json(r));
    else
      report_text(r, out);
  }
  if (json_out(o)) out << (all.size() == 1 ? all[0] : all).dump() << "\n";
  return ok ? 0 : 1;
}

inline int cmd_rep(Options const& o, std::ostream& out) {
  if (o.name == "bp2" && o.table) {
    auto const& sys = bp2_system();
    json recs = json::array();
    for (auto const& [key, row] : sys.tt.rows)
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string g = to_string(key.first) + (key.second < 0 ? "^-1" : "");
        if (json_out(o))
          recs.push_back({{"rep", i}, {"rep_word", to_string(sys.cs.reps[i])}, {"generator", g}, {"h", to_string(row[i].h)},
                          {"target", row[i].target}});
        else
          out << i << " (" << to_string(sys.cs.reps[i]) << ") " << g << " -> " << to_string(row[i].h) << " | "
              << row[i].target << "\n";
      }
    if (json_out(o)) out << recs.dump() << "\n";
    return 0;
  }
  json j{{"rep", o.name}, {"n", o.n}, {"word", o.word}};
  if (o.name == "bp2" || o.name == "sanov") {
    if (o.n != 3) throw IndexError(o.name + " words have rank 3 (use --n 3)");
    ZMat m = o.name == "bp2" ? bp2_rep(parse_gword(3, o.word)) : sanov(parse_gword(3, o.word));
    if (!json_out(o)) {
      out << matrix_text(m);
      return 0;
    }
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = to_json(m);
  } else {
    RMat m = o.name == "autf2" ? autf2_psi(parse_gword(2, o.word)) : rep_eval(make_rep(o.name, o.n), parse_gword(o.n, o.word));
    if (!json_out(o)) {
      out << matrix_text(m);
      return 0;
    }
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = to_json(m);
  }
  out << j.dump() << "\n";
  return 0;
}

inline int cmd_selftest(Options const& o, std::ostream& out) {
  auto results = run_acceptance(o.seed, json_out(o) ? nullptr : &out);
  bool ok = true;
  json j = json::array();
  for (auto const& r : results) {
    ok = ok && r.pass;
    j.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  if (json_out(o))
    out << j.dump() << "\n";
  else
    out << (ok ? "all criteria pass" : "SOME CRITERIA FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace cli_detail

// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.
inline int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Conjugating automorphisms of free groups: words, relations and representations"};
  app.require_subcommand(1);
  Options o;
  auto fmt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "json"}));
  };
  auto rank = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--n", o.n, "rank")->check(CLI::Range(1, 64));
    if (required) opt->required();
  };
  auto interp = [&](CLI::App* c) {
    c->add_option("--interp", o.interp, "how a1..a3 are read on F2")->check(CLI::IsMember({"conjugating", "autf2"}));
  };

  auto* apply = app.add_subcommand("apply", "apply a word's automorphism to a free-group word");
  rank(apply);
  apply->add_option("--word", o.word, "generator word")->required();
  apply->add_option("--on", o.on, "free-group word, e.g. \"x1 x2^-1\"")->required();
  interp(apply);
  fmt(apply);

  auto* eq = app.add_subcommand("equal", "compare two words as automorphisms");
  rank(eq);
  eq->add_option("--word", o.word)->required();
  eq->add_option("--word2", o.word2)->required();
  interp(eq);
  fmt(eq);

  auto* cf = app.add_subcommand("conj-form", "permutation and conjugators of a conjugating automorphism");
  rank(cf);
  cf->add_option("--word", o.word)->required();
  interp(cf);
  fmt(cf);

  auto* nf = app.add_subcommand("normal-form", "level decomposition of a word in e_i,j and a_k");
  rank(nf);
  nf->add_option("--word", o.word)->required();
  fmt(nf);

  auto* ab = app.add_subcommand("abelianize", "image in the abelianization");
  rank(ab);
  ab->add_option("--word", o.word)->required();
  fmt(ab);

  auto* ver = app.add_subcommand("verify", "check a relation suite");
  rank(ver);
  ver->add_option("--suite", o.suite, "suite name or 'all'")->required();
  fmt(ver);

  auto* rep = app.add_subcommand("rep", "matrix image of a word");
  rank(rep, false);
  rep->add_option("--name", o.name, "representation")
      ->required()
      ->check(CLI::IsMember({"burau", "burau_ext", "lk", "lk_ext_t1", "lk_c3", "autf2", "bp2", "sanov"}));
  rep->add_option("--word", o.word, "generator word")->default_val("1");
  rep->add_flag("--table", o.table, "bp2 only: print the coset transition table");
  fmt(rep);

  auto* st = app.add_subcommand("selftest", "run the acceptance checks");
  st->add_option("--seed", o.seed, "random seed");
  fmt(st);

  std::vector<std::string> storage{"cbn"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rep->parsed() && o.n == 0) o.n = o.name == "autf2" ? 2 : (o.name == "bp2" || o.name == "sanov" || o.name == "lk_c3") ? 3 : 0;
    if (rep->parsed() && o.n == 0 && !o.table) throw IndexError("--n is required for " + o.name);
    if (apply->parsed()) return cmd_apply(o, out);
    if (eq->parsed()) return cmd_equal(o, out);
    if (cf->parsed()) return cmd_conj_form(o, out);
    if (nf->parsed()) return cmd_normal_form(o, out);
    if (ab->parsed()) return cmd_abelianize(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (rep->parsed()) return cmd_rep(o, out);
    if (st->parsed()) return cmd_selftest(o, out);
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (NotConjugating const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (NotBijective const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (VerificationFailure const& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cbn
