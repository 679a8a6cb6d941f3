#pragma once

#include <array>
#include <cctype>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cbn/error.hpp"

namespace cbn {

// Variable bindings for relation templates: single lowercase letters, plus n.
class Env {
 public:
  int operator[](char c) const {
    if (c < 'a' || c > 'z' || !set_[c - 'a']) throw Error(std::string("unbound template variable '") + c + "'");
    return v_[c - 'a'];
  }
  void set(char c, int value) {
    v_[c - 'a'] = value;
    set_[c - 'a'] = true;
  }
  bool has(char c) const { return c >= 'a' && c <= 'z' && set_[c - 'a']; }

  // e.g. "i=1 j=3 v=-1"
  std::string describe(std::string_view order) const {
    std::string s;
    for (char c : order) {
      if (!has(c)) continue;
      if (!s.empty()) s += ' ';
      s += c;
      s += '=' + std::to_string((*this)[c]);
    }
    return s;
  }

 private:
  std::array<int, 26> v_{};
  std::array<bool, 26> set_{};
};

inline bool distinct(Env const& e, std::string_view vars) {
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      if (e[vars[a]] == e[vars[b]]) return false;
  return true;
}

namespace detail {

// integer arithmetic: + - * / (floor toward zero), unary minus, parentheses
class ExprEval {
 public:
  ExprEval(std::string_view s, Env const& env) : s_(s), env_(env) {}
  int run() {
    int v = sum();
    ws();
    if (p_ != s_.size()) throw Error("bad template expression '" + std::string(s_) + "'");
    return v;
  }

 private:
  void ws() {
    while (p_ < s_.size() && s_[p_] == ' ') ++p_;
  }
  int sum() {
    int v = prod();
    for (;;) {
      ws();
      if (p_ < s_.size() && (s_[p_] == '+' || s_[p_] == '-')) {
        char op = s_[p_++];
        int r = prod();
        v = op == '+' ? v + r : v - r;
      } else {
        return v;
      }
    }
  }
  int prod() {
    int v = unary();
    for (;;) {
      ws();
      if (p_ < s_.size() && (s_[p_] == '*' || s_[p_] == '/')) {
        char op = s_[p_++];
        int r = unary();
        v = op == '*' ? v * r : v / r;
      } else {
        return v;
      }
    }
  }
  int unary() {
    ws();
    if (p_ < s_.size() && s_[p_] == '-') {
      ++p_;
      return -unary();
    }
    if (p_ < s_.size() && s_[p_] == '(') {
      ++p_;
      int v = sum();
      ws();
      if (p_ >= s_.size() || s_[p_] != ')') throw Error("missing ')' in template expression");
      ++p_;
      return v;
    }
    if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      int v = 0;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) v = v * 10 + (s_[p_++] - '0');
      return v;
    }
    if (p_ < s_.size() && std::islower(static_cast<unsigned char>(s_[p_]))) return env_[s_[p_++]];
    throw Error("bad template expression '" + std::string(s_) + "'");
  }

  std::string_view s_;
  Env const& env_;
  std::size_t p_ = 0;
};

inline std::size_t matching(std::string_view s, std::size_t open, char lo, char hi) {
  int depth = 0;
  for (std::size_t k = open; k < s.size(); ++k) {
    if (s[k] == lo) ++depth;
    if (s[k] == hi && --depth == 0) return k;
  }
  throw Error("unbalanced template '" + std::string(s) + "'");
}

}  // namespace detail

inline int eval_expr(std::string_view s, Env const& env) { return detail::ExprEval(s, env).run(); }

// Expands `{expr}` to its value and `[k=a..b: body]` to the concatenated bodies (a..b counts
// down when a > b).
inline std::string expand_template(std::string_view t, Env env) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    char c = t[k];
    if (c == '{') {
      std::size_t close = detail::matching(t, k, '{', '}');
      out += std::to_string(eval_expr(t.substr(k + 1, close - k - 1), env));
      k = close;
    } else if (c == '[') {
      std::size_t close = detail::matching(t, k, '[', ']');
      std::string_view inner = t.substr(k + 1, close - k - 1);
      std::size_t eq = inner.find('='), dots = inner.find(".."), colon = inner.find(':');
      if (eq == std::string_view::npos || dots == std::string_view::npos || colon == std::string_view::npos)
        throw Error("bad loop in template '" + std::string(t) + "'");
      char var = inner[eq - 1];
      int lo = eval_expr(inner.substr(eq + 1, dots - eq - 1), env);
      int hi = eval_expr(inner.substr(dots + 2, colon - dots - 2), env);
      std::string_view body = inner.substr(colon + 1);
      int step = lo <= hi ? 1 : -1;
      for (int x = lo;; x += step) {
        env.set(var, x);
        out += ' ';
        out += expand_template(body, env);
        out += ' ';
        if (x == hi) break;
      }
      k = close;
    } else {
      out += c;
    }
  }
  return out;
}

struct VarSpec {
  char name;
  std::string lo, hi;  // expressions; lo == "pm" means {-1, +1}
};

// "i j=1..n-2 v=pm"; a bare letter ranges over 1..n
inline std::vector<VarSpec> parse_vars(std::string_view spec) {
  std::vector<VarSpec> out;
  std::size_t p = 0;
  while (p < spec.size()) {
    while (p < spec.size() && spec[p] == ' ') ++p;
    if (p >= spec.size()) break;
    std::size_t e = spec.find(' ', p);
    if (e == std::string_view::npos) e = spec.size();
    std::string_view tok = spec.substr(p, e - p);
    VarSpec v{tok[0], "1", "n"};
    if (tok.size() > 1) {
      if (tok[1] != '=') throw Error("bad variable spec '" + std::string(tok) + "'");
      std::string_view r = tok.substr(2);
      if (r == "pm") {
        v.lo = "pm";
        v.hi = "";
      } else {
        std::size_t d = r.find("..");
        if (d == std::string_view::npos) throw Error("bad variable range '" + std::string(tok) + "'");
        v.lo = std::string(r.substr(0, d));
        v.hi = std::string(r.substr(d + 2));
      }
    }
    out.push_back(v);
    p = e;
  }
  return out;
}

// Calls f(env) for every binding of the variables (in order; later ranges may use earlier names).
inline void for_each_binding(std::vector<VarSpec> const& vars, Env env, std::function<void(Env const&)> const& f,
                             std::size_t k = 0) {
  if (k == vars.size()) {
    f(env);
    return;
  }
  auto const& v = vars[k];
  if (v.lo == "pm") {
    for (int s : {1, -1}) {
      env.set(v.name, s);
      for_each_binding(vars, env, f, k + 1);
    }
    return;
  }
  int lo = eval_expr(v.lo, env), hi = eval_expr(v.hi, env);
  for (int x = lo; x <= hi; ++x) {
    env.set(v.name, x);
    for_each_binding(vars, env, f, k + 1);
  }
}

}  // namespace cbn
