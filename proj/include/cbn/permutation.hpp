#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cbn/error.hpp"

namespace cbn {

// Bijection on {1..n}, stored one-line: map()[i-1] = pi(i).
class Permutation {
 public:
  explicit Permutation(int n = 0) : map_(n) {
    for (int i = 0; i < n; ++i) map_[i] = i + 1;
  }

  explicit Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
    int n = size();
    std::vector<bool> seen(n, false);
    for (int v : map_) {
      if (v < 1 || v > n || seen[v - 1]) throw NotBijective("not a permutation of 1.." + std::to_string(n));
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) { return Permutation(n); }

  static Permutation transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n) throw IndexError("transposition index out of range");
    Permutation p(n);
    std::swap(p.map_[i - 1], p.map_[j - 1]);
    return p;
  }

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const {
    if (i < 1 || i > size()) throw IndexError("permutation argument out of range");
    return map_[i - 1];
  }
  std::vector<int> const& one_line() const { return map_; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (map_[i] != i + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> r(map_.size());
    for (int i = 0; i < size(); ++i) r[map_[i] - 1] = i + 1;
    return Permutation(std::move(r));
  }

  // function composition: (this ∘ o)(i) = this(o(i))
  Permutation after(Permutation const& o) const {
    if (o.size() != size()) throw RankMismatch("permutation sizes differ");
    std::vector<int> r(map_.size());
    for (int i = 0; i < size(); ++i) r[i] = map_[o.map_[i] - 1];
    return Permutation(std::move(r));
  }

  // acting on the right: first this, then o
  Permutation then(Permutation const& o) const { return o.after(*this); }

  auto operator<=>(Permutation const&) const = default;
  bool operator==(Permutation const&) const = default;

 private:
  std::vector<int> map_;
};

inline std::string to_string(Permutation const& p) {
  std::string s;
  for (int v : p.one_line()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace cbn
