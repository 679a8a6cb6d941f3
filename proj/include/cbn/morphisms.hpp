#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cbn/error.hpp"
#include "cbn/permutation.hpp"
#include "cbn/words.hpp"

namespace cbn {

// Endomorphism of F_n, given by the images of x_1..x_n.
class Endo {
 public:
  explicit Endo(int n = 0) : n_(n) {
    images_.reserve(n);
    for (int i = 1; i <= n; ++i) images_.push_back(Word::generator(n, i));
  }

  Endo(int n, std::vector<Word> images) : n_(n), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != n)
      throw RankMismatch("expected " + std::to_string(n) + " images, got " + std::to_string(images_.size()));
    for (auto const& w : images_)
      if (w.rank() != n) throw RankMismatch("image of rank " + std::to_string(w.rank()) + " in rank " + std::to_string(n));
  }

  static Endo identity(int n) { return Endo(n); }

  int rank() const { return n_; }
  std::vector<Word> const& images() const { return images_; }
  Word const& image(int i) const {
    if (i < 1 || i > n_) throw IndexError("generator index out of range");
    return images_[i - 1];
  }
  void set_image(int i, Word w) {
    if (i < 1 || i > n_) throw IndexError("generator index out of range");
    if (w.rank() != n_) throw RankMismatch("image rank mismatch");
    images_[i - 1] = std::move(w);
  }

  Word apply(Word const& w) const {
    if (w.rank() != n_) throw RankMismatch("apply: rank " + std::to_string(n_) + " vs " + std::to_string(w.rank()));
    Word r(n_);
    for (auto const& l : w.letters()) {
      if (l.sign > 0)
        r.append(images_[l.gen - 1]);
      else
        r.append_inverse(images_[l.gen - 1]);
    }
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i) {
      auto const& w = images_[i];
      if (w.size() != 1 || w[0].gen != i + 1 || w[0].sign != 1) return false;
    }
    return true;
  }

  auto operator<=>(Endo const&) const = default;
  bool operator==(Endo const&) const = default;

 private:
  int n_;
  std::vector<Word> images_;
};

inline Word apply(Endo const& e, Word const& w) { return e.apply(w); }

// e1 first, then e2
inline Endo compose(Endo const& e1, Endo const& e2) {
  if (e1.rank() != e2.rank()) throw RankMismatch("compose: ranks differ");
  std::vector<Word> im;
  im.reserve(e1.rank());
  for (auto const& w : e1.images()) im.push_back(e2.apply(w));
  return Endo(e1.rank(), std::move(im));
}

inline bool equal(Endo const& e1, Endo const& e2) {
  if (e1.rank() != e2.rank()) throw RankMismatch("equal: ranks differ");
  return e1 == e2;
}

inline bool is_identity(Endo const& e) { return e.is_identity(); }

inline bool fixes_product(Endo const& e) {
  Word p = product_of_generators(e.rank());
  return e.apply(p) == p;
}

// x_i -> w^-1 x_i w
inline Endo inner(Word const& w, int n) {
  if (w.rank() != n) throw RankMismatch("inner: word rank differs from n");
  Endo e(n);
  for (int i = 1; i <= n; ++i) {
    Word img = inv(w);
    img.push(Letter{i, 1});
    img.append(w);
    e.set_image(i, img);
  }
  return e;
}

// x_i -> x_{pi(i)}
inline Endo permutation_automorphism(Permutation const& pi) {
  int n = pi.size();
  Endo e(n);
  for (int i = 1; i <= n; ++i) e.set_image(i, Word::generator(n, pi(i)));
  return e;
}

struct ConjForm {
  Permutation pi;
  std::vector<Word> conjugators;  // beta(x_i) = f_i^-1 x_{pi(i)} f_i
};

inline ConjForm to_conj_form(Endo const& e) {
  int n = e.rank();
  std::vector<int> target(n);
  std::vector<Word> fs;
  fs.reserve(n);
  for (int i = 1; i <= n; ++i) {
    auto cr = cyclic_reduce(e.image(i));
    if (cr.core.size() != 1 || cr.core[0].sign != 1)
      throw NotConjugating("image of x" + std::to_string(i) + " is not a conjugate of a generator: " +
                           to_string(e.image(i)));
    target[i - 1] = cr.core[0].gen;
    fs.push_back(cr.f);
  }
  // Permutation's constructor rejects non-bijective maps
  return ConjForm{Permutation(std::move(target)), std::move(fs)};
}

inline Endo from_conj_form(ConjForm const& c) {
  int n = c.pi.size();
  Endo e(n);
  for (int i = 1; i <= n; ++i) {
    Word w = inv(c.conjugators[i - 1]);
    w.push(Letter{c.pi(i), 1});
    w.append(c.conjugators[i - 1]);
    e.set_image(i, w);
  }
  return e;
}

inline std::string to_string(Endo const& e) {
  std::string s;
  for (int i = 1; i <= e.rank(); ++i) {
    if (i > 1) s += ", ";
    s += "x" + std::to_string(i) + " -> " + to_string(e.image(i));
  }
  return s;
}

// Named automorphisms. Constructors check their index constraints.
namespace catalog {

namespace detail {
inline void check_range(int v, int lo, int hi, char const* what) {
  if (v < lo || v > hi)
    throw IndexError(std::string(what) + " index " + std::to_string(v) + " outside [" + std::to_string(lo) + "," +
                     std::to_string(hi) + "]");
}
inline Word gen(int n, int i, int e = 1) { return Word::generator(n, i, e); }
}  // namespace detail

inline Endo sigma(int i, int n) {
  detail::check_range(i, 1, n - 1, "sigma");
  Endo e(n);
  e.set_image(i, Word(n, {i, i + 1, -i}));
  e.set_image(i + 1, detail::gen(n, i));
  return e;
}

inline Endo sigma_inv(int i, int n) {
  detail::check_range(i, 1, n - 1, "sigma");
  Endo e(n);
  e.set_image(i, detail::gen(n, i + 1));
  e.set_image(i + 1, Word(n, {-(i + 1), i, i + 1}));
  return e;
}

inline Endo alpha(int i, int n) {
  detail::check_range(i, 1, n - 1, "alpha");
  Endo e(n);
  e.set_image(i, detail::gen(n, i + 1));
  e.set_image(i + 1, detail::gen(n, i));
  return e;
}

inline void check_eps(int i, int j, int n) {
  detail::check_range(i, 1, n, "eps");
  detail::check_range(j, 1, n, "eps");
  if (i == j) throw IndexError("eps requires i != j");
}

// x_i -> x_j^-1 x_i x_j
inline Endo eps(int i, int j, int n) {
  check_eps(i, j, n);
  Endo e(n);
  e.set_image(i, Word(n, {-j, i, j}));
  return e;
}

inline Endo eps_inv(int i, int j, int n) {
  check_eps(i, j, n);
  Endo e(n);
  e.set_image(i, Word(n, {j, i, -j}));
  return e;
}

inline void check_eps3(int i, int j, int k, int n) {
  detail::check_range(i, 1, n, "eps3");
  detail::check_range(j, 1, n, "eps3");
  detail::check_range(k, 1, n, "eps3");
  if (i == j || i == k || j == k) throw IndexError("eps3 requires distinct indices");
}

// x_i -> x_i [x_j, x_k]
inline Endo eps3(int i, int j, int k, int n) {
  check_eps3(i, j, k, n);
  Endo e(n);
  Word w = detail::gen(n, i);
  w.append(commutator(detail::gen(n, j), detail::gen(n, k)));
  e.set_image(i, w);
  return e;
}

inline Endo eps3_inv(int i, int j, int k, int n) {
  check_eps3(i, j, k, n);
  Endo e(n);
  Word w = detail::gen(n, i);
  w.append_inverse(commutator(detail::gen(n, j), detail::gen(n, k)));
  e.set_image(i, w);
  return e;
}

inline void check_a_rs(int r, int s, int n) {
  detail::check_range(r, 1, n, "a_rs");
  detail::check_range(s, 1, n, "a_rs");
  if (r >= s) throw IndexError("a_rs requires r < s");
}

inline Endo a_rs(int r, int s, int n) {
  check_a_rs(r, s, n);
  Endo e(n);
  Word c = commutator(detail::gen(n, r, -1), detail::gen(n, s, -1));
  for (int i = r + 1; i < s; ++i) {
    Word w = c;
    w.push(Letter{i, 1});
    w.append_inverse(c);
    e.set_image(i, w);
  }
  e.set_image(r, Word(n, {r, s, r, -s, -r}));
  e.set_image(s, Word(n, {r, s, -r}));
  return e;
}

// a_rs = s_{s-1} ... s_{r+1} s_r^2 s_{r+1}^-1 ... s_{s-1}^-1, inverted factorwise
inline Endo a_rs_inv(int r, int s, int n) {
  check_a_rs(r, s, n);
  Endo e(n);
  for (int k = s - 1; k > r; --k) e = compose(e, sigma(k, n));
  e = compose(e, sigma_inv(r, n));
  e = compose(e, sigma_inv(r, n));
  for (int k = r + 1; k < s; ++k) e = compose(e, sigma_inv(k, n));
  return e;
}

// Aut(F_2) with x = x1, y = x2.
inline Endo P() { return Endo(2, {Word(2, {2}), Word(2, {1})}); }
inline Endo omega() { return Endo(2, {Word(2, {-1}), Word(2, {2})}); }
inline Endo U() { return Endo(2, {Word(2, {1, 2}), Word(2, {2})}); }
inline Endo U_inv() { return Endo(2, {Word(2, {1, -2}), Word(2, {2})}); }
// x -> x, y -> y x^-1
inline Endo alpha1() { return Endo(2, {Word(2, {1}), Word(2, {2, -1})}); }
inline Endo alpha1_inv() { return Endo(2, {Word(2, {1}), Word(2, {2, 1})}); }
// x -> y, y -> y x^-1 y
inline Endo alpha2() { return Endo(2, {Word(2, {2}), Word(2, {2, -1, 2})}); }
inline Endo alpha2_inv() { return Endo(2, {Word(2, {1, -2, 1}), Word(2, {1})}); }
// x -> x, y -> x^-1 y
inline Endo alpha3() { return Endo(2, {Word(2, {1}), Word(2, {-1, 2})}); }
inline Endo alpha3_inv() { return Endo(2, {Word(2, {1}), Word(2, {1, 2})}); }

}  // namespace catalog
}  // namespace cbn
