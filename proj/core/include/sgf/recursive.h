#pragma once

#include <cstddef>
#include <vector>

#include "sgf/polynomial.h"
#include "sgf/substitution.h"

namespace sgf {

// C_{a_i, sigma^m(a_j)} and P_{a_i, sigma^m(a_j)} built level by level from
// sigma(a_j) = b_1...b_l, with the shifts |sigma^(m-1)(b_1...b_(r-1))| and the
// occurrence counts read from powers of the substitution matrix. Words are
// never expanded.
//
// Each instance memoizes all (target, source) pairs per level. Not
// thread-safe for concurrent mutation; the free functions below use a fresh
// context per call.
class RecursivePolynomials {
 public:
  explicit RecursivePolynomials(Substitution s);

  const Polynomial& char_poly(char target, char source, unsigned level);
  const Polynomial& pos_poly(char target, char source, unsigned level);

  // |sigma^level(letter)|
  std::size_t length(char letter, unsigned level);
  // number of `target` in sigma^level(source)
  std::size_t count(char target, char source, unsigned level);

 private:
  void extend_to(unsigned level);
  std::size_t slot(std::size_t target, std::size_t source) const { return target * k_ + source; }

  Substitution s_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> image_indices_;
  // Per level: lengths_[m][j], counts_[m][slot(i, j)], and the polynomials.
  std::vector<std::vector<std::size_t>> lengths_;
  std::vector<std::vector<std::size_t>> counts_;
  std::vector<std::vector<Polynomial>> char_;
  std::vector<std::vector<Polynomial>> pos_;
};

Polynomial recursive_char_poly(const Substitution& s, char target, char source, unsigned level);
Polynomial recursive_pos_poly(const Substitution& s, char target, char source, unsigned level);

}  // namespace sgf
