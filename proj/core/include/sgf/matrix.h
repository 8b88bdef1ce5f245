#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgf/polynomial.h"
#include "sgf/rational.h"
#include "sgf/substitution.h"

namespace sgf {

// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  Integer row_sum(std::size_t i) const;
  IntMatrix power(unsigned exponent) const;
  bool all_positive() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

// Entry (i, j) counts letter j in the image of letter i.
using SubstitutionMatrix = IntMatrix;

SubstitutionMatrix substitution_matrix(const Substitution& s);

// det(X*I - M), monic.
Polynomial characteristic_polynomial(const IntMatrix& m);

}  // namespace sgf
