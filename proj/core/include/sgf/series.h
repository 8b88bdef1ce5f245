#pragma once

#include <cstddef>
#include <vector>

#include "sgf/polynomial.h"
#include "sgf/rational.h"

namespace sgf {

// Coefficients c_0..c_N of a formal power series.
class TruncatedSeries {
 public:
  TruncatedSeries() : coefficients_(1) {}
  explicit TruncatedSeries(std::vector<Rational> coefficients);
  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(std::vector<Rational>(order + 1)); }
  // Truncates or zero-pads p to the given order.
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const noexcept { return coefficients_.size() - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  std::vector<Rational>& coefficients() noexcept { return coefficients_; }
  const Rational& operator[](std::size_t n) const { return coefficients_.at(n); }
  Rational& operator[](std::size_t n) { return coefficients_.at(n); }

  TruncatedSeries truncated(std::size_t order) const;
  Polynomial to_polynomial() const { return Polynomial(coefficients_); }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  std::vector<Rational> coefficients_;
};

// (1 - X)^m * ts, same order.
TruncatedSeries difference_transform(const TruncatedSeries& ts, unsigned m);

// Running sums: coefficient n becomes c_0 + ... + c_n, i.e. ts / (1 - X).
TruncatedSeries summatory_transform(const TruncatedSeries& ts);

// p * ts, truncated to the order of ts.
TruncatedSeries multiply_truncated(const TruncatedSeries& ts, const Polynomial& p);

}  // namespace sgf
