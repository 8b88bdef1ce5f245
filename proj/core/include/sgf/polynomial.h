#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sgf/rational.h"

namespace sgf {

// Dense univariate polynomial over Q, constant term first.
//
// The coefficient vector is kept trimmed so the last entry is nonzero; the
// zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Rational& value);
  static Polynomial monomial(const Rational& value, std::size_t exponent);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  // Zero for indices past the degree.
  Rational coefficient(std::size_t index) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial shifted(std::size_t exponent) const;
  Polynomial monic() const;

  // *this += scale * X^shift * other, without temporaries.
  void add_shifted(const Polynomial& other, std::size_t shift, const Rational& scale = 1);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coefficients_ == rhs.coefficients_;
  }

  // Ascending-order rendering such as "1 + X^2 - 3/2*X^5".
  std::string to_string(char variable = 'X') const;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

}  // namespace sgf
