#pragma once

#include <cstdint>
#include <string>

#include "sgf/rational.h"

namespace sgf {

// a + b*sqrt(D) with rational a, b and square-free D >= 1.
//
// Values with b == 0 are plain rationals and combine with any radicand;
// combining two irrational values with different radicands throws.
class QuadraticReal {
 public:
  QuadraticReal() = default;
  QuadraticReal(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadraticReal(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadraticReal(Rational a, Rational b, std::int64_t radicand);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_part() const noexcept { return b_; }
  std::int64_t radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return b_ == 0; }

  int sign() const;
  QuadraticReal conjugate() const;
  QuadraticReal inverse() const;

  QuadraticReal& operator+=(const QuadraticReal& other);
  QuadraticReal& operator-=(const QuadraticReal& other);
  QuadraticReal& operator*=(const QuadraticReal& other);
  QuadraticReal& operator/=(const QuadraticReal& other);
  friend QuadraticReal operator+(QuadraticReal x, const QuadraticReal& y) { return x += y; }
  friend QuadraticReal operator-(QuadraticReal x, const QuadraticReal& y) { return x -= y; }
  friend QuadraticReal operator*(QuadraticReal x, const QuadraticReal& y) { return x *= y; }
  friend QuadraticReal operator/(QuadraticReal x, const QuadraticReal& y) { return x /= y; }
  QuadraticReal operator-() const;

  friend bool operator==(const QuadraticReal& x, const QuadraticReal& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator<(const QuadraticReal& x, const QuadraticReal& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadraticReal& x, const QuadraticReal& y) { return y < x; }
  friend bool operator<=(const QuadraticReal& x, const QuadraticReal& y) { return !(y < x); }
  friend bool operator>=(const QuadraticReal& x, const QuadraticReal& y) { return !(x < y); }

  // "a + b*sqrt(D)" with exact rationals, or just "a".
  std::string to_string() const;
  // Rounded decimal with `digits` fractional digits.
  std::string to_decimal(int digits) const;
  // Rational within 10^-digits of the value.
  Rational approximate(int digits) const;

 private:
  std::int64_t merged_radicand(const QuadraticReal& other) const;

  Rational a_;
  Rational b_;
  std::int64_t d_ = 1;
};

// Largest square s^2 dividing n, split as n = s^2 * core.
struct SquareFreeSplit {
  Integer square_root;
  Integer core;
};
SquareFreeSplit square_free_split(const Integer& n);

}  // namespace sgf
