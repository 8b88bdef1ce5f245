#include "sgf/quadratic.h"

#include "sgf/error.h"

namespace sgf {

QuadraticReal::QuadraticReal(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  if (d_ < 1) throw Error(ErrorCode::InvalidArgument, "radicand must be positive");
  SquareFreeSplit split = square_free_split(Integer(static_cast<long>(d_)));
  if (split.square_root != 1) throw Error(ErrorCode::InvalidArgument, "radicand must be square-free");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

std::int64_t QuadraticReal::merged_radicand(const QuadraticReal& other) const {
  if (b_ == 0) return other.d_;
  if (other.b_ == 0) return d_;
  if (d_ != other.d_) throw Error(ErrorCode::InvalidArgument, "radicands differ");
  return d_;
}

int QuadraticReal::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 D.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * static_cast<long>(d_);
  int c = cmp(lhs, rhs);
  return sa > 0 ? c : -c;
}

QuadraticReal QuadraticReal::conjugate() const {
  QuadraticReal out(*this);
  out.b_ = -out.b_;
  return out;
}

QuadraticReal QuadraticReal::inverse() const {
  Rational norm = a_ * a_ - b_ * b_ * static_cast<long>(d_);
  if (norm == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  QuadraticReal out(*this);
  out.a_ = a_ / norm;
  out.b_ = -b_ / norm;
  return out;
}

QuadraticReal& QuadraticReal::operator+=(const QuadraticReal& other) {
  d_ = merged_radicand(other);
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

QuadraticReal& QuadraticReal::operator-=(const QuadraticReal& other) {
  d_ = merged_radicand(other);
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

QuadraticReal& QuadraticReal::operator*=(const QuadraticReal& other) {
  std::int64_t d = merged_radicand(other);
  Rational a = a_ * other.a_ + b_ * other.b_ * static_cast<long>(d);
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  return *this;
}

QuadraticReal& QuadraticReal::operator/=(const QuadraticReal& other) { return *this *= other.inverse(); }

QuadraticReal QuadraticReal::operator-() const {
  QuadraticReal out(*this);
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

std::string QuadraticReal::to_string() const {
  if (b_ == 0) return sgf::to_string(a_);
  std::string surd = "sqrt(" + std::to_string(d_) + ")";
  std::string b_text = b_ == 1 ? surd : (b_ == -1 ? "-" + surd : sgf::to_string(b_) + "*" + surd);
  if (a_ == 0) return b_text;
  if (b_ < 0) {
    Rational magnitude = -b_;
    std::string m = magnitude == 1 ? surd : sgf::to_string(magnitude) + "*" + surd;
    return sgf::to_string(a_) + " - " + m;
  }
  return sgf::to_string(a_) + " + " + b_text;
}

Rational QuadraticReal::approximate(int digits) const {
  if (b_ == 0) return a_;
  // sqrt(D) to digits + guard places, with the guard scaled by |b|.
  long guard = 4 + static_cast<long>(mpz_sizeinbase(b_.get_num().get_mpz_t(), 10));
  long places = digits + guard;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Integer radicand = Integer(static_cast<long>(d_)) * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Rational approximation(root, scale);
  approximation.canonicalize();
  return a_ + b_ * approximation;
}

std::string QuadraticReal::to_decimal(int digits) const { return sgf::to_decimal(approximate(digits + 2), digits); }

SquareFreeSplit square_free_split(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "square-free split needs a positive integer");
  Integer remaining = n;
  Integer square_root = 1;
  Integer core = 1;
  for (unsigned long p = 2; Integer(p) * p <= remaining; ++p) {
    unsigned multiplicity = 0;
    while (mpz_divisible_ui_p(remaining.get_mpz_t(), p)) {
      remaining /= p;
      ++multiplicity;
    }
    for (unsigned i = 0; i < multiplicity / 2; ++i) square_root *= p;
    if (multiplicity % 2) core *= p;
  }
  core *= remaining;
  return {square_root, core};
}

}  // namespace sgf
