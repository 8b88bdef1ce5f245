#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sgf/error.h"
#include "sgf/polynomial.h"
#include "sgf/rational.h"

namespace sgf {

// Integer coefficients, constant term first, trimmed.
using IntegerPolynomial = std::vector<Integer>;

// Clears denominators and divides by the (positive) content.
IntegerPolynomial primitive_integer_part(const Polynomial& p);

// Sign of p(x) for an integer polynomial and exact rational x.
int sign_at(const IntegerPolynomial& p, const Rational& x);

// Sturm sequence of the square-free part of a polynomial.
//
// Members are stored as primitive integer polynomials; each is a positive
// multiple of the textbook member p_0 = p, p_1 = p', p_{i+1} = -rem(p_{i-1}, p_i),
// so sign-variation counts are unchanged.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<IntegerPolynomial>& members() const noexcept { return members_; }
  std::vector<Polynomial> as_polynomials() const;

  // Square-free part of the input, as p_0 of the chain.
  const IntegerPolynomial& base() const noexcept { return members_.front(); }
  int base_degree() const noexcept { return static_cast<int>(members_.front().size()) - 1; }
  // True when the input had a repeated factor and was reduced.
  bool reduced() const noexcept { return reduced_; }

  // Sign variations of the chain at x (zeros dropped).
  int variations(const Rational& x) const;
  // Distinct real roots in (l, r]. Valid even if l or r is a root.
  int roots_in(const Rational& l, const Rational& r) const;

 private:
  std::vector<IntegerPolynomial> members_;
  bool reduced_ = false;
};

SturmChain sturm_chain(const Polynomial& p);

// Distinct real roots in (l, r]; requires l < r and p(l) != 0.
int count_roots(const Polynomial& p, const Rational& l, const Rational& r);
int count_roots(const SturmChain& chain, const Rational& l, const Rational& r);

// The largest root in the half-open interval (lower, upper].
struct RootBracket {
  Rational lower;
  Rational upper;
};

// Brackets the largest root of p in (l, r] to width <= eps.
RootBracket isolate_max_root(const Polynomial& p, const Rational& l, const Rational& r,
                             const Rational& eps);
RootBracket isolate_max_root(const SturmChain& chain, const Rational& l, const Rational& r,
                             const Rational& eps);

// Exact proof that a polynomial is strictly positive on (left, right), and at
// `right` too when right_closed is set.
struct ExclusionCertificate {
  int degree = 0;
  std::string polynomial_hash;
  Rational left;
  Rational right;
  bool right_closed = true;
  int variations_left = 0;
  int variations_right = 0;
  int root_count = 0;
  Rational sample;
  int sign_at_sample = 0;
};

class RootPresentError : public Error {
 public:
  RootPresentError(const std::string& message, RootBracket bracket)
      : Error(ErrorCode::RootPresent, message), bracket_(std::move(bracket)) {}
  const RootBracket& bracket() const noexcept { return bracket_; }

 private:
  RootBracket bracket_;
};

ExclusionCertificate certify_positive(const Polynomial& p, const Rational& l, const Rational& r);
ExclusionCertificate certify_positive(const Polynomial& p, const SturmChain& chain,
                                      const Rational& l, const Rational& r);

// Re-derives the counts and the sample sign from scratch.
bool check_certificate(const ExclusionCertificate& certificate, const Polynomial& p);

// FNV-1a over the canonical coefficient strings, as 16 hex digits.
std::string polynomial_hash(const Polynomial& p);

// Moves l toward r in steps of 2^-64 until p(l) != 0.
Rational shrink_endpoint(const Polynomial& p, Rational l, const Rational& r);

}  // namespace sgf
