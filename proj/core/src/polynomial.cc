#include "sgf/polynomial.h"

#include <algorithm>
#include <sstream>

#include "sgf/error.h"

namespace sgf {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& value) { return Polynomial(std::vector<Rational>{value}); }

Polynomial Polynomial::monomial(const Rational& value, std::size_t exponent) {
  std::vector<Rational> coefficients(exponent + 1);
  coefficients[exponent] = value;
  return Polynomial(std::move(coefficients));
}

Rational Polynomial::coefficient(std::size_t index) const {
  return index < coefficients_.size() ? coefficients_[index] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coefficients_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value *= x;
    value += *it;
  }
  return value;
}

int Polynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Rational> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) out[i - 1] = coefficients_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(std::size_t exponent) const {
  if (is_zero()) return {};
  Polynomial out;
  out.coefficients_.resize(coefficients_.size() + exponent);
  std::copy(coefficients_.begin(), coefficients_.end(), out.coefficients_.begin() + static_cast<long>(exponent));
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out(*this);
  Rational lead = leading();
  for (auto& c : out.coefficients_) c /= lead;
  return out;
}

void Polynomial::add_shifted(const Polynomial& other, std::size_t shift, const Rational& scale) {
  if (other.is_zero() || scale == 0) return;
  std::size_t needed = other.coefficients_.size() + shift;
  if (coefficients_.size() < needed) coefficients_.resize(needed);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    if (other.coefficients_[i] == 0) continue;
    if (scale == 1) {
      coefficients_[i + shift] += other.coefficients_[i];
    } else {
      coefficients_[i + shift] += scale * other.coefficients_[i];
    }
  }
  trim();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_shifted(other, 0, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_shifted(other, 0, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

std::string Polynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << sgf::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << sgf::to_string(magnitude) << "*";
    out << variable;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> remainder = a.coefficients();
  const auto& divisor = b.coefficients();
  const std::size_t db = divisor.size() - 1;
  std::vector<Rational> quotient(remainder.size() - db);
  const Rational& lead = divisor.back();
  for (std::size_t k = quotient.size(); k-- > 0;) {
    Rational factor = remainder[k + db] / lead;
    quotient[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) remainder[k + j] -= factor * divisor[j];
  }
  remainder.resize(db);
  return {Polynomial(std::move(quotient)), Polynomial(std::move(remainder))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free part of zero");
  Polynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p.monic();
  return divmod(p, g).first.monic();
}

}  // namespace sgf
