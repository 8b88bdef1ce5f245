#include "sgf/series.h"

#include "sgf/error.h"

namespace sgf {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw Error(ErrorCode::InvalidArgument, "a truncated series has at least one coefficient");
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  std::vector<Rational> coefficients(order + 1);
  const auto& source = p.coefficients();
  for (std::size_t i = 0; i <= order && i < source.size(); ++i) coefficients[i] = source[i];
  return TruncatedSeries(std::move(coefficients));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> coefficients(order + 1);
  for (std::size_t i = 0; i <= order && i < coefficients_.size(); ++i) coefficients[i] = coefficients_[i];
  return TruncatedSeries(std::move(coefficients));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order() != order()) throw Error(ErrorCode::InvalidArgument, "series orders differ");
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order() != order()) throw Error(ErrorCode::InvalidArgument, "series orders differ");
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

TruncatedSeries difference_transform(const TruncatedSeries& ts, unsigned m) {
  std::vector<Rational> c = ts.coefficients();
  for (unsigned step = 0; step < m; ++step) {
    for (std::size_t n = c.size(); n-- > 1;) c[n] -= c[n - 1];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries summatory_transform(const TruncatedSeries& ts) {
  std::vector<Rational> c = ts.coefficients();
  for (std::size_t n = 1; n < c.size(); ++n) c[n] += c[n - 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries multiply_truncated(const TruncatedSeries& ts, const Polynomial& p) {
  const std::size_t order = ts.order();
  std::vector<Rational> out(order + 1);
  const auto& pc = p.coefficients();
  for (std::size_t i = 0; i < pc.size() && i <= order; ++i) {
    if (pc[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += pc[i] * ts[j];
  }
  return TruncatedSeries(std::move(out));
}

}  // namespace sgf
