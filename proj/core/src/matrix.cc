#include "sgf/matrix.h"

#include <sstream>

#include "sgf/error.h"

namespace sgf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorCode::InvalidArgument, "matrix must be square");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Integer IntMatrix::row_sum(std::size_t i) const {
  Integer sum = 0;
  for (std::size_t j = 0; j < n_; ++j) sum += (*this)(i, j);
  return sum;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
  IntMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::power(unsigned exponent) const {
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool IntMatrix::all_positive() const {
  for (const auto& e : entries_) {
    if (e <= 0) return false;
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out << ",";
    out << "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out << ",";
      out << (*this)(i, j).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

SubstitutionMatrix substitution_matrix(const Substitution& s) {
  SubstitutionMatrix m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (char c : s.image(i)) m(i, s.alphabet().require_index(c)) += 1;
  }
  return m;
}

// Faddeev-LeVerrier over Q.
Polynomial characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> coefficients(n + 1);
  coefficients[n] = 1;
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = m(i / n, i % n);
  std::vector<Rational> mk(n * n);  // M_0 = 0
  std::vector<Rational> product(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational sum = 0;
        for (std::size_t l = 0; l < n; ++l) sum += a[i * n + l] * mk[l * n + j];
        product[i * n + j] = sum;
      }
    }
    for (std::size_t i = 0; i < n; ++i) product[i * n + i] += coefficients[n - k + 1];
    mk = product;
    // c_{n-k} = -tr(A M_k) / k
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i * n + l] * mk[l * n + i];
    }
    coefficients[n - k] = -trace / static_cast<unsigned long>(k);
  }
  return Polynomial(std::move(coefficients));
}

}  // namespace sgf
