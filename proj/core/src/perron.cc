#include "sgf/perron.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "sgf/error.h"
#include "sgf/realroots.h"

namespace sgf {

std::optional<unsigned> is_primitive(const SubstitutionMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return std::nullopt;
  std::vector<char> base(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) base[i * k + j] = m(i, j) > 0;
  }
  std::vector<char> reach = base;
  std::vector<char> next(k * k);
  const unsigned bound = static_cast<unsigned>((k - 1) * k + 1);
  for (unsigned power = 1; power <= bound; ++power) {
    if (std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; })) return power;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!reach[i * k + l]) continue;
        for (std::size_t j = 0; j < k; ++j) next[i * k + j] |= base[l * k + j];
      }
    }
    reach.swap(next);
  }
  return std::nullopt;
}

unsigned require_primitive(const Substitution& s) {
  auto witness = is_primitive(substitution_matrix(s));
  if (!witness) throw Error(ErrorCode::NotPrimitive, "substitution is not primitive");
  return *witness;
}

namespace {

using Complex = std::complex<long double>;

// Durand-Kerner on a monic polynomial with rational coefficients.
std::vector<Complex> approximate_roots(const Polynomial& monic) {
  const int n = monic.degree();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = monic.coefficient(static_cast<std::size_t>(i)).get_d();
  auto eval = [&](Complex z) {
    Complex v = 0;
    for (int i = n; i >= 0; --i) v = v * z + c[static_cast<std::size_t>(i)];
    return v;
  };
  long double radius = 1;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::fabs(c[static_cast<std::size_t>(i)]));
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const Complex seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i) * (radius / 2);
  for (int iteration = 0; iteration < 2000; ++iteration) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      Complex denom = 1;
      for (int j = 0; j < n; ++j) {
        if (i != j) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      }
      if (std::abs(denom) == 0) denom = 1e-30L;
      Complex step = eval(z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

// Monic integer factor of the square-free part whose roots are the chosen
// approximations, or nullopt if the rounded product does not divide exactly.
std::optional<Polynomial> try_factor(const std::vector<Complex>& roots, const std::vector<std::size_t>& subset,
                                     const Polynomial& square_free) {
  std::vector<Complex> product{Complex(1)};
  for (std::size_t index : subset) {
    std::vector<Complex> next(product.size() + 1);
    for (std::size_t i = 0; i < product.size(); ++i) {
      next[i + 1] += product[i];
      next[i] -= product[i] * roots[index];
    }
    product = std::move(next);
  }
  std::vector<Rational> coefficients;
  for (const auto& value : product) {
    if (std::fabs(value.imag()) > 1e-6L) return std::nullopt;
    long double rounded = std::round(value.real());
    if (std::fabs(value.real() - rounded) > 1e-6L || std::fabs(rounded) > 1e17L) return std::nullopt;
    coefficients.emplace_back(Integer(std::to_string(static_cast<long long>(rounded))));
  }
  Polynomial candidate(std::move(coefficients));
  if (divmod(square_free, candidate).second.is_zero()) return candidate;
  return std::nullopt;
}

bool next_combination(std::vector<std::size_t>& chosen, std::size_t n) {
  const std::size_t k = chosen.size();
  for (std::size_t i = k; i-- > 0;) {
    if (chosen[i] < n - k + i) {
      ++chosen[i];
      for (std::size_t j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Polynomial minimal_polynomial_at(const Polynomial& square_free, const RootBracket& bracket) {
  std::vector<Complex> roots = approximate_roots(square_free);
  const long double target = Rational((bracket.lower + bracket.upper) / 2).get_d();
  std::size_t pf_index = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - target) < std::abs(roots[pf_index] - target)) pf_index = i;
  }
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i != pf_index) others.push_back(i);
  }
  for (std::size_t extra = 0; extra < roots.size(); ++extra) {
    std::vector<std::size_t> chosen(extra);
    for (std::size_t i = 0; i < extra; ++i) chosen[i] = i;
    do {
      std::vector<std::size_t> subset{pf_index};
      for (std::size_t i : chosen) subset.push_back(others[i]);
      auto factor = try_factor(roots, subset, square_free);
      if (factor && factor->sign_at(bracket.lower) * factor->sign_at(bracket.upper) <= 0) return *factor;
    } while (extra > 0 && next_combination(chosen, others.size()));
  }
  return square_free;
}

}  // namespace

PFData pf_data(const SubstitutionMatrix& m) {
  auto witness = is_primitive(m);
  if (!witness) throw Error(ErrorCode::NotPrimitive, "matrix is not primitive");
  if (m.size() > 20) throw Error(ErrorCode::TooLarge, "alphabet too large for minimal-polynomial search");
  PFData data;
  data.primitivity_witness = witness;
  data.char_poly = characteristic_polynomial(m);
  Polynomial square_free = square_free_part(data.char_poly);

  // Row sums bound the spectral radius.
  Integer max_row = 0;
  for (std::size_t i = 0; i < m.size(); ++i) max_row = std::max(max_row, m.row_sum(i));
  const Rational eps(Integer(1), Integer("1000000000000"));
  SturmChain chain(square_free);
  RootBracket coarse = isolate_max_root(chain, Rational(0), Rational(max_row), eps);

  data.min_poly_of_pf = minimal_polynomial_at(square_free, coarse);
  data.is_rational = data.min_poly_of_pf.degree() == 1;
  if (data.is_rational) {
    Rational root = -data.min_poly_of_pf.coefficient(0) / data.min_poly_of_pf.coefficient(1);
    data.pf_exact = root;
    data.pf_lower = root - pow2(-44);
    data.pf_upper = root + pow2(-44);
  } else {
    RootBracket fine = isolate_max_root(data.min_poly_of_pf, Rational(0), Rational(max_row), eps);
    data.pf_lower = fine.lower;
    data.pf_upper = fine.upper;
  }
  return data;
}

unsigned long gap_bound(const Substitution& s) {
  if (s.size() < 2) throw Error(ErrorCode::WrongAlphabetSize, "gap bound needs at least two letters");
  unsigned witness = require_primitive(s);
  IntMatrix power = substitution_matrix(s).power(witness);
  Integer longest = 0;
  for (std::size_t i = 0; i < s.size(); ++i) longest = std::max(longest, power.row_sum(i));
  Integer bound = 2 * longest;
  if (!bound.fits_ulong_p()) throw Error(ErrorCode::TooLarge, "gap bound overflows");
  return bound.get_ui();
}

}  // namespace sgf
