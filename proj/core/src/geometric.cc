#include "sgf/geometric.h"

#include <algorithm>

#include "sgf/error.h"
#include "sgf/genfun.h"
#include "sgf/matrix.h"

namespace sgf {

namespace {

template <class F>
bool is_zero(const F& x) {
  if constexpr (std::is_same_v<F, QuadraticReal>) {
    return x.sign() == 0;
  } else {
    return x == 0;
  }
}

// One-dimensional null space of m, normalized so the last entry is 1.
template <class F>
std::optional<std::vector<F>> null_vector(std::vector<std::vector<F>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_columns;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    F inverse = F(1) / m[r][c];
    for (auto& x : m[r]) x *= inverse;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_columns.push_back(c);
    ++r;
  }
  if (pivot_columns.size() + 1 != cols) return std::nullopt;
  std::size_t free_column = cols - 1;
  for (std::size_t c = 0, p = 0; c < cols; ++c) {
    if (p < pivot_columns.size() && pivot_columns[p] == c) {
      ++p;
    } else {
      free_column = c;
      break;
    }
  }
  std::vector<F> v(cols, F(0));
  v[free_column] = F(1);
  for (std::size_t i = 0; i < pivot_columns.size(); ++i) v[pivot_columns[i]] = -m[i][free_column];
  if (is_zero(v.back())) return std::nullopt;
  F scale = F(1) / v.back();
  for (auto& x : v) x *= scale;
  return v;
}

// Unique solution of m x = rhs, or nullopt if singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[c], m[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
      rhs[i] -= factor * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

QuadraticReal pf_as_quadratic(const PFData& pf) {
  if (pf.is_rational) return QuadraticReal(*pf.pf_exact);
  const Polynomial monic = pf.min_poly_of_pf.monic();
  const Rational c1 = monic.coefficient(1);
  const Rational c0 = monic.coefficient(0);
  const Rational discriminant = c1 * c1 - 4 * c0;
  // Integer coefficients: the factor is monic over Z.
  if (discriminant.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral minimal polynomial");
  SquareFreeSplit split = square_free_split(discriminant.get_num());
  if (!split.core.fits_slong_p()) throw Error(ErrorCode::TooLarge, "radicand too large");
  return QuadraticReal(Rational(-c1 / 2), Rational(split.square_root) / 2, split.core.get_si());
}

}  // namespace

LengthAssignment natural_lengths(const Substitution& s) { return natural_lengths(s, pf_data(substitution_matrix(s))); }

LengthAssignment natural_lengths(const Substitution& s, const PFData& pf) {
  const SubstitutionMatrix a = substitution_matrix(s);
  const std::size_t k = s.size();
  LengthAssignment out;
  if (pf.min_poly_of_pf.degree() <= 2) {
    const QuadraticReal lambda = pf_as_quadratic(pf);
    // lambda |I_i| = sum_j A_ij |I_j|: the null space of A - lambda I.
    std::vector<std::vector<QuadraticReal>> m(k, std::vector<QuadraticReal>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        m[i][j] = QuadraticReal(Rational(a(i, j)));
        if (i == j) m[i][j] -= lambda;
      }
    }
    auto v = null_vector(std::move(m));
    if (!v) throw Error(ErrorCode::InvalidArgument, "PF eigenvalue is not simple");
    out.lengths = std::move(*v);
  } else {
    const Rational lambda = (pf.pf_lower + pf.pf_upper) / 2;
    std::vector<std::vector<Rational>> m(k - 1, std::vector<Rational>(k - 1));
    std::vector<Rational> rhs(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      for (std::size_t j = 0; j + 1 < k; ++j) {
        m[i][j] = Rational(a(i, j));
        if (i == j) m[i][j] -= lambda;
      }
      rhs[i] = -Rational(a(i, k - 1));
    }
    auto v = solve(std::move(m), std::move(rhs));
    if (!v) throw Error(ErrorCode::InvalidArgument, "approximate eigenvector system is singular");
    v->push_back(Rational(1));
    Rational residual = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Rational sum = -lambda * (*v)[i];
      for (std::size_t j = 0; j < k; ++j) sum += a(i, j) * (*v)[j];
      residual = std::max(residual, Rational(abs(sum)));
    }
    Rational largest = *std::max_element(v->begin(), v->end());
    out.approximate = true;
    out.error_bound = residual + (pf.pf_upper - pf.pf_lower) * largest;
    for (auto& x : *v) out.lengths.emplace_back(std::move(x));
  }
  for (const auto& length : out.lengths) {
    if (length.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "PF eigenvector is not positive");
  }
  return out;
}

LengthAssignment explicit_lengths(const Substitution& s, std::vector<QuadraticReal> lengths) {
  if (lengths.size() != s.size()) {
    throw Error(ErrorCode::WrongAlphabetSize, "need one length per letter");
  }
  for (const auto& length : lengths) {
    if (length.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tile lengths must be positive");
  }
  return LengthAssignment{std::move(lengths), false, 0};
}

std::vector<QuadraticReal> endpoint_sequence(const Substitution& s, const FixedPointSeed& seed,
                                             const LengthAssignment& lengths, std::size_t order) {
  if (lengths.lengths.size() != s.size()) throw Error(ErrorCode::WrongAlphabetSize, "need one length per letter");
  for (const auto& length : lengths.lengths) {
    if (length.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tile lengths must be positive");
  }
  std::vector<QuadraticReal> t;
  t.reserve(order + 1);
  t.emplace_back(0);
  FixedWordStream stream(s, seed);
  while (t.size() <= order) {
    const std::size_t index = s.alphabet().require_index(stream.next());
    t.push_back(t.back() + lengths.lengths[index]);
  }
  return t;
}

GeometricSeries geometric_series(const Substitution& s, const FixedPointSeed& seed, const LengthAssignment& lengths,
                                 std::size_t order) {
  GeometricSeries out;
  out.coefficients = endpoint_sequence(s, seed, lengths, order);
  out.weights = lengths.lengths;
  // C_g from the per-letter characteristic series, then compare
  // (1 - X) G with X C_g.
  std::vector<QuadraticReal> weighted(order + 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    TruncatedSeries c = char_series(s, seed, s.alphabet().letter(j), order);
    for (std::size_t n = 0; n <= order; ++n) {
      if (c[n] != 0) weighted[n] += lengths.lengths[j] * QuadraticReal(c[n]);
    }
  }
  bool ok = out.coefficients[0].sign() == 0;
  for (std::size_t n = 1; ok && n <= order; ++n) {
    ok = out.coefficients[n] - out.coefficients[n - 1] == weighted[n - 1];
  }
  out.identity_verified = ok;
  return out;
}

TwoLetterReduction reduce_two_letter(const Substitution& s, const LengthAssignment& lengths, std::size_t check_order) {
  if (s.size() != 2 || lengths.lengths.size() != 2) {
    throw Error(ErrorCode::WrongAlphabetSize, "two-letter reduction needs exactly two letters");
  }
  TwoLetterReduction out;
  out.difference = lengths.lengths[0] - lengths.lengths[1];
  out.constant = lengths.lengths[1];
  const FixedPointSeed seed = fixed_point_seed(s);
  const Word word = fixed_word_prefix(s, seed, check_order + 1);
  const char first = s.alphabet().letter(0);
  bool ok = true;
  for (std::size_t n = 0; ok && n <= check_order; ++n) {
    QuadraticReal lhs = lengths.lengths[s.alphabet().require_index(word[n])];
    QuadraticReal rhs = out.constant;
    if (word[n] == first) rhs += out.difference;
    ok = lhs == rhs;
  }
  out.identity_verified = ok;
  return out;
}

std::string to_string(TwoLetterClassification::Case which) {
  switch (which) {
    case TwoLetterClassification::Case::EqualLengths: return "equal-lengths";
    case TwoLetterClassification::Case::EventuallyPeriodic: return "eventually-periodic";
    case TwoLetterClassification::Case::Transcendental: return "transcendental";
    case TwoLetterClassification::Case::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

TwoLetterClassification classify_two_letter(const Substitution& s, const FixedPointSeed& seed,
                                            const LengthAssignment& lengths, const VerdictBounds& bounds) {
  if (s.size() != 2 || lengths.lengths.size() != 2) {
    throw Error(ErrorCode::WrongAlphabetSize, "classification needs exactly two letters");
  }
  TwoLetterClassification out;
  out.first_length = lengths.lengths[0];
  out.second_length = lengths.lengths[1];
  if (out.first_length == out.second_length) {
    out.which = TwoLetterClassification::Case::EqualLengths;
    out.description = "G(X) = " + out.first_length.to_string() + "*X/(1 - X)^2";
    return out;
  }
  const char first = s.alphabet().letter(0);
  SeriesVerdict verdict = series_verdict(s, seed, first, SeriesKind::Characteristic, bounds);
  if (verdict.kind == SeriesVerdict::Kind::Rational) {
    out.which = TwoLetterClassification::Case::EventuallyPeriodic;
    out.first_letter_form = verdict.form;
    const RationalForm& form = *verdict.form;
    // G = (l1 - l2) X/(1-X) * P/(1-X^d) + l2 X/(1-X)^2, checked against t_n.
    const std::size_t order = bounds.max_preperiod + 10 * bounds.max_period;
    auto t = endpoint_sequence(s, seed, lengths, order);
    auto c = form.expand(order + 1);
    const QuadraticReal difference = out.first_length - out.second_length;
    QuadraticReal running_c = 0;
    bool ok = t[0].sign() == 0;
    for (std::size_t n = 1; ok && n <= order; ++n) {
      running_c += QuadraticReal(c[n - 1]);
      QuadraticReal expected = difference * running_c + out.second_length * QuadraticReal(Rational(n));
      ok = t[n] == expected;
    }
    out.closed_form_verified = ok;
    out.description = "G(X) = (" + difference.to_string() + ")*X*P(X)/((1 - X)*(1 - X^" +
                      std::to_string(form.period) + ")) + (" + out.second_length.to_string() +
                      ")*X/(1 - X)^2 with P(X) = " + form.numerator.to_string();
    return out;
  }
  AperiodicityVerdict aperiodicity = aperiodicity_verdict(s, bounds.max_preperiod, bounds.max_period);
  if (aperiodicity.kind == AperiodicityVerdict::Kind::AperiodicByIrrationalPF) {
    out.which = TwoLetterClassification::Case::Transcendental;
    out.description = "G(X) is transcendental over Q(X): unequal lengths on an aperiodic fixed word";
    return out;
  }
  out.which = TwoLetterClassification::Case::Inconclusive;
  out.description = "no period witness within bounds and PF eigenvalue rational";
  return out;
}

}  // namespace sgf
