#include "sgf/genfun.h"

#include "sgf/error.h"
#include "sgf/perron.h"

namespace sgf {

Polynomial char_prefix_poly(std::string_view word, char letter) {
  std::vector<Rational> coefficients(word.size());
  for (std::size_t n = 0; n < word.size(); ++n) {
    if (word[n] == letter) coefficients[n] = 1;
  }
  return Polynomial(std::move(coefficients));
}

Polynomial position_prefix_poly(std::string_view word, char letter) {
  std::vector<Rational> coefficients{0};
  for (std::size_t n = 0; n < word.size(); ++n) {
    if (word[n] == letter) coefficients.emplace_back(static_cast<unsigned long>(n));
  }
  return Polynomial(std::move(coefficients));
}

TruncatedSeries char_series(const Substitution& s, const FixedPointSeed& seed, char letter, std::size_t order) {
  s.alphabet().require_index(letter);
  std::vector<Rational> coefficients(order + 1);
  FixedWordStream stream(s, seed);
  for (std::size_t n = 0; n <= order; ++n) {
    if (stream.next() == letter) coefficients[n] = 1;
  }
  return TruncatedSeries(std::move(coefficients));
}

TruncatedSeries weighted_series(const Substitution& s, const FixedPointSeed& seed, const LetterWeighting& g,
                                std::size_t order) {
  std::vector<Rational> weights(s.size());
  std::vector<bool> seen(s.size());
  for (const auto& [letter, weight] : g) {
    std::size_t index = s.alphabet().require_index(letter);
    weights[index] = weight;
    seen[index] = true;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::InvalidArgument, std::string("no weight for letter '") + s.alphabet().letter(i) + "'");
    }
  }
  std::vector<Rational> coefficients(order + 1);
  FixedWordStream stream(s, seed);
  for (std::size_t n = 0; n <= order; ++n) coefficients[n] = weights[s.alphabet().require_index(stream.next())];
  return TruncatedSeries(std::move(coefficients));
}

TruncatedSeries position_series(const Substitution& s, const FixedPointSeed& seed, char letter, std::size_t terms) {
  s.alphabet().require_index(letter);
  const unsigned long gap = s.size() >= 2 ? gap_bound(s) : 1;
  const std::size_t scan_limit = (terms + 1) * gap;
  std::vector<Rational> coefficients(terms + 1);
  FixedWordStream stream(s, seed);
  std::size_t found = 0;
  for (std::size_t n = 0; found < terms; ++n) {
    if (n >= scan_limit) {
      throw Error(ErrorCode::InsufficientOccurrences, std::string("letter '") + letter + "' occurs only " +
                                                          std::to_string(found) + " times in " +
                                                          std::to_string(scan_limit) + " letters");
    }
    if (stream.next() == letter) coefficients[++found] = static_cast<unsigned long>(n);
  }
  return TruncatedSeries(std::move(coefficients));
}

Polynomial concat_char(const Polynomial& cu, const Polynomial& cv, std::size_t len_u) {
  if (cu.degree() >= static_cast<int>(len_u)) {
    throw Error(ErrorCode::DegreeOverflow, "deg C_u = " + std::to_string(cu.degree()) + " but |u| = " +
                                               std::to_string(len_u));
  }
  Polynomial out(cu);
  out.add_shifted(cv, len_u);
  return out;
}

Polynomial concat_pos(const Polynomial& pu, const Polynomial& pv, std::size_t len_u, std::size_t count_u,
                      std::size_t count_v) {
  if (pu.degree() > static_cast<int>(count_u) || pv.degree() > static_cast<int>(count_v)) {
    throw Error(ErrorCode::CountMismatch, "position polynomial degree exceeds its occurrence count");
  }
  Polynomial out(pu);
  out.add_shifted(pv, count_u);
  if (len_u != 0 && count_v != 0) {
    std::vector<Rational> ramp(count_u + count_v + 1);
    for (std::size_t n = 1; n <= count_v; ++n) ramp[count_u + n] = static_cast<unsigned long>(len_u);
    out += Polynomial(std::move(ramp));
  }
  return out;
}

}  // namespace sgf
