#pragma once

#include <cstddef>
#include <map>
#include <string_view>

#include "sgf/polynomial.h"
#include "sgf/series.h"
#include "sgf/substitution.h"
#include "sgf/word_stream.h"

namespace sgf {

// Weight g(letter) for every letter of the alphabet.
using LetterWeighting = std::map<char, Rational>;

// Sum over n of [w_n == letter] X^n.
Polynomial char_prefix_poly(std::string_view word, char letter);

// Sum over n >= 1 of (position of the n-th occurrence) X^n, positions 0-based.
Polynomial position_prefix_poly(std::string_view word, char letter);

// c_0..c_order of C_letter for the fixed word of the seed.
TruncatedSeries char_series(const Substitution& s, const FixedPointSeed& seed, char letter, std::size_t order);

// Sum_j g(a_j) C_{a_j}, read off the word in one pass.
TruncatedSeries weighted_series(const Substitution& s, const FixedPointSeed& seed, const LetterWeighting& g,
                                std::size_t order);

// Coefficients 0, p(1), ..., p(terms) of P_letter. Scans at most
// (terms + 1) * gap_bound letters (InsufficientOccurrences past that).
TruncatedSeries position_series(const Substitution& s, const FixedPointSeed& seed, char letter, std::size_t terms);

// C_{uv} = C_u + X^|u| C_v; DegreeOverflow unless deg C_u < |u|.
Polynomial concat_char(const Polynomial& cu, const Polynomial& cv, std::size_t len_u);

// P_{uv} = P_u + X^{#u} P_v + |u| X^{#u} (X + ... + X^{#v}), #w the number
// of occurrences of the letter in w. CountMismatch if a degree exceeds its count.
Polynomial concat_pos(const Polynomial& pu, const Polynomial& pv, std::size_t len_u, std::size_t count_u,
                      std::size_t count_v);

}  // namespace sgf
