#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgf/perron.h"
#include "sgf/period.h"
#include "sgf/quadratic.h"
#include "sgf/substitution.h"
#include "sgf/verdict.h"
#include "sgf/word_stream.h"

namespace sgf {

// Tile length per letter, in alphabet order.
struct LengthAssignment {
  std::vector<QuadraticReal> lengths;
  // Set when the PF eigenvalue has degree > 2: lengths are rational
  // approximations and `error_bound` bounds the eigenvector residual.
  bool approximate = false;
  Rational error_bound = 0;
};

// Inflation lengths, lambda_PF |I_i| = |I_{sigma(a_i)}|, i.e. the PF
// eigenvector of A with A_ij = #a_j in sigma(a_i), normalized so the last
// letter has length 1. Exact in Q(sqrt D) when lambda_PF has degree <= 2.
LengthAssignment natural_lengths(const Substitution& s);
LengthAssignment natural_lengths(const Substitution& s, const PFData& pf);

// Lengths given explicitly; all must be positive.
LengthAssignment explicit_lengths(const Substitution& s, std::vector<QuadraticReal> lengths);

// t_0 = 0, t_{n+1} = t_n + |I_{w_n}|, for n = 0..order.
std::vector<QuadraticReal> endpoint_sequence(const Substitution& s, const FixedPointSeed& seed,
                                             const LengthAssignment& lengths, std::size_t order);

struct GeometricSeries {
  // t_0..t_order.
  std::vector<QuadraticReal> coefficients;
  // G = sum_j weights[j] * X/(1-X) * C_{a_j}.
  std::vector<QuadraticReal> weights;
  // (1 - X) G = X C_g checked coefficientwise against the characteristic
  // series of every letter.
  bool identity_verified = false;
};

GeometricSeries geometric_series(const Substitution& s, const FixedPointSeed& seed, const LengthAssignment& lengths,
                                 std::size_t order);

// C_g = difference * C_{a_1} + constant / (1 - X) on two letters.
struct TwoLetterReduction {
  QuadraticReal difference;
  QuadraticReal constant;
  bool identity_verified = false;
};

TwoLetterReduction reduce_two_letter(const Substitution& s, const LengthAssignment& lengths,
                                     std::size_t check_order = 1000);

struct TwoLetterClassification {
  enum class Case { EqualLengths, EventuallyPeriodic, Transcendental, Inconclusive };

  Case which = Case::Inconclusive;
  // EqualLengths / EventuallyPeriodic: G = (|I_1| - |I_2|) X P / ((1-X)(1-X^d)) + |I_2| X / (1-X)^2.
  QuadraticReal first_length;
  QuadraticReal second_length;
  std::optional<RationalForm> first_letter_form;
  // EventuallyPeriodic: the closed form was re-expanded against t_n.
  bool closed_form_verified = false;
  std::string description;
};

std::string to_string(TwoLetterClassification::Case which);

TwoLetterClassification classify_two_letter(const Substitution& s, const FixedPointSeed& seed,
                                            const LengthAssignment& lengths, const VerdictBounds& bounds = {});

}  // namespace sgf
