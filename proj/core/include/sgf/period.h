#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgf/error.h"
#include "sgf/polynomial.h"
#include "sgf/rational.h"

namespace sgf {

// c_{n+period} = c_n for every checked n >= preperiod.
struct PeriodWitness {
  std::size_t preperiod = 0;
  std::size_t period = 1;

  friend bool operator==(const PeriodWitness&, const PeriodWitness&) = default;
};

template <class T>
bool witness_holds(std::span<const T> sequence, const PeriodWitness& witness) {
  if (witness.period == 0) return false;
  for (std::size_t n = witness.preperiod; n + witness.period < sequence.size(); ++n) {
    if (!(sequence[n + witness.period] == sequence[n])) return false;
  }
  return true;
}

// Smallest period d <= max_period, then smallest preperiod N <= max_preperiod,
// such that the sequence repeats with period d from N to its end. Needs at
// least max_preperiod + 10 * max_period terms so every accepted witness has
// been checked over ten periods (InsufficientData otherwise).
template <class T>
std::optional<PeriodWitness> detect_period(std::span<const T> sequence, std::size_t max_preperiod,
                                           std::size_t max_period) {
  const std::size_t needed = max_preperiod + 10 * max_period;
  if (sequence.size() < needed) {
    throw Error(ErrorCode::InsufficientData, "need " + std::to_string(needed) + " terms, have " +
                                                 std::to_string(sequence.size()));
  }
  for (std::size_t d = 1; d <= max_period; ++d) {
    if (d >= sequence.size()) break;
    // The last mismatch fixes the smallest preperiod for this d.
    std::size_t preperiod = 0;
    for (std::size_t n = sequence.size() - d; n-- > 0;) {
      if (!(sequence[n + d] == sequence[n])) {
        preperiod = n + 1;
        break;
      }
    }
    if (preperiod <= max_preperiod) return PeriodWitness{preperiod, d};
  }
  return std::nullopt;
}

// P(X) / ((1 - X)^summation_order * (1 - X^period)).
//
// summation_order is nonzero for position series, which are rational forms of
// their differenced sequence multiplied back by 1/(1 - X).
struct RationalForm {
  Polynomial numerator;
  std::size_t period = 1;
  unsigned summation_order = 0;

  // First `terms` coefficients of the expansion.
  std::vector<Rational> expand(std::size_t terms) const;
  std::string to_string() const;

  friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

// P = P1 (1 - X^d) + X^N P2 with P1 the preperiodic part and P2 one period
// block. Throws WitnessInvalid if the witness fails on the coefficients or
// the re-expansion disagrees.
RationalForm rational_form_from_witness(std::span<const Rational> coefficients, const PeriodWitness& witness);

// Re-expansion equals every available coefficient.
bool reexpands_to(const RationalForm& form, std::span<const Rational> coefficients);

}  // namespace sgf
