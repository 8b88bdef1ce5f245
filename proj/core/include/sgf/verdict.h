#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgf/aperiodicity.h"
#include "sgf/period.h"
#include "sgf/substitution.h"
#include "sgf/word_stream.h"

namespace sgf {

enum class SeriesKind { Characteristic, Position };

std::string to_string(SeriesKind kind);

struct VerdictBounds {
  std::size_t max_preperiod = 1000;
  std::size_t max_period = 200;
};

struct SeriesVerdict {
  enum class Kind { Rational, TranscendentalByAperiodicity, InconclusiveUpTo };

  Kind kind = Kind::InconclusiveUpTo;
  // Rational: the verified certificate and the witness it came from (for
  // position series, the witness of the differenced sequence).
  std::optional<RationalForm> form;
  std::optional<PeriodWitness> witness;
  // TranscendentalByAperiodicity: which implication was used.
  std::string citation;
  VerdictBounds bounds;
};

std::string to_string(SeriesVerdict::Kind kind);

struct LetterVerdicts {
  char letter = 0;
  SeriesVerdict characteristic;
  SeriesVerdict position;
};

// Verdicts for every letter.
//
// A letter is Rational when its indicator (or differenced position)
// sequence carries a period witness that also holds on sigma^p of the
// searched prefix. Transcendence needs the substitution to be
// AperiodicByIrrationalPF: then at least two characteristic series are
// transcendental, so when exactly two letters lack a witness both are
// certified. Position series follow their letter, since gaps are bounded.
std::vector<LetterVerdicts> letter_verdicts(const Substitution& s, const FixedPointSeed& seed,
                                            const AperiodicityVerdict& aperiodicity, const VerdictBounds& bounds);

// Single-series entry point; requires a primitive substitution.
SeriesVerdict series_verdict(const Substitution& s, const FixedPointSeed& seed, char letter, SeriesKind kind,
                             const VerdictBounds& bounds = {});

}  // namespace sgf
