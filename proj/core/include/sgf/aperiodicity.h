#pragma once

#include <cstddef>
#include <string>

#include "sgf/perron.h"
#include "sgf/substitution.h"
#include "sgf/word_stream.h"

namespace sgf {

struct AperiodicityVerdict {
  enum class Kind { AperiodicByIrrationalPF, EventuallyPeriodic, InconclusiveUpTo };

  Kind kind = Kind::InconclusiveUpTo;
  // EventuallyPeriodic: the verified witness.
  std::size_t preperiod = 0;
  std::size_t period = 0;
  // InconclusiveUpTo: the search bounds that were exhausted.
  std::size_t prefix_bound = 0;
  std::size_t period_bound = 0;

  friend bool operator==(const AperiodicityVerdict&, const AperiodicityVerdict&) = default;
};

std::string to_string(AperiodicityVerdict::Kind kind);

// Irrational PF eigenvalue: aperiodic. Otherwise a bounded period search on
// the fixed word; a witness is accepted only if it also survives one more
// application of sigma^p to the searched prefix. This is a certified
// strengthening of a finite check, not a decision procedure.
AperiodicityVerdict aperiodicity_verdict(const Substitution& s, std::size_t prefix_bound, std::size_t period_bound);
AperiodicityVerdict aperiodicity_verdict(const Substitution& s, const PFData& pf, std::size_t prefix_bound,
                                         std::size_t period_bound);

}  // namespace sgf
