#include "sgf/aperiodicity.h"

#include <vector>

#include "sgf/error.h"
#include "sgf/period.h"

namespace sgf {

std::string to_string(AperiodicityVerdict::Kind kind) {
  switch (kind) {
    case AperiodicityVerdict::Kind::AperiodicByIrrationalPF: return "AperiodicByIrrationalPF";
    case AperiodicityVerdict::Kind::EventuallyPeriodic: return "EventuallyPeriodic";
    case AperiodicityVerdict::Kind::InconclusiveUpTo: return "InconclusiveUpTo";
  }
  return "Unknown";
}

AperiodicityVerdict aperiodicity_verdict(const Substitution& s, std::size_t prefix_bound, std::size_t period_bound) {
  return aperiodicity_verdict(s, pf_data(substitution_matrix(s)), prefix_bound, period_bound);
}

AperiodicityVerdict aperiodicity_verdict(const Substitution& s, const PFData& pf, std::size_t prefix_bound,
                                         std::size_t period_bound) {
  require_primitive(s);
  AperiodicityVerdict verdict;
  if (!pf.is_rational) {
    verdict.kind = AperiodicityVerdict::Kind::AperiodicByIrrationalPF;
    return verdict;
  }
  verdict.prefix_bound = prefix_bound;
  verdict.period_bound = period_bound;

  const FixedPointSeed seed = fixed_point_seed(s);
  const std::size_t length = prefix_bound + 10 * period_bound;
  FixedWordStream stream(s, seed);
  std::vector<char> prefix;
  prefix.reserve(length);
  while (prefix.size() < length) prefix.push_back(stream.next());
  auto witness = detect_period(std::span<const char>(prefix), prefix_bound, period_bound);
  if (!witness) return verdict;

  // Self-similarity: sigma^p(prefix) must be the next, longer prefix and
  // must still carry the witness.
  const Substitution& rules = stream.rules();
  std::size_t extended_length = 0;
  for (char c : prefix) extended_length += rules.image(c).size();
  std::vector<char> extended(prefix);
  extended.reserve(extended_length);
  while (extended.size() < extended_length) extended.push_back(stream.next());
  std::size_t at = 0;
  for (char c : prefix) {
    for (char image_letter : rules.image(c)) {
      if (extended[at++] != image_letter) return verdict;
    }
  }
  if (!witness_holds(std::span<const char>(extended), *witness)) return verdict;

  verdict.kind = AperiodicityVerdict::Kind::EventuallyPeriodic;
  verdict.preperiod = witness->preperiod;
  verdict.period = witness->period;
  verdict.prefix_bound = 0;
  verdict.period_bound = 0;
  return verdict;
}

}  // namespace sgf
