#include "sgf/verdict.h"

#include "sgf/error.h"
#include "sgf/genfun.h"
#include "sgf/perron.h"
#include "sgf/series.h"

namespace sgf {

std::string to_string(SeriesKind kind) {
  return kind == SeriesKind::Characteristic ? "characteristic" : "position";
}

std::string to_string(SeriesVerdict::Kind kind) {
  switch (kind) {
    case SeriesVerdict::Kind::Rational: return "Rational";
    case SeriesVerdict::Kind::TranscendentalByAperiodicity: return "TranscendentalByAperiodicity";
    case SeriesVerdict::Kind::InconclusiveUpTo: return "InconclusiveUpTo";
  }
  return "Unknown";
}

namespace {

constexpr const char* kCharacteristicCitation =
    "aperiodic primitive substitution: at least two characteristic series are transcendental over Q(X), "
    "and every other letter is eventually periodic";
constexpr const char* kPositionCitation =
    "bounded gaps: the position series is rational iff the letter is eventually periodic";

std::vector<Rational> indicator(std::span<const char> word, char letter) {
  std::vector<Rational> out(word.size());
  for (std::size_t n = 0; n < word.size(); ++n) {
    if (word[n] == letter) out[n] = 1;
  }
  return out;
}

std::optional<SeriesVerdict> rational_position_verdict(const Substitution& s, const FixedPointSeed& seed,
                                                       char letter, const VerdictBounds& bounds) {
  const std::size_t terms = bounds.max_preperiod + 10 * bounds.max_period;
  TruncatedSeries positions = position_series(s, seed, letter, 2 * terms);
  TruncatedSeries differenced = difference_transform(positions, 1);
  const auto& all = differenced.coefficients();
  std::span<const Rational> searched(all.data(), terms + 1);
  auto witness = detect_period(searched, bounds.max_preperiod, bounds.max_period);
  if (!witness || !witness_holds(std::span<const Rational>(all), *witness)) return std::nullopt;
  RationalForm form = rational_form_from_witness(searched, *witness);
  form.summation_order = 1;
  if (!reexpands_to(form, positions.coefficients())) return std::nullopt;
  SeriesVerdict verdict;
  verdict.kind = SeriesVerdict::Kind::Rational;
  verdict.form = std::move(form);
  verdict.witness = witness;
  verdict.bounds = bounds;
  return verdict;
}

}  // namespace

std::vector<LetterVerdicts> letter_verdicts(const Substitution& s, const FixedPointSeed& seed,
                                            const AperiodicityVerdict& aperiodicity, const VerdictBounds& bounds) {
  require_primitive(s);
  const std::size_t length = bounds.max_preperiod + 10 * bounds.max_period;
  FixedWordStream stream(s, seed);
  std::vector<char> prefix;
  prefix.reserve(length);
  while (prefix.size() < length) prefix.push_back(stream.next());
  std::size_t extended_length = 0;
  for (char c : prefix) extended_length += stream.rules().image(c).size();
  std::vector<char> extended(prefix);
  while (extended.size() < extended_length) extended.push_back(stream.next());

  const std::size_t k = s.size();
  std::vector<LetterVerdicts> out(k);
  std::size_t without_witness = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const char letter = s.alphabet().letter(i);
    out[i].letter = letter;
    out[i].characteristic.bounds = bounds;
    out[i].position.bounds = bounds;
    std::vector<Rational> searched = indicator(prefix, letter);
    auto witness = detect_period(std::span<const Rational>(searched), bounds.max_preperiod, bounds.max_period);
    if (witness && witness_holds(std::span<const Rational>(indicator(extended, letter)), *witness)) {
      out[i].characteristic.kind = SeriesVerdict::Kind::Rational;
      out[i].characteristic.form = rational_form_from_witness(searched, *witness);
      out[i].characteristic.witness = witness;
    } else {
      ++without_witness;
    }
  }

  const bool aperiodic = aperiodicity.kind == AperiodicityVerdict::Kind::AperiodicByIrrationalPF;
  for (auto& entry : out) {
    if (entry.characteristic.kind == SeriesVerdict::Kind::Rational) continue;
    if (aperiodic && without_witness == 2) {
      entry.characteristic.kind = SeriesVerdict::Kind::TranscendentalByAperiodicity;
      entry.characteristic.citation = kCharacteristicCitation;
    }
  }

  for (auto& entry : out) {
    if (entry.characteristic.kind == SeriesVerdict::Kind::TranscendentalByAperiodicity) {
      entry.position.kind = SeriesVerdict::Kind::TranscendentalByAperiodicity;
      entry.position.citation = kPositionCitation;
      continue;
    }
    if (auto rational = rational_position_verdict(s, seed, entry.letter, bounds)) entry.position = *rational;
  }
  return out;
}

SeriesVerdict series_verdict(const Substitution& s, const FixedPointSeed& seed, char letter, SeriesKind kind,
                             const VerdictBounds& bounds) {
  require_primitive(s);
  const std::size_t index = s.alphabet().require_index(letter);
  AperiodicityVerdict aperiodicity = aperiodicity_verdict(s, bounds.max_preperiod, bounds.max_period);
  auto all = letter_verdicts(s, seed, aperiodicity, bounds);
  return kind == SeriesKind::Characteristic ? all[index].characteristic : all[index].position;
}

}  // namespace sgf
