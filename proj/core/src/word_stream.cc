#include "sgf/word_stream.h"

#include "sgf/error.h"
#include "sgf/matrix.h"
#include "sgf/perron.h"

namespace sgf {

FixedPointSeed fixed_point_seed(const Substitution& s) {
  unsigned witness = require_primitive(s);
  const std::size_t k = s.size();
  std::vector<std::size_t> first(k);
  for (std::size_t i = 0; i < k; ++i) first[i] = s.alphabet().require_index(s.image(i).front());
  std::vector<std::size_t> first_power(k);
  for (std::size_t i = 0; i < k; ++i) first_power[i] = i;
  const SubstitutionMatrix matrix = substitution_matrix(s);
  IntMatrix lengths = IntMatrix::identity(k);
  // Every first-letter cycle has length <= k, and primitive growth makes
  // images long after `witness` steps; past this bound no seed exists.
  const unsigned limit = static_cast<unsigned>(k) * (witness + 1) + 1;
  for (unsigned p = 1; p <= limit; ++p) {
    for (std::size_t i = 0; i < k; ++i) first_power[i] = first[first_power[i]];
    lengths = lengths * matrix;
    for (std::size_t i = 0; i < k; ++i) {
      if (first_power[i] == i && lengths.row_sum(i) >= 2) return {p, s.alphabet().letter(i)};
    }
  }
  throw Error(ErrorCode::NoGrowingSeed, "no letter generates a growing fixed word");
}

FixedWordStream::FixedWordStream(const Substitution& s, const FixedPointSeed& seed)
    : rules_(s.power(seed.power)), root_(static_cast<std::uint8_t>(s.alphabet().require_index(seed.start_letter))) {
  if (rules_.image(std::size_t{root_}).size() < 2 || rules_.image(std::size_t{root_}).front() != seed.start_letter) {
    throw Error(ErrorCode::InvalidArgument, "seed does not generate a fixed word");
  }
  images_.resize(rules_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (char c : rules_.image(i)) images_[i].push_back(static_cast<std::uint8_t>(rules_.alphabet().require_index(c)));
  }
}

char FixedWordStream::next() {
  if (emitted_ == 0) {
    ++emitted_;
    root_height_ = 0;
    return rules_.alphabet().letter(root_);
  }
  for (;;) {
    if (frames_.empty()) {
      // sigma^h(a) is a prefix of sigma^(h+1)(a) = sigma^h(a) sigma^h(b_2) ...;
      // its first child subtree has already been emitted.
      ++root_height_;
      frames_.push_back({root_, 1, root_height_});
      continue;
    }
    Frame& top = frames_.back();
    const auto& image = images_[top.letter];
    if (top.position == image.size()) {
      frames_.pop_back();
      continue;
    }
    std::uint8_t child = image[top.position++];
    if (top.height == 1) {
      ++emitted_;
      return rules_.alphabet().letter(child);
    }
    frames_.push_back({child, 0, top.height - 1});
  }
}

Word fixed_word_prefix(const Substitution& s, const FixedPointSeed& seed, std::size_t n) {
  Word out;
  if (n == 0) return out;
  out.reserve(n);
  FixedWordStream stream(s, seed);
  while (out.size() < n) out.push_back(stream.next());
  return out;
}

std::vector<std::uint8_t> fixed_word_indices(const Substitution& s, const FixedPointSeed& seed, std::size_t n) {
  std::vector<std::uint8_t> out;
  out.reserve(n);
  FixedWordStream stream(s, seed);
  while (out.size() < n) out.push_back(static_cast<std::uint8_t>(s.alphabet().require_index(stream.next())));
  return out;
}

}  // namespace sgf
