#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgf/substitution.h"

namespace sgf {

// sigma^power(start_letter) begins with start_letter and has length >= 2, so
// the words sigma^(power*n)(start_letter) converge to a one-sided fixed word.
struct FixedPointSeed {
  unsigned power = 1;
  char start_letter = 0;

  friend bool operator==(const FixedPointSeed&, const FixedPointSeed&) = default;
};

// Smallest power first, then alphabet order. Throws NotPrimitive, or
// NoGrowingSeed when no seed exists (e.g. a -> a).
FixedPointSeed fixed_point_seed(const Substitution& s);

// Lazy stream of the fixed word of a seed.
//
// Letters are produced by a depth-first walk of the expansion tree of
// sigma^power; the stack depth grows logarithmically with the number of
// letters emitted. Single consumer; movable, not copyable across threads in
// use.
class FixedWordStream {
 public:
  FixedWordStream(const Substitution& s, const FixedPointSeed& seed);

  char next();
  std::size_t emitted() const noexcept { return emitted_; }
  std::size_t depth() const noexcept { return frames_.size(); }
  // The rules actually expanded (sigma^power).
  const Substitution& rules() const noexcept { return rules_; }

 private:
  struct Frame {
    std::uint8_t letter;
    std::uint32_t position;
    std::uint32_t height;
  };

  Substitution rules_;
  std::vector<std::vector<std::uint8_t>> images_;
  std::uint8_t root_;
  std::uint32_t root_height_ = 0;
  std::vector<Frame> frames_;
  std::size_t emitted_ = 0;
};

Word fixed_word_prefix(const Substitution& s, const FixedPointSeed& seed, std::size_t n);

// Letter indices instead of characters.
std::vector<std::uint8_t> fixed_word_indices(const Substitution& s, const FixedPointSeed& seed, std::size_t n);

}  // namespace sgf
