#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgf {

// Finite words are plain strings of single-character letters.
using Word = std::string;

// Ordered set of distinct single-character letters. The order fixes matrix
// indexing everywhere.
class Alphabet {
 public:
  Alphabet() { index_.fill(-1); }
  explicit Alphabet(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  char letter(std::size_t index) const { return letters_.at(index); }
  const std::string& letters() const noexcept { return letters_; }
  bool contains(char c) const noexcept { return index_of(c).has_value(); }
  std::optional<std::size_t> index_of(char c) const noexcept {
    auto u = static_cast<unsigned char>(c);
    if (u >= index_.size() || index_[u] < 0) return std::nullopt;
    return static_cast<std::size_t>(index_[u]);
  }
  // Throws InvalidArgument for a letter outside the alphabet.
  std::size_t require_index(char c) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

 private:
  std::string letters_;
  std::array<int, 128> index_{};
};

// A substitution letter -> non-empty word, extended to words by concatenation.
class Substitution {
 public:
  // Images are listed in alphabet order. Validates non-empty images and
  // membership of every image letter.
  Substitution(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return alphabet_.size(); }
  const Word& image(std::size_t index) const { return images_.at(index); }
  const Word& image(char letter) const { return images_.at(alphabet_.require_index(letter)); }
  const std::vector<Word>& images() const noexcept { return images_; }

  Word apply(std::string_view word) const;
  // sigma^times(word); throws TooLarge if the result would exceed max_length.
  Word iterate(std::string_view word, unsigned times, std::size_t max_length = std::size_t{1} << 30) const;
  // The substitution sigma^p as a rule table.
  Substitution power(unsigned p, std::size_t max_image_length = std::size_t{1} << 26) const;

  // "a->ab\nb->a\n" in alphabet order.
  std::string to_rules() const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

// Parses the rule DSL: one `<letter> -> <image>` per line, `#` comments,
// blank lines ignored. The alphabet is the left-hand sides in order of
// appearance.
Substitution parse_substitution(std::string_view text);

}  // namespace sgf
