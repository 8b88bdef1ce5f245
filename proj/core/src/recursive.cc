#include "sgf/recursive.h"

#include "sgf/error.h"
#include "sgf/genfun.h"
#include "sgf/matrix.h"

namespace sgf {

namespace {

constexpr std::size_t kMaxWordLength = std::size_t{1} << 28;

}  // namespace

RecursivePolynomials::RecursivePolynomials(Substitution s) : s_(std::move(s)), k_(s_.size()) {
  image_indices_.resize(k_);
  for (std::size_t j = 0; j < k_; ++j) {
    for (char c : s_.image(j)) image_indices_[j].push_back(s_.alphabet().require_index(c));
  }
  // Level 0: sigma^0(a_j) = a_j.
  lengths_.emplace_back(k_, 1);
  std::vector<std::size_t> counts(k_ * k_);
  std::vector<Polynomial> chars(k_ * k_);
  std::vector<Polynomial> positions(k_ * k_);
  for (std::size_t i = 0; i < k_; ++i) {
    counts[slot(i, i)] = 1;
    chars[slot(i, i)] = Polynomial{1};
    // The single occurrence sits at position 0, so P = 0*X.
  }
  counts_.push_back(std::move(counts));
  char_.push_back(std::move(chars));
  pos_.push_back(std::move(positions));
}

void RecursivePolynomials::extend_to(unsigned level) {
  const SubstitutionMatrix matrix = substitution_matrix(s_);
  while (lengths_.size() <= level) {
    const std::size_t previous = lengths_.size() - 1;
    // Counts and lengths from A^level = A * A^(level-1).
    std::vector<std::size_t> lengths(k_);
    std::vector<std::size_t> counts(k_ * k_);
    for (std::size_t j = 0; j < k_; ++j) {
      Integer length = 0;
      for (std::size_t l = 0; l < k_; ++l) {
        if (matrix(j, l) == 0) continue;
        length += matrix(j, l) * static_cast<unsigned long>(lengths_[previous][l]);
        for (std::size_t i = 0; i < k_; ++i) {
          counts[slot(i, j)] += matrix(j, l).get_ui() * counts_[previous][slot(i, l)];
        }
      }
      if (length > kMaxWordLength) {
        throw Error(ErrorCode::TooLarge, "level " + std::to_string(previous + 1) + " words are too long");
      }
      lengths[j] = length.get_ui();
    }

    std::vector<Polynomial> chars(k_ * k_);
    std::vector<Polynomial> positions(k_ * k_);
    for (std::size_t j = 0; j < k_; ++j) {
      for (std::size_t i = 0; i < k_; ++i) {
        Polynomial c;
        Polynomial p;
        std::size_t offset = 0;  // |sigma^(level-1)(b_1 ... b_(r-1))|
        std::size_t seen = 0;    // occurrences of a_i in that prefix
        for (std::size_t b : image_indices_[j]) {
          const Polynomial& cb = char_[previous][slot(i, b)];
          const Polynomial& pb = pos_[previous][slot(i, b)];
          const std::size_t nb = counts_[previous][slot(i, b)];
          c = concat_char(c, cb, offset);
          p = concat_pos(p, pb, offset, seen, nb);
          offset += lengths_[previous][b];
          seen += nb;
        }
        chars[slot(i, j)] = std::move(c);
        positions[slot(i, j)] = std::move(p);
      }
    }
    lengths_.push_back(std::move(lengths));
    counts_.push_back(std::move(counts));
    char_.push_back(std::move(chars));
    pos_.push_back(std::move(positions));
  }
}

const Polynomial& RecursivePolynomials::char_poly(char target, char source, unsigned level) {
  extend_to(level);
  return char_[level][slot(s_.alphabet().require_index(target), s_.alphabet().require_index(source))];
}

const Polynomial& RecursivePolynomials::pos_poly(char target, char source, unsigned level) {
  extend_to(level);
  return pos_[level][slot(s_.alphabet().require_index(target), s_.alphabet().require_index(source))];
}

std::size_t RecursivePolynomials::length(char letter, unsigned level) {
  extend_to(level);
  return lengths_[level][s_.alphabet().require_index(letter)];
}

std::size_t RecursivePolynomials::count(char target, char source, unsigned level) {
  extend_to(level);
  return counts_[level][slot(s_.alphabet().require_index(target), s_.alphabet().require_index(source))];
}

Polynomial recursive_char_poly(const Substitution& s, char target, char source, unsigned level) {
  RecursivePolynomials context(s);
  return context.char_poly(target, source, level);
}

Polynomial recursive_pos_poly(const Substitution& s, char target, char source, unsigned level) {
  RecursivePolynomials context(s);
  return context.pos_poly(target, source, level);
}

}  // namespace sgf
