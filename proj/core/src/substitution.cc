#include "sgf/substitution.h"

#include <cctype>
#include <sstream>

#include "sgf/error.h"

namespace sgf {

namespace {

bool is_letter_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 128 && std::isalnum(u);
}

}  // namespace

Alphabet::Alphabet(std::string_view letters) {
  index_.fill(-1);
  for (char c : letters) {
    if (!is_letter_char(c)) {
      throw Error(ErrorCode::InvalidArgument, std::string("letter must match [A-Za-z0-9]: '") + c + "'");
    }
    auto u = static_cast<unsigned char>(c);
    if (index_[u] >= 0) throw Error(ErrorCode::InvalidArgument, std::string("duplicate letter '") + c + "'");
    index_[u] = static_cast<int>(letters_.size());
    letters_.push_back(c);
  }
}

std::size_t Alphabet::require_index(char c) const {
  auto index = index_of(c);
  if (!index) throw Error(ErrorCode::InvalidArgument, std::string("letter '") + c + "' not in alphabet");
  return *index;
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (alphabet_.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty alphabet");
  if (images_.size() != alphabet_.size()) {
    throw Error(ErrorCode::InvalidArgument, "need exactly one image per letter");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty()) {
      throw Error(ErrorCode::EmptyImage, std::string("image of '") + alphabet_.letter(i) + "' is empty");
    }
    for (char c : images_[i]) {
      if (!alphabet_.contains(c)) {
        throw Error(ErrorCode::UnknownLetterInImage,
                    std::string("letter '") + c + "' in image of '" + alphabet_.letter(i) + "' has no rule");
      }
    }
  }
}

Word Substitution::apply(std::string_view word) const {
  Word out;
  std::size_t length = 0;
  for (char c : word) length += image(c).size();
  out.reserve(length);
  for (char c : word) out += images_[alphabet_.require_index(c)];
  return out;
}

Word Substitution::iterate(std::string_view word, unsigned times, std::size_t max_length) const {
  Word current(word);
  for (unsigned t = 0; t < times; ++t) {
    std::size_t length = 0;
    for (char c : current) length += images_[alphabet_.require_index(c)].size();
    if (length > max_length) {
      throw Error(ErrorCode::TooLarge, "word would exceed " + std::to_string(max_length) + " letters");
    }
    current = apply(current);
  }
  return current;
}

Substitution Substitution::power(unsigned p, std::size_t max_image_length) const {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "power must be positive");
  std::vector<Word> images;
  images.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    images.push_back(iterate(std::string(1, alphabet_.letter(i)), p, max_image_length));
  }
  return Substitution(alphabet_, std::move(images));
}

std::string Substitution::to_rules() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    out += alphabet_.letter(i);
    out += "->";
    out += images_[i];
    out += '\n';
  }
  return out;
}

namespace {

struct PendingRule {
  char letter;
  Word image;
  int line;
  int image_column;
};

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::vector<PendingRule> rules;
  std::string letters;
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t i = 0;
    auto column = [&i] { return static_cast<int>(i) + 1; };
    auto skip_space = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    };
    skip_space();
    if (i < line.size()) {
      char letter = line[i];
      if (!is_letter_char(letter)) {
        throw SyntaxError(ErrorCode::SyntaxError, line_number, column(), "expected a letter [A-Za-z0-9]");
      }
      ++i;
      if (i < line.size() && is_letter_char(line[i])) {
        throw SyntaxError(ErrorCode::SyntaxError, line_number, column(), "letters are single characters");
      }
      skip_space();
      if (line.substr(i, 2) != "->") {
        throw SyntaxError(ErrorCode::SyntaxError, line_number, column(), "expected '->'");
      }
      i += 2;
      skip_space();
      int image_column = column();
      Word image;
      while (i < line.size() && is_letter_char(line[i])) image.push_back(line[i++]);
      skip_space();
      if (i < line.size()) {
        throw SyntaxError(ErrorCode::SyntaxError, line_number, column(), "unexpected character in image");
      }
      if (image.empty()) {
        throw SyntaxError(ErrorCode::EmptyImage, line_number, image_column,
                          std::string("image of '") + letter + "' is empty");
      }
      if (letters.find(letter) != std::string::npos) {
        throw SyntaxError(ErrorCode::DuplicateRule, line_number, 1 + static_cast<int>(line.find(letter)),
                          std::string("second rule for '") + letter + "'");
      }
      letters.push_back(letter);
      rules.push_back({letter, std::move(image), line_number, image_column});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (rules.empty()) throw SyntaxError(ErrorCode::SyntaxError, line_number, 1, "no rules");

  Alphabet alphabet(letters);
  for (const auto& rule : rules) {
    for (std::size_t k = 0; k < rule.image.size(); ++k) {
      if (!alphabet.contains(rule.image[k])) {
        throw SyntaxError(ErrorCode::UnknownLetterInImage, rule.line, rule.image_column + static_cast<int>(k),
                          std::string("letter '") + rule.image[k] + "' has no rule");
      }
    }
  }
  std::vector<Word> images;
  images.reserve(rules.size());
  for (auto& rule : rules) images.push_back(std::move(rule.image));
  return Substitution(std::move(alphabet), std::move(images));
}

}  // namespace sgf
