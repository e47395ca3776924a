#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace planar {

/// A finite sequence of letters over the alphabet {1, ..., n}. The empty word
/// indexes the constant term.
///
/// Words are ordered by degree first and lexicographically within a degree,
/// which is the canonical output order of series coefficients.
class Word {
 public:
  using letter_type = std::uint16_t;

  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<letter_type> letters) : letters_(std::move(letters)) {}

  static Word letter(int i) { return Word{i}; }

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  int front() const { return letters_.front(); }
  int back() const { return letters_.back(); }
  std::span<const letter_type> letters() const { return letters_; }

  /// Letters [from, degree()).
  Word suffix(std::size_t from) const;
  /// First `count` letters.
  Word prefix(std::size_t count) const;
  bool starts_with(const Word& other) const;
  /// True iff every letter lies in [1, alphabet].
  bool fits(int alphabet) const;

  Word& push_back(int letter) {
    letters_.push_back(static_cast<letter_type>(letter));
    return *this;
  }

  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  /// Space-separated letters, e.g. "1 2 2"; the empty word renders as "".
  std::string to_string() const;

 private:
  std::vector<letter_type> letters_;
};

/// All words of exactly `degree` letters over [1, alphabet], in lexicographic
/// order.
std::vector<Word> words_of_degree(int alphabet, int degree);

/// All words of degree <= max_degree, in canonical (degree, lex) order.
std::vector<Word> words_up_to(int alphabet, int max_degree);

}  // namespace planar
