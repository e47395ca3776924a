#include "planar/word.hpp"

#include <algorithm>

namespace planar {

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) letters_.push_back(static_cast<letter_type>(l));
}

Word Word::suffix(std::size_t from) const {
  if (from >= letters_.size()) return {};
  return Word(std::vector<letter_type>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                       letters_.end()));
}

Word Word::prefix(std::size_t count) const {
  count = std::min(count, letters_.size());
  return Word(std::vector<letter_type>(letters_.begin(),
                                       letters_.begin() + static_cast<std::ptrdiff_t>(count)));
}

bool Word::starts_with(const Word& other) const {
  return other.degree() <= degree() &&
         std::equal(other.letters_.begin(), other.letters_.end(), letters_.begin());
}

bool Word::fits(int alphabet) const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [alphabet](letter_type l) { return l >= 1 && l <= alphabet; });
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Word::letter_type> joined;
  joined.reserve(a.degree() + b.degree());
  joined.insert(joined.end(), a.letters_.begin(), a.letters_.end());
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(joined));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::vector<Word> words_of_degree(int alphabet, int degree) {
  std::vector<Word> out{Word{}};
  for (int d = 0; d < degree; ++d) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(alphabet));
    for (const auto& w : out) {
      for (int i = 1; i <= alphabet; ++i) {
        Word v = w;
        next.push_back(std::move(v.push_back(i)));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to(int alphabet, int max_degree) {
  std::vector<Word> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto layer = words_of_degree(alphabet, d);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace planar
