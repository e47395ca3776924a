#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "planar/errors.hpp"
#include "planar/scalar.hpp"
#include "planar/word.hpp"

namespace planar {

/// Truncated non-commutative formal power series over the letters
/// x_1, ..., x_n.
///
/// Coefficients are known for every word of degree <= max_degree(); words of
/// higher degree are unknown, never implicitly zero. The term map holds no
/// zero coefficients, so two series are equal iff they have the same
/// alphabet, truncation degree and term map.
template <Scalar S>
class BasicSeries {
 public:
  using scalar_type = S;
  using term_map = std::map<Word, S>;

  BasicSeries(int alphabet, int max_degree) : alphabet_(alphabet), max_degree_(max_degree) {
    if (alphabet < 1) throw PreconditionError("alphabet size must be >= 1");
    if (max_degree < 0) throw PreconditionError("truncation degree must be >= 0");
  }

  static BasicSeries zero(int alphabet, int max_degree) { return {alphabet, max_degree}; }

  static BasicSeries constant(int alphabet, int max_degree, const S& value) {
    BasicSeries s(alphabet, max_degree);
    s.accumulate(Word{}, value);
    return s;
  }

  static BasicSeries one(int alphabet, int max_degree) {
    return constant(alphabet, max_degree, S(1));
  }

  /// The monomial x_i.
  static BasicSeries letter(int alphabet, int max_degree, int i) {
    BasicSeries s(alphabet, max_degree);
    s.check_word(Word{i});
    if (max_degree >= 1) s.accumulate(Word{i}, S(1));
    return s;
  }

  int alphabet() const { return alphabet_; }
  int max_degree() const { return max_degree_; }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const Word& w) const {
    check_word(w);
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  S constant_term() const { return coefficient(Word{}); }

  /// Smallest degree carrying a nonzero coefficient; max_degree()+1 for zero.
  int valuation() const {
    return terms_.empty() ? max_degree_ + 1 : static_cast<int>(terms_.begin()->first.degree());
  }

  /// Largest degree carrying a nonzero coefficient; -1 for zero.
  int top_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
  }

  // G^1, G^0 and the tangent-to-identity set G^c.
  bool in_g1() const { return constant_term() == S(1); }
  bool in_g0() const { return is_zero_scalar(constant_term()); }
  bool in_gc() const {
    if (!in_g0()) return false;
    for (int i = 1; i <= alphabet_; ++i)
      if (!(coefficient(Word{i}) == S(1))) return false;
    return true;
  }

  /// Adds `value` to the coefficient of `w`; words above max_degree() are
  /// dropped.
  void accumulate(const Word& w, const S& value) {
    check_word(w);
    if (static_cast<int>(w.degree()) > max_degree_ || is_zero_scalar(value)) return;
    auto [it, inserted] = terms_.try_emplace(w, value);
    if (inserted) {
      ScalarTraits<S>::normalize(it->second);
    } else {
      it->second += value;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  BasicSeries truncated(int degree) const {
    BasicSeries out(alphabet_, std::min(degree, max_degree_));
    for (const auto& [w, c] : terms_) {
      if (static_cast<int>(w.degree()) > out.max_degree_) break;
      out.terms_.emplace_hint(out.terms_.end(), w, c);
    }
    return out;
  }

  BasicSeries& operator+=(const BasicSeries& other) {
    check_alphabet(other);
    if (other.max_degree_ < max_degree_) *this = truncated(other.max_degree_);
    for (const auto& [w, c] : other.terms_) accumulate(w, c);
    return *this;
  }

  BasicSeries& operator-=(const BasicSeries& other) {
    check_alphabet(other);
    if (other.max_degree_ < max_degree_) *this = truncated(other.max_degree_);
    for (const auto& [w, c] : other.terms_) accumulate(w, S(-c));
    return *this;
  }

  BasicSeries& operator*=(const S& c) {
    if (is_zero_scalar(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator-(BasicSeries a) { return a *= S(-1); }
  friend BasicSeries operator*(const S& c, BasicSeries f) { return f *= c; }

  /// Cauchy (concatenation) product, truncated to the smaller degree.
  friend BasicSeries operator*(const BasicSeries& f, const BasicSeries& g) {
    f.check_alphabet(g);
    return multiply_truncated(f, g, std::min(f.max_degree_, g.max_degree_));
  }

  /// Cauchy product keeping only words of degree <= degree.
  static BasicSeries multiply_truncated(const BasicSeries& f, const BasicSeries& g, int degree) {
    f.check_alphabet(g);
    BasicSeries out(f.alphabet_, std::max(degree, 0));
    if (degree < 0) return out;
    for (const auto& [u, a] : f.terms_) {
      const int room = degree - static_cast<int>(u.degree());
      if (room < 0) break;
      for (const auto& [v, b] : g.terms_) {
        if (static_cast<int>(v.degree()) > room) break;
        out.accumulate(u + v, S(a * b));
      }
    }
    return out;
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return a.alphabet_ == b.alphabet_ && a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
  }

  void check_alphabet(const BasicSeries& other) const {
    if (other.alphabet_ != alphabet_)
      throw PreconditionError("alphabet mismatch: " + std::to_string(alphabet_) + " vs " +
                              std::to_string(other.alphabet_));
  }

  void check_word(const Word& w) const {
    if (!w.fits(alphabet_))
      throw PreconditionError("word [" + w.to_string() + "] has a letter outside [1, " +
                              std::to_string(alphabet_) + "]");
  }

 private:
  static bool is_zero_scalar(const S& v) { return ScalarTraits<S>::is_zero(v); }

  int alphabet_;
  int max_degree_;
  term_map terms_;
};

using Series = BasicSeries<Rational>;
using FloatSeries = BasicSeries<double>;

/// An n-tuple of series sharing alphabet and truncation degree.
template <Scalar S>
class BasicField {
 public:
  using series_type = BasicSeries<S>;

  /// Components are truncated to their common minimum degree.
  explicit BasicField(std::vector<series_type> components) : components_(std::move(components)) {
    if (components_.empty()) throw PreconditionError("a field needs at least one component");
    const int n = components_.front().alphabet();
    if (static_cast<int>(components_.size()) != n)
      throw PreconditionError("field has " + std::to_string(components_.size()) +
                              " components over an alphabet of size " + std::to_string(n));
    int degree = components_.front().max_degree();
    for (const auto& c : components_) {
      components_.front().check_alphabet(c);
      degree = std::min(degree, c.max_degree());
    }
    for (auto& c : components_)
      if (c.max_degree() != degree) c = c.truncated(degree);
  }

  /// (x_1, ..., x_n).
  static BasicField identity(int alphabet, int max_degree) {
    std::vector<series_type> cs;
    cs.reserve(static_cast<std::size_t>(alphabet));
    for (int i = 1; i <= alphabet; ++i) cs.push_back(series_type::letter(alphabet, max_degree, i));
    return BasicField(std::move(cs));
  }

  int alphabet() const { return components_.front().alphabet(); }
  int max_degree() const { return components_.front().max_degree(); }
  std::size_t size() const { return components_.size(); }

  /// Component for letter i (1-based, like the alphabet).
  const series_type& component(int i) const { return components_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const series_type> components() const { return components_; }

  bool constant_free() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const series_type& c) { return c.in_g0(); });
  }

  BasicField truncated(int degree) const {
    std::vector<series_type> cs;
    for (const auto& c : components_) cs.push_back(c.truncated(degree));
    return BasicField(std::move(cs));
  }

  friend bool operator==(const BasicField&, const BasicField&) = default;

 private:
  std::vector<series_type> components_;
};

using Field = BasicField<Rational>;
using FloatField = BasicField<double>;

/// Builds a canonical series; duplicate words are summed.
template <Scalar S>
BasicSeries<S> make_series(std::span<const std::pair<Word, S>> entries, int alphabet,
                           int max_degree) {
  BasicSeries<S> out(alphabet, max_degree);
  for (const auto& [w, c] : entries) {
    out.check_word(w);
    if (static_cast<int>(w.degree()) > max_degree)
      throw PreconditionError("word [" + w.to_string() + "] exceeds truncation degree " +
                              std::to_string(max_degree));
    out.accumulate(w, c);
  }
  return out;
}

template <Scalar S>
BasicSeries<S> make_series(std::initializer_list<std::pair<Word, S>> entries, int alphabet,
                           int max_degree) {
  return make_series<S>(std::span<const std::pair<Word, S>>(entries.begin(), entries.size()),
                        alphabet, max_degree);
}

template <Scalar S>
S coefficient(const BasicSeries<S>& f, const Word& w) {
  return f.coefficient(w);
}

template <Scalar S>
BasicSeries<S> add(const BasicSeries<S>& f, const BasicSeries<S>& g) {
  return f + g;
}

template <Scalar S>
BasicSeries<S> scale(const S& c, const BasicSeries<S>& f) {
  return c * f;
}

template <Scalar S>
BasicSeries<S> cauchy_product(const BasicSeries<S>& f, const BasicSeries<S>& g) {
  return f * g;
}

/// Float comparison: same shape and every coefficient within
/// rel_tol * max(1, |a|, |b|).
inline bool approx_equal(const FloatSeries& a, const FloatSeries& b, double rel_tol) {
  if (a.alphabet() != b.alphabet()) return false;
  const int degree = std::min(a.max_degree(), b.max_degree());
  auto close = [rel_tol](double x, double y) {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= rel_tol * scale;
  };
  for (const auto& [w, c] : a.terms())
    if (static_cast<int>(w.degree()) <= degree && !close(c, b.coefficient(w))) return false;
  for (const auto& [w, c] : b.terms())
    if (static_cast<int>(w.degree()) <= degree && !close(c, a.coefficient(w))) return false;
  return true;
}

/// Human-readable rendering, e.g. "1 + 1/2*x1x2" (for diagnostics only).
template <Scalar S>
std::string to_string(const BasicSeries<S>& f, char variable = 'x') {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    out += ScalarTraits<S>::to_string(c);
    if (!w.empty()) out += '*';
    for (auto l : w.letters()) {
      out += variable;
      out += std::to_string(l);
    }
  }
  return out;
}

}  // namespace planar
