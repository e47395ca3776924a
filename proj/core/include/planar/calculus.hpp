#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "planar/errors.hpp"
#include "planar/linalg.hpp"
#include "planar/series.hpp"

namespace planar {

/// A functional counts as finite when its stored support stops strictly below
/// the truncation degree.
template <Scalar S>
bool is_finite_functional(const BasicSeries<S>& f) {
  return f.top_degree() < f.max_degree();
}

namespace detail {

// Horner evaluation over the prefix tree of f:
//   (sum_v f_{uv} x_v) o g = f_u + sum_i g_i * ((sum_v f_{uiv} x_v) o g).
// Each level down multiplies by some g_i of valuation >= 1 (when g is
// constant-free), so the inner truncation budget shrinks by one per level.
template <Scalar S>
class Composer {
 public:
  Composer(const BasicSeries<S>& f, const BasicField<S>& g, int degree)
      : g_(g), step_(g.constant_free() ? 1 : 0) {
    for (const auto& [w, c] : f.terms())
      if (static_cast<int>(w.degree()) <= degree) entries_.emplace_back(w, c);
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
      const auto la = a.first.letters();
      const auto lb = b.first.letters();
      return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
    });
  }

  BasicSeries<S> run(int degree) { return eval(0, entries_.size(), 0, degree); }

 private:
  BasicSeries<S> eval(std::size_t lo, std::size_t hi, std::size_t depth, int budget) {
    BasicSeries<S> out(g_.alphabet(), budget);
    std::size_t i = lo;
    if (i < hi && entries_[i].first.degree() == depth) {
      out.accumulate(Word{}, entries_[i].second);
      ++i;
    }
    while (i < hi) {
      const int letter = entries_[i].first[depth];
      std::size_t j = i;
      while (j < hi && entries_[j].first[depth] == letter) ++j;
      const int inner = budget - step_;
      if (inner >= 0) {
        const auto tail = eval(i, j, depth + 1, inner);
        out += BasicSeries<S>::multiply_truncated(g_.component(letter), tail, budget);
      }
      i = j;
    }
    return out;
  }

  const BasicField<S>& g_;
  int step_;
  std::vector<std::pair<Word, S>> entries_;
};

}  // namespace detail

/// Substitutes g_i for x_i in f. Requires g constant-free unless f is a finite
/// functional. Truncates to min(f.max_degree(), g.max_degree()).
template <Scalar S>
BasicSeries<S> compose(const BasicSeries<S>& f, const BasicField<S>& g) {
  if (f.alphabet() != g.alphabet())
    throw PreconditionError("compose: alphabet mismatch");
  if (!g.constant_free() && !is_finite_functional(f))
    throw PreconditionError(
        "compose: field has a constant term and the functional is not finite");
  const int degree = std::min(f.max_degree(), g.max_degree());
  return detail::Composer<S>(f, g, degree).run(degree);
}

/// Component-wise composition of fields.
template <Scalar S>
BasicField<S> compose(const BasicField<S>& f, const BasicField<S>& g) {
  std::vector<BasicSeries<S>> out;
  out.reserve(f.size());
  for (const auto& c : f.components()) out.push_back(compose(c, g));
  return BasicField<S>(std::move(out));
}

/// Planar (left) derivative d/dx_i: keeps the monomials starting with x_i and
/// strips that letter. The result is known up to degree max_degree - 1.
template <Scalar S>
BasicSeries<S> left_derivative(const BasicSeries<S>& f, int i) {
  f.check_word(Word{i});
  if (f.max_degree() == 0)
    throw PreconditionError("left_derivative: nothing is known about a degree-0 truncation");
  BasicSeries<S> out(f.alphabet(), f.max_degree() - 1);
  for (const auto& [w, c] : f.terms())
    if (!w.empty() && w.front() == i) out.accumulate(w.suffix(1), c);
  return out;
}

/// f(x)_{x_{i1},...,x_{ik}}: differentiates by i1 first, then i2, ...
/// Equivalently keeps the monomials with prefix w and strips it.
template <Scalar S>
BasicSeries<S> iterated_derivative(const BasicSeries<S>& f, const Word& w) {
  f.check_word(w);
  const int k = static_cast<int>(w.degree());
  if (k > f.max_degree())
    throw PreconditionError("iterated_derivative: order " + std::to_string(k) +
                            " exceeds truncation degree " + std::to_string(f.max_degree()));
  BasicSeries<S> out(f.alphabet(), f.max_degree() - k);
  for (const auto& [u, c] : f.terms())
    if (u.starts_with(w)) out.accumulate(u.suffix(w.degree()), c);
  return out;
}

/// (d_1 f, ..., d_n f).
template <Scalar S>
BasicField<S> differential_field(const BasicSeries<S>& f) {
  std::vector<BasicSeries<S>> out;
  for (int i = 1; i <= f.alphabet(); ++i) out.push_back(left_derivative(f, i));
  return BasicField<S>(std::move(out));
}

/// x_i * f, computed exactly: the result is known to degree max_degree + 1.
template <Scalar S>
BasicSeries<S> prepend_letter(int i, const BasicSeries<S>& f) {
  f.check_word(Word{i});
  BasicSeries<S> out(f.alphabet(), f.max_degree() + 1);
  for (const auto& [w, c] : f.terms()) out.accumulate(Word{i} + w, c);
  return out;
}

/// (x_1 f, ..., x_n f), truncated to f's degree.
template <Scalar S>
BasicField<S> integral_field(const BasicSeries<S>& f) {
  std::vector<BasicSeries<S>> out;
  for (int i = 1; i <= f.alphabet(); ++i)
    out.push_back(prepend_letter(i, f).truncated(f.max_degree()));
  return BasicField<S>(std::move(out));
}

/// Matrix of linear coefficients: entry (i, j) is the coefficient of x_j in g_i.
template <Scalar S>
SquareMatrix<S> linear_part(const BasicField<S>& g) {
  const int n = g.alphabet();
  SquareMatrix<S> m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = g.component(i).coefficient(Word{j});
  return m;
}

/// Compositional inverse Psi of a constant-free field with invertible linear
/// part: g o Psi = Psi o g = identity up to the truncation degree.
template <Scalar S>
BasicField<S> invert_field(const BasicField<S>& g, double max_condition = 1e12) {
  if (!g.constant_free()) throw PreconditionError("invert_field: field has a constant part");
  const int n = g.alphabet();
  const int degree = g.max_degree();
  const auto lambda_inv = invert(linear_part(g), max_condition);
  if (!lambda_inv) throw PreconditionError("invert_field: linear part is singular");

  using series_t = BasicSeries<S>;
  std::vector<series_t> higher;
  for (int i = 1; i <= n; ++i) {
    series_t h = g.component(i);
    for (int j = 1; j <= n; ++j)
      h.accumulate(Word{j}, S(-h.coefficient(Word{j})));
    higher.push_back(std::move(h));
  }

  // Psi <- Lambda^{-1} (x - H o Psi); every pass fixes one more degree.
  auto apply_inverse = [&](const std::vector<series_t>& rhs) {
    std::vector<series_t> out;
    for (int i = 0; i < n; ++i) {
      series_t s(n, degree);
      for (int j = 0; j < n; ++j) {
        const S& c = (*lambda_inv)(i, j);
        if (!is_zero(c)) s += c * rhs[static_cast<std::size_t>(j)];
      }
      out.push_back(std::move(s));
    }
    return BasicField<S>(std::move(out));
  };

  std::vector<series_t> rhs;
  for (int j = 1; j <= n; ++j) rhs.push_back(series_t::letter(n, degree, j));
  BasicField<S> psi = apply_inverse(rhs);
  for (int pass = 0; pass < degree; ++pass) {
    std::vector<series_t> next;
    for (int j = 1; j <= n; ++j)
      next.push_back(series_t::letter(n, degree, j) -
                     compose(higher[static_cast<std::size_t>(j - 1)], psi));
    psi = apply_inverse(next);
  }
  return psi;
}

}  // namespace planar
