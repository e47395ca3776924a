#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "planar/scalar.hpp"

namespace planar {

/// Small dense square matrix, row-major; indices are 0-based.
template <Scalar S>
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), S(0)) {}

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int size() const { return n_; }
  S& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * n_ + c)]; }
  const S& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * n_ + c)]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k)
        for (int j = 0; j < a.n_; ++j) out(i, j) += S(a(i, k) * b(k, j));
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int n_;
  std::vector<S> data_;
};

/// Max-column-sum norm.
template <Scalar S>
double norm1(const SquareMatrix<S>& m) {
  double best = 0.0;
  for (int c = 0; c < m.size(); ++c) {
    double sum = 0.0;
    for (int r = 0; r < m.size(); ++r) sum += ScalarTraits<S>::magnitude(m(r, c));
    best = std::max(best, sum);
  }
  return best;
}

/// Gauss-Jordan inversion. Exact scalars: nullopt iff singular. Floats: nullopt
/// when a pivot vanishes or the 1-norm condition number exceeds max_condition.
template <Scalar S>
std::optional<SquareMatrix<S>> invert(const SquareMatrix<S>& m, double max_condition = 1e12) {
  const int n = m.size();
  SquareMatrix<S> a = m;
  SquareMatrix<S> inv = SquareMatrix<S>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = -1.0;
    for (int r = col; r < n; ++r) {
      if (ScalarTraits<S>::is_zero(a(r, col))) continue;
      if constexpr (ScalarTraits<S>::exact) {
        pivot = r;
        break;
      } else {
        const double mag = ScalarTraits<S>::magnitude(a(r, col));
        if (mag > best) {
          best = mag;
          pivot = r;
        }
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const S p = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) = S(a(col, c) / p);
      inv(col, c) = S(inv(col, c) / p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || ScalarTraits<S>::is_zero(a(r, col))) continue;
      const S factor = a(r, col);
      for (int c = 0; c < n; ++c) {
        a(r, c) = S(a(r, c) - factor * a(col, c));
        inv(r, c) = S(inv(r, c) - factor * inv(col, c));
      }
    }
  }
  if constexpr (!ScalarTraits<S>::exact) {
    const double cond = norm1(m) * norm1(inv);
    if (!std::isfinite(cond) || cond > max_condition) return std::nullopt;
  }
  return inv;
}

}  // namespace planar
