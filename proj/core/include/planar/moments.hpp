#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planar/calculus.hpp"
#include "planar/products.hpp"
#include "planar/report.hpp"
#include "planar/series.hpp"

namespace planar {

/// Generating series of multivariate moments; constant term exactly 1.
template <Scalar S>
class Moments {
 public:
  explicit Moments(BasicSeries<S> m) : series_(std::move(m)) {
    if (!series_.in_g1()) throw PreconditionError("moment series must have constant term 1");
  }
  const BasicSeries<S>& series() const { return series_; }
  int alphabet() const { return series_.alphabet(); }
  int max_degree() const { return series_.max_degree(); }

 private:
  BasicSeries<S> series_;
};

/// Generating series of free cumulants; constant term exactly 0.
template <Scalar S>
class Cumulants {
 public:
  explicit Cumulants(BasicSeries<S> k) : series_(std::move(k)) {
    if (!series_.in_g0()) throw PreconditionError("cumulant series must have zero constant term");
  }
  const BasicSeries<S>& series() const { return series_; }
  int alphabet() const { return series_.alphabet(); }
  int max_degree() const { return series_.max_degree(); }

  /// No degree-1 coefficients.
  bool centered() const { return series_.valuation() >= 2; }

 private:
  BasicSeries<S> series_;
};

/// Solves M = 1 + K ≺ M for K. If K is right below degree d, the residual
/// M - 1 - K ≺ M vanishes below d and equals the missing degree-d cumulants,
/// so each correction pass fixes one more degree.
template <Scalar S>
Cumulants<S> cumulants_from_moments(const Moments<S>& moments) {
  const auto& m = moments.series();
  const auto one = BasicSeries<S>::one(m.alphabet(), m.max_degree());
  const auto target = m - one;
  BasicSeries<S> k = target;
  for (int pass = 0; pass < m.max_degree(); ++pass) {
    const auto residual = target - prec(k, m);
    if (residual.is_zero()) break;
    k += residual;
  }
  return Cumulants<S>(std::move(k));
}

/// Fixed point M <- 1 + K ≺ M starting from M = 1.
template <Scalar S>
Moments<S> moments_from_cumulants(const Cumulants<S>& cumulants) {
  const auto& k = cumulants.series();
  const auto one = BasicSeries<S>::one(k.alphabet(), k.max_degree());
  BasicSeries<S> m = one;
  for (int pass = 0; pass < k.max_degree(); ++pass) {
    auto next = one + prec(k, m);
    if (next == m) break;
    m = std::move(next);
  }
  return Moments<S>(std::move(m));
}

/// y_i = x_i M(x).
template <Scalar S>
BasicField<S> y_field(const Moments<S>& moments) {
  return integral_field(moments.series());
}

/// f^M: the unique series in the y-letters with f^M(y(x)) = f(x).
template <Scalar S>
BasicSeries<S> rewrite_in_y(const BasicSeries<S>& f, const Moments<S>& moments) {
  const auto x_of_y = invert_field(y_field(moments));
  return compose(f, x_of_y);
}

/// Checks the classical low-degree moment/cumulant relations (orders 0..4)
/// directly from their closed forms, for every index tuple.
template <Scalar S>
IdentityReport lowdegree_oracle_check(const Moments<S>& moments, const Cumulants<S>& cumulants) {
  const auto& M = moments.series();
  const auto& K = cumulants.series();
  IdentityReport report{"low-degree moment-cumulant relations", -1, {}};
  const int n = M.alphabet();
  const int top = std::min({4, M.max_degree(), K.max_degree()});
  report.max_checked_degree = top;

  auto m = [&](std::initializer_list<int> w) { return M.coefficient(Word(w)); };
  auto k = [&](std::initializer_list<int> w) { return K.coefficient(Word(w)); };
  auto record = [&](const char* form, const Word& w, const S& lhs, const S& rhs) {
    if (!scalars_match(lhs, rhs))
      report.violations.push_back(
          {form, w, ScalarTraits<S>::to_string(lhs), ScalarTraits<S>::to_string(rhs)});
  };

  record("m0 = 1", Word{}, M.constant_term(), S(1));
  for (int d = 1; d <= top; ++d) {
    for (const auto& w : words_of_degree(n, d)) {
      const S lhs = M.coefficient(w);
      if (d == 1) {
        const int a = w[0];
        record("m1 = k1", w, lhs, k({a}));
      } else if (d == 2) {
        const int a = w[0], b = w[1];
        record("m2 mixed form", w, lhs, S(k({a}) * m({b}) + k({a, b}) * M.constant_term()));
        record("m2 cumulant form", w, lhs, S(k({a}) * k({b}) + k({a, b})));
      } else if (d == 3) {
        const int a = w[0], b = w[1], c = w[2];
        record("m3 mixed form", w, lhs,
               S(k({a}) * m({b, c}) + k({a, b}) * m({c}) + k({a, c}) * m({b}) +
                 k({a, b, c}) * M.constant_term()));
        record("m3 cumulant form", w, lhs,
               S(k({a}) * k({b}) * k({c}) + k({a}) * k({b, c}) + k({a, b}) * k({c}) +
                 k({a, c}) * k({b}) + k({a, b, c})));
      } else {
        const int a = w[0], b = w[1], c = w[2], e = w[3];
        record("m4 mixed form", w, lhs,
               S(k({a}) * m({b, c, e}) + k({a, b}) * m({c, e}) + k({a, c}) * m({b}) * m({e}) +
                 k({a, e}) * m({b, c}) + k({a, b, c}) * m({e}) + k({a, b, e}) * m({c}) +
                 k({a, c, e}) * m({b}) + k({a, b, c, e}) * M.constant_term()));
      }
    }
  }
  return report;
}

}  // namespace planar
