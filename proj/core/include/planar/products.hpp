#pragma once

#include <algorithm>

#include "planar/calculus.hpp"
#include "planar/series.hpp"

namespace planar {

namespace detail {

template <Scalar S>
void require_group_like(const BasicSeries<S>& g, const char* op) {
  if (!g.in_g1())
    throw PreconditionError(std::string(op) + ": right operand must have constant term 1");
}

template <Scalar S>
void require_augmented(const BasicSeries<S>& f, const char* op) {
  if (!f.in_g0())
    throw PreconditionError(std::string(op) + ": operand must have zero constant term");
}

}  // namespace detail

/// f(x g(x)): substitution of x_i g for x_i. This is f ≺ g.
template <Scalar S>
BasicSeries<S> prec(const BasicSeries<S>& f, const BasicSeries<S>& g) {
  f.check_alphabet(g);
  detail::require_group_like(g, "prec");
  return compose(f, integral_field(g));
}

/// Shifted composition (f • g)(x) = g(x) f(x g(x)).
template <Scalar S>
BasicSeries<S> bullet(const BasicSeries<S>& f, const BasicSeries<S>& g) {
  f.check_alphabet(g);
  detail::require_group_like(g, "bullet");
  return g * compose(f, integral_field(g));
}

/// (f ≻ g)(x) = (g(x) - 1) f(x g(x)).
template <Scalar S>
BasicSeries<S> succ(const BasicSeries<S>& f, const BasicSeries<S>& g) {
  f.check_alphabet(g);
  detail::require_group_like(g, "succ");
  const auto shifted = g - BasicSeries<S>::one(g.alphabet(), g.max_degree());
  return shifted * compose(f, integral_field(g));
}

/// Inverse in the group (G^1, •).
///
/// If f • h = 1 + e with e of valuation v, then f • (h - e) = 1 + O(v + 1):
/// perturbing h in degree v only moves f • h in degree v (by the same amount,
/// since f_0 = 1) and above. So max_degree passes suffice.
template <Scalar S>
BasicSeries<S> bullet_inverse(const BasicSeries<S>& f) {
  detail::require_group_like(f, "bullet_inverse");
  const auto one = BasicSeries<S>::one(f.alphabet(), f.max_degree());
  BasicSeries<S> h = one;
  for (int pass = 0; pass < f.max_degree(); ++pass) {
    const auto error = bullet(f, h) - one;
    if (error.is_zero()) break;
    h -= error;
  }
  return h;
}

/// Right pre-Lie product, the bilinear extension of
///   x_{i1..in} ◁ x_{j1..jm} = sum_{k=0}^{n} x_{i1..ik} x_{j1..jm} x_{i(k+1)..in}.
template <Scalar S>
BasicSeries<S> prelie(const BasicSeries<S>& a, const BasicSeries<S>& b) {
  a.check_alphabet(b);
  detail::require_augmented(a, "prelie");
  detail::require_augmented(b, "prelie");
  BasicSeries<S> out(a.alphabet(), std::min(a.max_degree(), b.max_degree()));
  for (const auto& [u, cu] : a.terms()) {
    const int room = out.max_degree() - static_cast<int>(u.degree());
    if (room < 0) break;
    for (const auto& [v, cv] : b.terms()) {
      if (static_cast<int>(v.degree()) > room) break;
      const S c = cu * cv;
      for (std::size_t k = 0; k <= u.degree(); ++k)
        out.accumulate(u.prefix(k) + v + u.suffix(k), c);
    }
  }
  return out;
}

/// [a, b] = a ◁ b - b ◁ a.
template <Scalar S>
BasicSeries<S> prelie_bracket(const BasicSeries<S>& a, const BasicSeries<S>& b) {
  return prelie(a, b) - prelie(b, a);
}

}  // namespace planar
