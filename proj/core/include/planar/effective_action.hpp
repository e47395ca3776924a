#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planar/calculus.hpp"
#include "planar/linalg.hpp"
#include "planar/moments.hpp"
#include "planar/report.hpp"
#include "planar/series.hpp"

namespace planar {

/// Φ(y): component i is the left derivative of K(y) by y_i.
template <Scalar S>
BasicField<S> conjugate_field(const Cumulants<S>& k) {
  if (!k.centered()) throw PreconditionError("conjugate_field: cumulant series is not centered");
  return differential_field(k.series());
}

/// Degree-2 cumulant matrix, entry (i, j) = k_{ij} (0-based).
template <Scalar S>
SquareMatrix<S> covariance(const Cumulants<S>& k) {
  const int n = k.alphabet();
  SquareMatrix<S> m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = k.series().coefficient(Word{i, j});
  return m;
}

template <Scalar S>
bool is_regular(const Cumulants<S>& k, double max_condition = 1e12) {
  return k.centered() && k.max_degree() >= 2 && invert(covariance(k), max_condition).has_value();
}

template <Scalar S>
class EffectiveAction {
 public:
  EffectiveAction(BasicSeries<S> l, SquareMatrix<S> covariance)
      : series_(std::move(l)), covariance_(std::move(covariance)) {
    if (!series_.in_g0()) throw PreconditionError("effective action must have zero constant term");
  }

  /// L as a series in the φ-letters.
  const BasicSeries<S>& series() const { return series_; }
  const SquareMatrix<S>& covariance() const { return covariance_; }
  int alphabet() const { return series_.alphabet(); }
  int max_degree() const { return series_.max_degree(); }

 private:
  BasicSeries<S> series_;
  SquareMatrix<S> covariance_;
};

/// L(Φ) = Σ φ_i y_i(Φ), with y(Φ) the compositional inverse of Φ(y).
template <Scalar S>
EffectiveAction<S> effective_action(const Cumulants<S>& k, double max_condition = 1e12) {
  if (!is_regular(k, max_condition))
    throw PreconditionError("effective_action: cumulant series is not regular");
  const auto y_of_phi = invert_field(conjugate_field(k), max_condition);
  BasicSeries<S> l(k.alphabet(), k.max_degree());
  for (int i = 1; i <= k.alphabet(); ++i) l += prepend_letter(i, y_of_phi.component(i));
  return EffectiveAction<S>(std::move(l), covariance(k));
}

template <Scalar S>
S l_coefficient(const EffectiveAction<S>& l, const Word& w) {
  return l.series().coefficient(w);
}

namespace detail {

inline std::string where(std::initializer_list<std::pair<const char*, int>> idx) {
  std::string out;
  for (const auto& [name, value] : idx) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

// A derivative of L, rewritten in the y-letters through Φ.
template <Scalar S>
BasicSeries<S> l_derivative_in_y(const EffectiveAction<S>& l, const Word& w,
                                 const BasicField<S>& phi) {
  return compose(iterated_derivative(l.series(), w), phi);
}

}  // namespace detail

/// ∂L∘Φ(y) = y and ∂K∘∂L(φ) = φ, coefficient by coefficient.
template <Scalar S>
IdentityReport verify_legendre(const Cumulants<S>& k, const EffectiveAction<S>& l) {
  IdentityReport report{"legendre", -1, {}};
  const int n = k.alphabet();
  const auto phi = conjugate_field(k);
  const auto dl = differential_field(l.series());
  for (int i = 1; i <= n; ++i) {
    const auto lhs = compose(dl.component(i), phi);
    compare_into(report, detail::where({{"dL o dK, i", i}}), lhs,
                 BasicSeries<S>::letter(n, lhs.max_degree(), i));
  }
  for (int i = 1; i <= n; ++i) {
    const auto lhs = compose(phi.component(i), dl);
    compare_into(report, detail::where({{"dK o dL, i", i}}), lhs,
                 BasicSeries<S>::letter(n, lhs.max_degree(), i));
  }
  return report;
}

/// Σ_l (L_{lj}∘Φ)·K_{il} = δ_{ji} and Σ_l K_{lj}·(L_{il}∘Φ) = δ_{ji}, where a
/// subscript word lists the differentiation order.
template <Scalar S>
IdentityReport verify_two_point(const Cumulants<S>& k, const EffectiveAction<S>& l) {
  IdentityReport report{"two-point", -1, {}};
  const int n = k.alphabet();
  if (k.max_degree() < 2) throw PreconditionError("verify_two_point: degree must be at least 2");
  const auto phi = conjugate_field(k);
  auto kd = [&](int a, int b) { return iterated_derivative(k.series(), Word{a, b}); };
  auto ld = [&](int a, int b) { return detail::l_derivative_in_y(l, Word{a, b}, phi); };
  const int degree = k.max_degree() - 2;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      BasicSeries<S> first(n, degree), second(n, degree);
      for (int m = 1; m <= n; ++m) {
        first += ld(m, j) * kd(i, m);
        second += kd(m, j) * ld(i, m);
      }
      const auto delta = BasicSeries<S>::constant(n, degree, i == j ? S(1) : S(0));
      compare_into(report, detail::where({{"first form, i", i}, {"j", j}}), first, delta);
      compare_into(report, detail::where({{"second form, i", i}, {"j", j}}), second, delta);
    }
  }
  return report;
}

/// ∂_{φ_k} K_{pj} = -Σ_{l,i} k_{lj} (L_{ilk}∘Φ) K_{pi}. The left side is
/// computed twice: by the chain rule Σ_m (L_{mk}∘Φ) K_{pjm}, and directly by
/// differentiating K_{pj}(y(φ)) in the φ-letters.
template <Scalar S>
IdentityReport verify_three_point(const Cumulants<S>& k, const EffectiveAction<S>& l) {
  IdentityReport report{"three-point", -1, {}};
  const int n = k.alphabet();
  if (k.max_degree() < 3) throw PreconditionError("verify_three_point: degree must be at least 3");
  const auto phi = conjugate_field(k);
  const auto y_of_phi = differential_field(l.series());
  const auto cov = covariance(k);
  const int degree = k.max_degree() - 3;

  for (int p = 1; p <= n; ++p) {
    for (int j = 1; j <= n; ++j) {
      const auto kpj = iterated_derivative(k.series(), Word{p, j});
      const auto kpj_in_phi = compose(kpj, y_of_phi);
      for (int kk = 1; kk <= n; ++kk) {
        BasicSeries<S> chain(n, degree);
        for (int m = 1; m <= n; ++m)
          chain += detail::l_derivative_in_y(l, Word{m, kk}, phi) *
                   iterated_derivative(k.series(), Word{p, j, m});
        const auto direct = compose(left_derivative(kpj_in_phi, kk), phi);

        BasicSeries<S> rhs(n, degree);
        for (int ll = 1; ll <= n; ++ll) {
          const S& c = cov(ll - 1, j - 1);
          if (is_zero(c)) continue;
          for (int i = 1; i <= n; ++i)
            rhs -= c * (detail::l_derivative_in_y(l, Word{i, ll, kk}, phi) *
                        iterated_derivative(k.series(), Word{p, i}));
        }
        const auto tag = detail::where({{"p", p}, {"j", j}, {"k", kk}});
        compare_into(report, "chain rule vs direct, " + tag, chain, direct);
        compare_into(report, tag, chain, rhs);
      }
    }
  }
  return report;
}

/// One printed univariate relation
///   k_n (k_2)^{-n} = Σ coefficient · ℓ^{(a_1)} k_2 ℓ^{(a_2)} k_2 ... ℓ^{(a_r)}.
struct UnivariateRelation {
  struct Term {
    int coefficient;
    std::vector<int> orders;  // the ℓ factors, left to right
  };
  int order;
  std::vector<Term> terms;

  std::string to_string() const;
};

/// The relations for orders 2..6 in the form they are commonly quoted.
const std::vector<UnivariateRelation>& printed_univariate_relations();

struct UnivariateRelationReport {
  std::string relation;
  int order = 0;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

/// Evaluates both sides of `relation` on a univariate regular K, with the
/// ℓ's taken from its effective action.
template <Scalar S>
UnivariateRelationReport evaluate_univariate_relation(const UnivariateRelation& relation,
                                                      const Cumulants<S>& k,
                                                      const EffectiveAction<S>& l) {
  if (k.alphabet() != 1) throw PreconditionError("univariate relation: alphabet must be 1");
  const int n = relation.order;
  if (n < 2 || k.max_degree() < n)
    throw PreconditionError("univariate relation: order " + std::to_string(n) +
                            " needs cumulants up to that degree");
  auto word = [](int len) {
    Word w;
    for (int t = 0; t < len; ++t) w.push_back(1);
    return w;
  };
  auto power = [](S base, int e) {
    S out(1);
    for (int t = 0; t < e; ++t) out = S(out * base);
    for (int t = 0; t > e; --t) out = S(out / base);
    return out;
  };
  const S k2 = k.series().coefficient(word(2));
  const S lhs = S(k.series().coefficient(word(n)) / power(k2, n));
  S rhs(0);
  for (const auto& term : relation.terms) {
    S product(term.coefficient);
    for (int a : term.orders) product = S(product * l_coefficient(l, word(a)));
    product = S(product * power(k2, static_cast<int>(term.orders.size()) - 1));
    rhs = S(rhs + product);
  }
  return {relation.to_string(), n, ScalarTraits<S>::to_string(lhs),
          ScalarTraits<S>::to_string(rhs), scalars_match(lhs, rhs)};
}

/// Checks the printed relation of the given order (2..6) on K.
template <Scalar S>
UnivariateRelationReport univariate_relation_check(const Cumulants<S>& k, int order) {
  const auto& table = printed_univariate_relations();
  if (order < 2 || order > 6)
    throw PreconditionError("univariate_relation_check: order must be in 2..6");
  return evaluate_univariate_relation(table[static_cast<std::size_t>(order - 2)], k,
                                      effective_action(k));
}

}  // namespace planar
