#include <gtest/gtest.h>

#include "oracles.hpp"
#include "planar/effective_action.hpp"
#include "planar/random.hpp"

using namespace planar;

namespace {

Word ones(int k) {
  Word w;
  for (int i = 0; i < k; ++i) w.push_back(1);
  return w;
}

Cumulants<Rational> univariate(std::vector<Rational> k, int d) {
  Series s(1, d);
  for (std::size_t n = 0; n < k.size(); ++n) s.accumulate(ones(static_cast<int>(n)), k[n]);
  return Cumulants<Rational>(std::move(s));
}

}  // namespace

TEST(EffectiveAction, ConjugateFieldExamples) {
  const auto y = Series::letter(1, 4, 1);
  EXPECT_EQ(conjugate_field(univariate({0, 0, 1}, 4)).component(1), Series::letter(1, 3, 1));
  const Rational c(2, 3);
  const auto phi = conjugate_field(univariate({0, 0, 1, c}, 4)).component(1);
  EXPECT_EQ(phi, (y + c * (y * y)).truncated(3));
  EXPECT_TRUE(conjugate_field(Cumulants<Rational>(Series(1, 4))).component(1).is_zero());
  EXPECT_THROW(conjugate_field(univariate({0, 1, 1}, 4)), PreconditionError);
}

TEST(EffectiveAction, CovarianceAndRegularity) {
  const auto semi = univariate({0, 0, 1}, 4);
  EXPECT_EQ(covariance(semi)(0, 0), 1);
  EXPECT_TRUE(is_regular(semi));
  EXPECT_FALSE(is_regular(Cumulants<Rational>(Series(1, 4))));
  const auto id2 = Cumulants<Rational>(make_series<Rational>({{Word{1, 1}, 1}, {Word{2, 2}, 1}}, 2, 4));
  EXPECT_TRUE(is_regular(id2));
  const auto singular = Cumulants<Rational>(make_series<Rational>({{Word{1, 1}, 1}, {Word{1, 2}, 1},
                                                                   {Word{2, 1}, 1}, {Word{2, 2}, 1}}, 2, 4));
  EXPECT_FALSE(is_regular(singular));
  EXPECT_THROW(effective_action(singular), PreconditionError);
}

TEST(EffectiveAction, UnivariateHandValues) {
  EXPECT_EQ(l_coefficient(effective_action(univariate({0, 0, 1}, 4)), ones(2)), 1);
  const Rational c(2, 3), d(-5, 7);
  const auto l = effective_action(univariate({0, 0, 1, c, d}, 4));
  EXPECT_EQ(l_coefficient(l, ones(2)), 1);
  EXPECT_EQ(l_coefficient(l, ones(3)), -c);
  EXPECT_EQ(l_coefficient(l, ones(4)), 2 * c * c - d);
  EXPECT_EQ(l_coefficient(l, Word{}), 0);
}

TEST(EffectiveAction, SemicircleActionIsQuadratic) {
  const auto l = effective_action(univariate({0, 0, 1}, 6));
  EXPECT_EQ(l.series(), make_series<Rational>({{ones(2), 1}}, 1, 6));
}

TEST(EffectiveAction, AgreesWithLagrangeInversion) {
  Rng rng(41);
  RandomSeriesOptions dense;
  dense.density_percent = 100;
  for (int t = 0; t < 5; ++t) {
    const auto k = random_regular_cumulants(rng, 1, 7, dense);
    std::vector<Rational> kv;
    for (int n = 0; n <= 7; ++n) kv.push_back(k.series().coefficient(ones(n)));
    const auto ell = oracle::ell_by_lagrange(kv, 7);
    const auto l = effective_action(k);
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(l_coefficient(l, ones(n)), ell[static_cast<std::size_t>(n)]) << "n=" << n;
  }
}

TEST(EffectiveAction, QuadraticPartIsInverseCovariance) {
  Rng rng(42);
  const auto k = random_regular_cumulants(rng, 2, 4);
  const auto l = effective_action(k);
  const auto inv = *invert(covariance(k));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) EXPECT_EQ(l_coefficient(l, Word{i, j}), inv(i - 1, j - 1));
  for (int i = 1; i <= 2; ++i) EXPECT_EQ(l_coefficient(l, Word{i}), 0);
}

TEST(EffectiveAction, Verifiers) {
  const auto semi = univariate({0, 0, 1}, 5);
  const auto ls = effective_action(semi);
  EXPECT_TRUE(verify_legendre(semi, ls).passed());
  EXPECT_TRUE(verify_two_point(semi, ls).passed());
  EXPECT_TRUE(verify_three_point(semi, ls).passed());

  Rng rng(43);
  for (int t = 0; t < 3; ++t) {
    const auto k = random_regular_cumulants(rng, 2, 5);
    const auto l = effective_action(k);
    const auto a = verify_legendre(k, l), b = verify_two_point(k, l), c = verify_three_point(k, l);
    EXPECT_TRUE(a.passed());
    EXPECT_TRUE(b.passed());
    EXPECT_TRUE(c.passed());
    EXPECT_EQ(a.max_checked_degree, 4);  // first derivatives are known to D - 1
  }
}

TEST(EffectiveAction, VerifiersCatchAWrongAction) {
  Rng rng(44);
  const auto k = random_regular_cumulants(rng, 2, 5);
  const auto l = effective_action(k);
  auto bad = l.series();
  bad.accumulate(Word{1, 2, 1}, 1);
  const EffectiveAction<Rational> wrong(bad, l.covariance());
  EXPECT_FALSE(verify_legendre(k, wrong).passed());
  EXPECT_FALSE(verify_three_point(k, wrong).passed());
}

TEST(EffectiveAction, ThreePointAtZero) {
  // Both sides at y = 0 equal c when k2 = 1, k3 = c.
  const Rational c(3, 4);
  const auto k = univariate({0, 0, 1, c}, 4);
  const auto l = effective_action(k);
  EXPECT_EQ(l_coefficient(l, ones(3)), -c);
  EXPECT_EQ(Rational(-1 * l_coefficient(l, ones(3))), k.series().coefficient(ones(3)));
  EXPECT_TRUE(verify_three_point(k, l).passed());
}

TEST(EffectiveAction, UnivariateRelationsLowOrders) {
  const auto semi = univariate({0, 0, 1}, 6);
  for (int order = 2; order <= 6; ++order) EXPECT_TRUE(univariate_relation_check(semi, order).holds) << order;

  const auto half = univariate({0, 0, 1, Rational(1, 2)}, 6);
  const auto r3 = univariate_relation_check(half, 3);
  EXPECT_TRUE(r3.holds);
  EXPECT_EQ(r3.lhs, "1/2");

  const Rational c(1, 3), d(2, 5);
  const auto cd = univariate({0, 0, 1, c, d}, 6);
  EXPECT_TRUE(univariate_relation_check(cd, 4).holds);
}

TEST(EffectiveAction, PrintedRelationText) {
  const auto& rows = printed_univariate_relations();
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[2].to_string(), "k4/k2^4 = -l4 + 2 l3 k2 l3");
}

TEST(EffectiveAction, CumulantsEqualSumOfYTimesPhi) {
  Rng rng(45);
  const auto k = random_regular_cumulants(rng, 2, 5);
  const auto phi = conjugate_field(k);
  Series sum(2, 5);
  for (int i = 1; i <= 2; ++i) sum += prepend_letter(i, phi.component(i));
  EXPECT_EQ(sum, k.series());
}

TEST(EffectiveAction, FloatMode) {
  const auto k = Cumulants<double>(make_series<double>({{ones(2), 2.0}, {ones(3), 0.5}}, 1, 5));
  const auto l = effective_action(k);
  EXPECT_NEAR(l_coefficient(l, ones(2)), 0.5, 1e-15);
  // ℓ3 = -k3 / k2^3
  EXPECT_NEAR(l_coefficient(l, ones(3)), -0.5 / 8.0, 1e-15);
  EXPECT_TRUE(verify_legendre(k, l).passed());
}
