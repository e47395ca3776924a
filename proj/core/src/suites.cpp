#include "planar/suites.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "planar/effective_action.hpp"
#include "planar/moments.hpp"
#include "planar/products.hpp"
#include "planar/random.hpp"
#include "planar/trees.hpp"

namespace planar {

namespace {

class Collector {
 public:
  IdentityReport& get(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, reports_.size()).first;
      reports_.push_back({name, -1, {}});
    }
    return reports_[it->second];
  }

  void check(const std::string& name, const std::string& where, const Series& lhs, const Series& rhs) {
    compare_into(get(name), where, lhs, rhs);
  }

  std::vector<IdentityReport> take() { return {reports_.begin(), reports_.end()}; }

 private:
  std::deque<IdentityReport> reports_;  // stable references
  std::map<std::string, std::size_t> index_;
};

std::string tag(int instance) { return "instance " + std::to_string(instance); }
std::string tag(int instance, int letter) { return tag(instance) + " i=" + std::to_string(letter); }

Series word_power(int alphabet, int degree, int length, const Rational& c = 1) {
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(1);
  Series out(alphabet, degree);
  out.accumulate(w, c);
  return out;
}

void products_suite(const SuiteOptions& o, Collector& c) {
  const int n = o.alphabet, d = o.degree;
  const auto one = Series::one(n, d);
  for (int t = 0; t < o.instances; ++t) {
    Rng rng(stream_seed(o.seed, 1, static_cast<std::uint64_t>(t)));
    const auto f = random_g1(rng, n, d), g = random_g1(rng, n, d), h = random_g1(rng, n, d);
    const auto a = random_g0(rng, n, d), b = random_g0(rng, n, d), e = random_g0(rng, n, d);
    auto p = random_series(rng, n, d, 0), q = random_series(rng, n, d, 0);
    const auto w = tag(t);

    c.check("bullet associativity", w, bullet(bullet(f, g), h), bullet(f, bullet(g, h)));
    const auto inv = bullet_inverse(f);
    c.check("bullet inverse (right)", w, bullet(f, inv), one);
    c.check("bullet inverse (left)", w, bullet(inv, f), one);
    c.check("bullet unit", w, bullet(f, one), f);
    c.check("bullet unit", w, bullet(one, f), f);
    c.check("bullet = prec + succ", w, bullet(a, g), prec(a, g) + succ(a, g));
    c.check("right module law", w, prec(prec(a, g), h), prec(a, bullet(g, h)));
    c.check("distributivity (bullet)", w, bullet(p * q, h), bullet(p, h) * prec(q, h));
    c.check("distributivity (prec)", w, prec(p * q, h), prec(p, h) * prec(q, h));
    c.check("distributivity (succ)", w, succ(p * q, h), succ(p, h) * prec(q, h));
    c.check("pre-Lie identity", w, prelie(a, prelie(b, e)) - prelie(prelie(a, b), e),
            prelie(a, prelie(e, b)) - prelie(prelie(a, e), b));
    c.check("Jacobi identity", w,
            prelie_bracket(a, prelie_bracket(b, e)) + prelie_bracket(b, prelie_bracket(e, a)) +
                prelie_bracket(e, prelie_bracket(a, b)),
            Series::zero(n, d));

    // Planar calculus rules.
    const auto gfield = [&] {
      std::vector<Series> comps;
      for (int i = 1; i <= n; ++i) comps.push_back(random_g0(rng, n, d));
      return Field(std::move(comps));
    }();
    for (int i = 1; i <= n; ++i) {
      const auto wi = tag(t, i);
      c.check("Leibniz rule", wi, left_derivative(p * q, i),
              left_derivative(p, i) * q + p.constant_term() * left_derivative(q, i));
      c.check("chain rule (bullet)", wi, left_derivative(bullet(p, g), i),
              left_derivative(g, i) * prec(p, g) + bullet(left_derivative(p, i), g));
      c.check("chain rule (prec)", wi, left_derivative(prec(p, g), i), bullet(left_derivative(p, i), g));
      c.check("chain rule (succ)", wi, left_derivative(succ(p, g), i), left_derivative(g, i) * prec(p, g));
      Series rhs(n, d - 1);
      for (int m = 1; m <= n; ++m)
        rhs += left_derivative(gfield.component(m), i) * compose(left_derivative(p, m), gfield);
      c.check("chain rule (composition)", wi, left_derivative(compose(p, gfield), i), rhs);
    }
    const auto k = Cumulants<Rational>(a);
    const auto m = moments_from_cumulants(k).series();
    for (int i = 1; i <= n; ++i)
      c.check("moment derivative dM = (dK) bullet M", tag(t, i), left_derivative(m, i),
              bullet(left_derivative(a, i), m));
  }
  // Deterministic: the univariate bracket on monomials.
  for (int i = 1; i < d; ++i)
    for (int j = 1; i + j <= d; ++j)
      c.check("univariate bracket [x^n, x^m] = (n-m) x^(n+m)",
              "n=" + std::to_string(i) + " m=" + std::to_string(j),
              prelie_bracket(word_power(1, d, i), word_power(1, d, j)),
              word_power(1, d, i + j, Rational(i - j)));
}

void moments_suite(const SuiteOptions& o, Collector& c) {
  const int n = o.alphabet, d = o.degree;
  for (int t = 0; t < o.instances; ++t) {
    Rng rng(stream_seed(o.seed, 2, static_cast<std::uint64_t>(t)));
    const auto w = tag(t);
    const Moments<Rational> m(random_g1(rng, n, d));
    const auto k = cumulants_from_moments(m);
    const auto one = Series::one(n, d);
    c.check("moments -> cumulants -> moments", w, moments_from_cumulants(k).series(), m.series());
    c.check("functional equation M = 1 + K prec M", w, m.series(), one + prec(k.series(), m.series()));
    const Cumulants<Rational> k2(random_g0(rng, n, d));
    c.check("cumulants -> moments -> cumulants", w, cumulants_from_moments(moments_from_cumulants(k2)).series(),
            k2.series());
    c.check("K(y) = M(x) - 1 rewritten in y", w, rewrite_in_y(m.series() - one, m), k.series());
    c.get("low-degree moment-cumulant relations").merge(lowdegree_oracle_check(m, k));
  }
}

void legendre_suite(const SuiteOptions& o, Collector& c) {
  const int n = o.alphabet, d = o.degree;
  for (int t = 0; t < o.instances; ++t) {
    Rng rng(stream_seed(o.seed, 3, static_cast<std::uint64_t>(t)));
    const auto w = tag(t);
    const auto k = random_regular_cumulants(rng, n, d);
    const auto l = effective_action(k);
    auto r = verify_legendre(k, l);
    for (auto& v : r.violations) v.where = w + " " + v.where;
    c.get("legendre").merge(r);

    const auto phi = conjugate_field(k);
    Series sum_y_phi(n, d), sum_phi_y(n, d);
    for (int i = 1; i <= n; ++i) {
      sum_y_phi += prepend_letter(i, phi.component(i));
      sum_phi_y += phi.component(i) * Series::letter(n, d, i);
    }
    c.check("K(y) = y_i phi_i", w, k.series(), sum_y_phi);
    c.check("L(Phi) + K(y) = phi_i y_i + y_i phi_i", w, compose(l.series(), phi) + k.series(),
            sum_phi_y + sum_y_phi);

    const auto cov_inv = *invert(covariance(k));
    Series quad(n, 2), expected(n, 2);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        quad.accumulate(Word{i, j}, l_coefficient(l, Word{i, j}));
        expected.accumulate(Word{i, j}, cov_inv(i - 1, j - 1));
      }
    for (int i = 1; i <= n; ++i) quad.accumulate(Word{i}, l_coefficient(l, Word{i}));
    quad.accumulate(Word{}, l_coefficient(l, Word{}));
    c.check("quadratic part of L is the inverse covariance", w, quad, expected);

    // M(x) = 1 + x_i M(x) phi_i(x) with phi expressed in x.
    const auto m = moments_from_cumulants(k);
    const auto yf = y_field(m);
    Series rhs = Series::one(n, d);
    for (int i = 1; i <= n; ++i) rhs += prepend_letter(i, m.series() * compose(phi.component(i), yf));
    c.check("M(x) = 1 + x_i M(x) phi_i", w, m.series(), rhs);
  }
}

template <class Verify>
void cumulant_pair_suite(const SuiteOptions& o, Collector& c, std::uint64_t id, const char* name, Verify verify) {
  for (int t = 0; t < o.instances; ++t) {
    Rng rng(stream_seed(o.seed, id, static_cast<std::uint64_t>(t)));
    const auto k = random_regular_cumulants(rng, o.alphabet, o.degree);
    auto r = verify(k, effective_action(k));
    for (auto& v : r.violations) v.where = tag(t) + " " + v.where;
    c.get(name).merge(r);
  }
}

void theorem_suite(const SuiteOptions& o, Collector& c) {
  for (int t = 0; t < o.instances; ++t) {
    Rng rng(stream_seed(o.seed, 6, static_cast<std::uint64_t>(t)));
    const auto k = random_regular_cumulants(rng, o.alphabet, o.max_length + o.degree);
    auto r = verify_theorem(k, effective_action(k), o.max_length, o.degree);
    for (auto& v : r.violations) v.where = tag(t) + " " + v.where;
    c.get("tree expansion equals the iterated derivative").merge(r);
  }
}

Word ones(int length) {
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(1);
  return w;
}

void univariate_suite(const SuiteOptions& o, Collector& c, std::vector<std::string>& notes) {
  constexpr int kTop = 6;
  RandomSeriesOptions dense;
  dense.density_percent = 100;
  dense.nonzero = true;  // generic points for polynomial identity testing
  std::vector<std::pair<Cumulants<Rational>, EffectiveAction<Rational>>> samples;
  for (int t = 0; t < o.instances; ++t) {
    Rng rng(stream_seed(o.seed, 7, static_cast<std::uint64_t>(t)));
    auto k = random_regular_cumulants(rng, 1, kTop, dense);
    auto l = effective_action(k);
    samples.emplace_back(std::move(k), std::move(l));
  }
  const auto& printed = printed_univariate_relations();
  const auto table = univariate_tree_table(kTop);
  for (int order = 2; order <= kTop; ++order) {
    const auto& rel = printed[static_cast<std::size_t>(order - 2)];
    const auto& row = table[static_cast<std::size_t>(order - 2)];
    const auto tree_rel = row.relation();
    auto& pr = c.get("order " + std::to_string(order) + ": printed relation");
    auto& tr = c.get("order " + std::to_string(order) + ": relation from the tree expansion");
    pr.max_checked_degree = tr.max_checked_degree = order;
    for (std::size_t t = 0; t < samples.size(); ++t) {
      const auto& [k, l] = samples[t];
      const auto a = evaluate_univariate_relation(rel, k, l);
      if (!a.holds)
        pr.violations.push_back({tag(static_cast<int>(t)) + ": " + a.relation, ones(order), a.lhs, a.rhs});
      const auto b = evaluate_univariate_relation(tree_rel, k, l);
      if (!b.holds)
        tr.violations.push_back({tag(static_cast<int>(t)) + ": " + b.relation, ones(order), b.lhs, b.rhs});
    }

    // Tree multiplicities against the printed coefficients, pattern by pattern.
    auto& cmp = c.get("order " + std::to_string(order) + ": tree table vs printed coefficients");
    cmp.max_checked_degree = order;
    std::map<std::vector<int>, std::pair<int, int>> both;  // pattern -> (tree, printed)
    for (const auto& p : row.patterns) both[p.arities].first = p.multiplicity;
    for (const auto& term : rel.terms) {
      auto key = term.orders;
      std::sort(key.begin(), key.end(), std::greater<>());
      both[key].second += term.coefficient;
    }
    // Order 2: the tree gives k2^-1 with no vertex, printed as l2 (= 1/k2).
    if (order == 2) {
      both[{}].second += both[{2}].second;
      both.erase({2});
    }
    for (const auto& [key, counts] : both) {
      if (counts.first == counts.second) continue;
      std::string name = "pattern";
      if (key.empty()) name += " 1/k2";
      for (std::size_t i = 0; i < key.size(); ++i) name += (i ? " k2 l" : " l") + std::to_string(key[i]);
      cmp.violations.push_back({name + " (tree multiplicity vs printed coefficient)", ones(order),
                                std::to_string(counts.first), std::to_string(counts.second)});
    }
    if (order >= 3) notes.push_back("tree expansion at order " + std::to_string(order) + ": " + tree_rel.to_string());
  }
}

SuiteOptions with_defaults(std::string_view name, SuiteOptions o) {
  auto fill = [](int& v, int def) {
    if (v == 0) v = def;
  };
  if (name == "theorem") {
    fill(o.alphabet, 2);
    fill(o.degree, 4);
    fill(o.instances, 2);
    fill(o.max_length, 4);
  } else if (name == "univariate") {
    fill(o.alphabet, 1);
    fill(o.degree, 6);
    fill(o.instances, 5);
  } else {
    fill(o.alphabet, 2);
    fill(o.degree, 5);
    fill(o.instances, 10);
  }
  if (o.alphabet < 1 || o.degree < 1 || o.instances < 1 || o.max_length < 0)
    throw PreconditionError("verify: alphabet, degree and instances must be positive");
  if (o.alphabet > 4) throw PreconditionError("verify: alphabet above 4 is not supported by the suites");
  if (name == "theorem" && o.max_length < 2) throw PreconditionError("verify: max length must be at least 2");
  if (name == "univariate" && (o.alphabet != 1 || o.degree != 6))
    throw PreconditionError("verify: the univariate suite runs on one letter up to degree 6");
  if (name == "two-point" && o.degree < 2) throw PreconditionError("verify: two-point needs degree >= 2");
  if (name == "three-point" && o.degree < 3) throw PreconditionError("verify: three-point needs degree >= 3");
  if ((name == "legendre" || name == "two-point" || name == "three-point") && o.degree < 2)
    throw PreconditionError("verify: cumulant suites need degree >= 2");
  return o;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"products", "moments", "legendre", "two-point",
                                                 "three-point", "theorem", "univariate"};
  return names;
}

SuiteResult run_suite(std::string_view name, SuiteOptions options) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw PreconditionError("verify: unknown suite '" + std::string(name) + "'");
  const auto o = with_defaults(name, options);
  SuiteResult result{std::string(name), o, {}, {}};
  Collector c;
  if (name == "products") {
    products_suite(o, c);
  } else if (name == "moments") {
    moments_suite(o, c);
  } else if (name == "legendre") {
    legendre_suite(o, c);
  } else if (name == "two-point") {
    cumulant_pair_suite(o, c, 4, "two-point", [](const auto& k, const auto& l) { return verify_two_point(k, l); });
  } else if (name == "three-point") {
    cumulant_pair_suite(o, c, 5, "three-point",
                        [](const auto& k, const auto& l) { return verify_three_point(k, l); });
  } else if (name == "theorem") {
    theorem_suite(o, c);
  } else {
    univariate_suite(o, c, result.notes);
  }
  result.reports = c.take();
  return result;
}

}  // namespace planar
