// Acceptance checks. `acceptance --criterion N` runs one criterion; with no
// arguments all nine run. Each prints detail lines and one final
// "criterion N: PASS|FAIL" line; the exit status is 0 iff all selected
// criteria pass.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "planar/effective_action.hpp"
#include "planar/moments.hpp"
#include "planar/random.hpp"
#include "planar/sampler.hpp"
#include "planar/suites.hpp"
#include "planar/trees.hpp"

using namespace planar;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int digits = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

void detail(const std::string& line) { std::cout << "  " << line << '\n'; }

// Prints every failing report of a suite run; returns true when all pass.
bool report_suite(const SuiteResult& r, const std::function<bool(const std::string&)>& select, int& checked) {
  bool ok = true;
  for (const auto& rep : r.reports) {
    if (!select(rep.identity)) continue;
    ++checked;
    if (rep.passed()) continue;
    ok = false;
    detail(r.suite + " [alphabet " + std::to_string(r.options.alphabet) + "] " + rep.identity + ": " +
           std::to_string(rep.violations.size()) + " violation(s), first at " + rep.violations.front().where +
           " word [" + rep.violations.front().word.to_string() + "] lhs " + rep.violations.front().lhs + " rhs " +
           rep.violations.front().rhs);
  }
  return ok;
}

Outcome criterion1() {
  const auto start = Clock::now();
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 3;
    Rng rng(stream_seed(kSeed, 101, static_cast<std::uint64_t>(t)));
    const Moments<Rational> m(random_g1(rng, n, 6));
    const auto k = cumulants_from_moments(m);
    const auto one = Series::one(n, 6);
    const bool residual = (m.series() - one - prec(k.series(), m.series())).is_zero();
    const bool mkm = moments_from_cumulants(k).series() == m.series();
    const Cumulants<Rational> k2(random_g0(rng, n, 6));
    const bool kmk = cumulants_from_moments(moments_from_cumulants(k2)).series() == k2.series();
    if (!(residual && mkm && kmk)) {
      ++failures;
      detail("instance " + std::to_string(t) + " (n=" + std::to_string(n) + ") failed: residual " +
             (residual ? "ok" : "nonzero") + ", M->K->M " + (mkm ? "ok" : "differs") + ", K->M->K " +
             (kmk ? "ok" : "differs"));
    }
  }
  const double secs = seconds_since(start);
  const bool fast = secs < 60.0;
  return {failures == 0 && fast, "moment/cumulant round trips and functional-equation residual, 100 instances, "
                                 "n in {1,2,3}, D=6: " +
                                     std::to_string(failures) + " failing, " + fmt(secs) + " s (limit 60 s)"};
}

Outcome criterion2() {
  int failures = 0, instances = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 10; ++t, ++instances) {
      Rng rng(stream_seed(kSeed, 102, static_cast<std::uint64_t>(n * 100 + t)));
      const Moments<Rational> m(random_g1(rng, n, 4));
      const auto k = cumulants_from_moments(m);
      const auto r = lowdegree_oracle_check(m, k);
      // Second oracle: non-crossing partition sums, written out independently.
      int partition_mismatches = 0;
      for (const auto& w : words_up_to(n, 4))
        if (m.series().coefficient(w) != oracle::moment_from_partitions(k.series(), w)) ++partition_mismatches;
      if (!r.passed() || partition_mismatches > 0) {
        ++failures;
        detail("n=" + std::to_string(n) + " instance " + std::to_string(t) + ": " +
               std::to_string(r.violations.size()) + " closed-form violation(s), " +
               std::to_string(partition_mismatches) + " partition-sum mismatch(es)");
      }
    }
  }
  return {failures == 0, "low-degree moment-cumulant relations (orders 0..4) for all index tuples, n <= 3, " +
                             std::to_string(instances) + " instances: " + std::to_string(failures) + " failing"};
}

const std::set<std::string> kAlgebraLaws = {"bullet associativity",
                                            "bullet inverse (right)",
                                            "bullet inverse (left)",
                                            "bullet unit",
                                            "bullet = prec + succ",
                                            "right module law",
                                            "distributivity (bullet)",
                                            "distributivity (prec)",
                                            "distributivity (succ)",
                                            "pre-Lie identity",
                                            "Jacobi identity",
                                            "univariate bracket [x^n, x^m] = (n-m) x^(n+m)"};

Outcome products_criterion(bool laws) {
  const auto start = Clock::now();
  bool ok = true;
  int checked = 0;
  const int split[3] = {17, 17, 16};  // 50 instances over n = 1, 2, 3
  for (int n = 1; n <= 3; ++n) {
    SuiteOptions o;
    o.seed = kSeed + 3;
    o.degree = 6;
    o.alphabet = n;
    o.instances = split[n - 1];
    const auto r = run_suite("products", o);
    ok &= report_suite(r, [&](const std::string& id) { return kAlgebraLaws.contains(id) == laws; }, checked);
  }
  const std::string what = laws ? "algebra laws (associativity, inverse, module law, distributivity, pre-Lie, "
                                  "univariate bracket)"
                                : "calculus rules (Leibniz, chain rules, dM = (dK) bullet M)";
  return {ok && checked > 0, what + ", 50 instances, D=6, n in {1,2,3}: " + std::to_string(checked) +
                                 " identity reports, " + (ok ? "all exact" : "violations found") + ", " +
                                 fmt(seconds_since(start)) + " s"};
}

Outcome criterion5() {
  const auto start = Clock::now();
  bool ok = true;
  int checked = 0;
  for (const char* suite : {"legendre", "two-point", "three-point"}) {
    for (int n = 1; n <= 2; ++n) {
      SuiteOptions o;
      o.seed = kSeed + 5;
      o.degree = 5;
      o.alphabet = n;
      o.instances = n == 1 ? 13 : 12;  // 25 in total
      ok &= report_suite(run_suite(suite, o), [](const std::string&) { return true; }, checked);
    }
  }
  const double secs = seconds_since(start);
  return {ok && secs < 120.0, "Legendre identities, two-point and three-point relations, 25 regular K, n in {1,2}, "
                              "D=5: " +
                                  std::to_string(checked) + " identity reports, " +
                                  (ok ? "all exact" : "violations found") + ", " + fmt(secs) + " s (limit 120 s)"};
}

Outcome criterion6() {
  SuiteOptions o;
  o.seed = kSeed + 6;
  o.instances = 5;
  const auto r = run_suite("univariate", o);
  bool ok = true;
  int checked = 0;
  ok &= report_suite(r, [](const std::string&) { return true; }, checked);
  for (const auto& note : r.notes) detail(note);
  return {ok, "printed univariate relations of orders 2..6 at 5 random cumulant vectors and tree-table "
              "multiplicities: " +
                  std::string(ok ? "all match" : "mismatches above")};
}

Outcome criterion7() {
  const auto start = Clock::now();
  bool ok = true;
  int checked = 0;
  for (int n = 1; n <= 2; ++n) {
    SuiteOptions o;
    o.seed = kSeed + 7;
    o.degree = 4;
    o.alphabet = n;
    o.instances = 2;
    o.max_length = 5;
    ok &= report_suite(run_suite("theorem", o), [](const std::string&) { return true; }, checked);
  }
  std::string counts;
  for (int marks = 2; marks <= 6; ++marks) {
    const auto trees = enumerate_admissible(marks);
    const auto brute = oracle::schroder_trees(marks - 1);
    std::set<TreeNode> a, b(brute.begin(), brute.end());
    for (const auto& t : trees) a.insert(t.top());
    const bool same = a == b && a.size() == trees.size();
    ok &= same;
    counts += (marks > 2 ? ", " : "") + std::to_string(trees.size());
    if (!same) detail("tree enumeration differs from brute force at n=" + std::to_string(marks));
  }
  return {ok, "tree expansion equals the iterated derivative for words of length 2..5, n in {1,2}, y-degree 4; "
              "tree counts " +
                  counts + " (brute force agrees: " + (ok ? "yes" : "see above") + "), " +
                  fmt(seconds_since(start)) + " s"};
}

Outcome criterion8() {
  const auto start = Clock::now();
  SampleSpec s;
  s.matrix_size = 200;
  s.samples = 100;
  s.letters = 1;
  s.max_degree = 4;
  const auto m = sample_moments(s, kSeed);
  const auto k = cumulants_from_moments(Moments<double>(m)).series();
  const double k2 = k.coefficient(Word{1, 1}), k3 = k.coefficient(Word{1, 1, 1}),
               k4 = k.coefficient(Word{1, 1, 1, 1});
  const double secs = seconds_since(start);
  const bool ok = std::abs(k2 - 1) <= 0.05 && std::abs(k3) <= 0.15 && std::abs(k4) <= 0.15 && secs < 60.0;
  return {ok, "GUE N=200, S=100, seed " + std::to_string(kSeed) + ": k2 = " + fmt(k2, 4) + " (|k2-1| <= 0.05), k3 = " +
                  fmt(k3, 4) + " (<= 0.15), k4 = " + fmt(k4, 4) + " (<= 0.15), " + fmt(secs) + " s (limit 60 s)"};
}

std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str() + "\x1f" + err.str()};
}

Outcome criterion9() {
  bool ok = true;
  std::vector<std::vector<std::string>> runs;
  for (const auto& suite : suite_names()) runs.push_back({"verify", "--suite", suite, "--seed", "77"});
  runs.push_back({"sample-moments", "--N", "60", "--samples", "5", "--letters", "2", "--degree", "4", "--seed", "77"});
  for (const auto& args : runs) {
    const auto a = run_cli(args), b = run_cli(args);
    if (a != b) {
      ok = false;
      detail("outputs differ for: " + args[0] + " " + args[2]);
    }
  }
  return {ok, "repeated runs of every verify suite and sample-moments with a fixed seed: " +
                  std::string(ok ? "byte-identical" : "differences above") + " (" + std::to_string(runs.size()) +
                  " commands)"};
}

Outcome run(int criterion) {
  switch (criterion) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return products_criterion(true);
    case 4: return products_criterion(false);
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    default: throw std::invalid_argument("criterion must be 1..9");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty())
    for (int c = 1; c <= 9; ++c) selected.push_back(c);

  bool all = true;
  for (int c : selected) {
    Outcome o;
    try {
      o = run(c);
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all &= o.pass;
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << std::endl;
  }
  return all ? 0 : 1;
}
