#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "planar/scalar.hpp"
#include "planar/series.hpp"
#include "planar/word.hpp"

namespace planar {

struct Violation {
  std::string where;  // which instance of the identity, e.g. "i=1 j=2"
  Word word;
  std::string lhs;
  std::string rhs;
};

/// Outcome of checking one identity, coefficient by coefficient.
struct IdentityReport {
  std::string identity;
  int max_checked_degree = -1;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  int max_violating_degree() const {
    int d = -1;
    for (const auto& v : violations) d = std::max(d, static_cast<int>(v.word.degree()));
    return d;
  }

  void merge(const IdentityReport& other) {
    max_checked_degree = std::max(max_checked_degree, other.max_checked_degree);
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

/// Relative tolerance used for float-mode identity checks.
inline constexpr double kFloatIdentityTolerance = 1e-9;

template <Scalar S>
bool scalars_match(const S& a, const S& b) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= kFloatIdentityTolerance * scale;
  }
}

/// Compares lhs and rhs on every word up to the smaller truncation degree and
/// records each mismatch into `report`.
template <Scalar S>
void compare_into(IdentityReport& report, const std::string& where, const BasicSeries<S>& lhs,
                  const BasicSeries<S>& rhs) {
  const int degree = std::min(lhs.max_degree(), rhs.max_degree());
  report.max_checked_degree = std::max(report.max_checked_degree, degree);
  auto check = [&](const Word& w) {
    if (static_cast<int>(w.degree()) > degree) return;
    const S a = lhs.coefficient(w);
    const S b = rhs.coefficient(w);
    if (!scalars_match(a, b))
      report.violations.push_back(
          {where, w, ScalarTraits<S>::to_string(a), ScalarTraits<S>::to_string(b)});
  };
  for (const auto& [w, c] : lhs.terms()) check(w);
  for (const auto& [w, c] : rhs.terms())
    if (!lhs.terms().contains(w)) check(w);
}

}  // namespace planar
