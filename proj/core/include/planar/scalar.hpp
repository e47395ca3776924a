#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace planar {

/// Exact scalar: arbitrary-precision rational (GMP).
using Rational = mpq_class;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr std::string_view name = "rational";
  static constexpr bool exact = true;

  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  // mpq_class(p, q) is not reduced; equality needs canonical form.
  static void normalize(Rational& v) { v.canonicalize(); }
  static double magnitude(const Rational& v) { return std::abs(v.get_d()); }

  /// Canonical "p/q" with q > 0 and gcd(p, q) = 1; integers keep the "/1".
  static std::string to_string(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
  }
};

template <>
struct ScalarTraits<double> {
  static constexpr std::string_view name = "float64";
  static constexpr bool exact = false;

  static bool is_zero(double v) { return v == 0.0; }
  static void normalize(double&) {}
  static double magnitude(double v) { return std::abs(v); }
  static std::string to_string(double v);
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
  { ScalarTraits<S>::to_string(a) } -> std::convertible_to<std::string>;
  S(a + b);
  S(a - b);
  S(a * b);
  S(a / b);
  S(-a);
  S(0);
  S(1);
};

template <Scalar S>
bool is_zero(const S& v) {
  return ScalarTraits<S>::is_zero(v);
}

/// Parses "p", "-p" or "p/q"; throws FormatError on anything else or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace planar
