#pragma once

#include <cstdint>
#include <random>

#include "planar/moments.hpp"
#include "planar/series.hpp"

namespace planar {

/// SplitMix64 step: advances `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed for an independent stream, derived from (seed, a, b) by SplitMix64.
/// Every random object in the library draws from its own stream so results do
/// not depend on evaluation order.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// Portable generator: std::mt19937_64 (whose output sequence is fixed by the
/// standard) plus hand-written transforms. No std:: distributions are used,
/// since their algorithms differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Integer in [0, bound) by reduction modulo bound.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal by the Marsaglia polar method; the second variate of
  /// each accepted pair is cached and returned by the following call.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct RandomSeriesOptions {
  int numerator_bound = 5;    // numerators drawn from [-bound, bound]
  int denominator_bound = 4;  // denominators drawn from [1, bound]
  int density_percent = 60;   // chance that a given word gets a coefficient
  bool nonzero = false;       // redraw zero numerators
};

Rational random_rational(Rng& rng, const RandomSeriesOptions& opts = {});

/// Random series with coefficients on words of degree min_degree..max_degree.
Series random_series(Rng& rng, int alphabet, int max_degree, int min_degree,
                     const RandomSeriesOptions& opts = {});

/// Random element of G¹ (constant term 1).
Series random_g1(Rng& rng, int alphabet, int max_degree, const RandomSeriesOptions& opts = {});

/// Random element of G⁰ (constant term 0).
Series random_g0(Rng& rng, int alphabet, int max_degree, const RandomSeriesOptions& opts = {});

/// Random centered cumulant series with an invertible covariance matrix.
Cumulants<Rational> random_regular_cumulants(Rng& rng, int alphabet, int max_degree,
                                             const RandomSeriesOptions& opts = {});

}  // namespace planar
