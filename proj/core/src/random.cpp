#include "planar/random.hpp"

#include <cmath>

#include "planar/effective_action.hpp"

namespace planar {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t state = seed;
  std::uint64_t out = splitmix64(state);
  state ^= a * 0xd1b54a32d192ed03ULL;
  out ^= splitmix64(state);
  state ^= b * 0x8cb92ba72f3d8dd7ULL;
  return out ^ splitmix64(state);
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

Rational random_rational(Rng& rng, const RandomSeriesOptions& opts) {
  auto num = rng.between(-opts.numerator_bound, opts.numerator_bound);
  while (opts.nonzero && num == 0 && opts.numerator_bound > 0)
    num = rng.between(-opts.numerator_bound, opts.numerator_bound);
  const auto den = rng.between(1, opts.denominator_bound);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

Series random_series(Rng& rng, int alphabet, int max_degree, int min_degree,
                     const RandomSeriesOptions& opts) {
  Series out(alphabet, max_degree);
  for (int d = min_degree; d <= max_degree; ++d)
    for (const auto& w : words_of_degree(alphabet, d))
      if (static_cast<int>(rng.below(100)) < opts.density_percent)
        out.accumulate(w, random_rational(rng, opts));
  return out;
}

Series random_g1(Rng& rng, int alphabet, int max_degree, const RandomSeriesOptions& opts) {
  auto out = random_series(rng, alphabet, max_degree, 1, opts);
  out.accumulate(Word{}, Rational(1));
  return out;
}

Series random_g0(Rng& rng, int alphabet, int max_degree, const RandomSeriesOptions& opts) {
  return random_series(rng, alphabet, max_degree, 1, opts);
}

Cumulants<Rational> random_regular_cumulants(Rng& rng, int alphabet, int max_degree,
                                             const RandomSeriesOptions& opts) {
  if (max_degree < 2) throw PreconditionError("random_regular_cumulants: degree must be >= 2");
  while (true) {
    Cumulants<Rational> k(random_series(rng, alphabet, max_degree, 2, opts));
    if (is_regular(k)) return k;
  }
}

}  // namespace planar
