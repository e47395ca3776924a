#include "planar/sampler.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "planar/random.hpp"

namespace planar {

namespace {

using Matrix = Eigen::MatrixXcd;

Matrix draw_gue(int n, Rng& rng) {
  Matrix a(n, n);
  const double diag_sd = std::sqrt(1.0 / n);
  const double off_sd = std::sqrt(1.0 / (2.0 * n));
  for (int i = 0; i < n; ++i) {
    a(i, i) = std::complex<double>(diag_sd * rng.gaussian(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const double re = off_sd * rng.gaussian();
      const double im = off_sd * rng.gaussian();
      a(i, j) = std::complex<double>(re, im);
      a(j, i) = std::complex<double>(re, -im);
    }
  }
  return a;
}

// tr(P Q) without forming the product.
double trace_of_product(const Matrix& p, const Matrix& q) {
  return p.cwiseProduct(q.transpose()).sum().real();
}

}  // namespace

void validate(const SampleSpec& spec) {
  if (spec.model != "gue") throw PreconditionError("sample_moments: unknown model '" + spec.model + "'");
  if (spec.matrix_size < 2) throw PreconditionError("sample_moments: matrix size must be at least 2");
  if (spec.matrix_size > kMaxMatrixSize)
    throw PreconditionError("sample_moments: matrix size above " + std::to_string(kMaxMatrixSize));
  if (spec.samples < 1) throw PreconditionError("sample_moments: need at least one sample");
  if (spec.letters < 1) throw PreconditionError("sample_moments: need at least one letter");
  if (spec.max_degree < 1 || spec.max_degree > kMaxSampleDegree)
    throw PreconditionError("sample_moments: degree must be in 1.." + std::to_string(kMaxSampleDegree));
  double words = 0;
  for (int d = 0; d <= spec.max_degree; ++d) words += std::pow(spec.letters, d);
  if (words > 1e5) throw PreconditionError("sample_moments: too many words for the given letters and degree");
}

FloatSeries sample_moments(const SampleSpec& spec, std::uint64_t seed) {
  validate(spec);
  const int n = spec.matrix_size;
  const int half = (spec.max_degree + 1) / 2;
  const auto words = words_up_to(spec.letters, spec.max_degree);
  std::map<Word, double> sums;

  for (int s = 0; s < spec.samples; ++s) {
    std::vector<Matrix> letters;
    for (int u = 0; u < spec.letters; ++u) {
      Rng rng(stream_seed(seed, static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(u)));
      letters.push_back(draw_gue(n, rng));
    }
    // Products of all words up to half the degree, built by extending prefixes.
    std::map<Word, Matrix> products;
    products.emplace(Word{}, Matrix::Identity(n, n));
    for (int d = 1; d <= half; ++d)
      for (const auto& w : words_of_degree(spec.letters, d))
        products.emplace(w, products.at(w.prefix(w.degree() - 1)) * letters[static_cast<std::size_t>(w.back() - 1)]);

    for (const auto& w : words) {
      if (w.empty()) continue;
      const std::size_t left = (w.degree() + 1) / 2;
      const double tr = trace_of_product(products.at(w.prefix(left)), products.at(w.suffix(left)));
      sums[w] += tr / n;
    }
  }

  FloatSeries out(spec.letters, spec.max_degree);
  out.accumulate(Word{}, 1.0);
  for (const auto& [w, total] : sums) out.accumulate(w, total / spec.samples);
  return out;
}

}  // namespace planar
