#pragma once

#include <cstdint>
#include <string>

#include "planar/moments.hpp"
#include "planar/series.hpp"

namespace planar {

/// Parameters of a random-matrix moment estimate.
struct SampleSpec {
  std::string model = "gue";
  int matrix_size = 200;  // N
  int samples = 100;      // S
  int letters = 1;        // independent matrices per sample
  int max_degree = 4;
};

inline constexpr int kMaxMatrixSize = 1024;
inline constexpr int kMaxSampleDegree = 8;

/// Throws PreconditionError when the spec is invalid or exceeds the limits.
void validate(const SampleSpec& spec);

/// Averaged normalized traces (1/S) Σ_s tr(A_{i1}...A_{ik}) / N over S draws
/// of `letters` independent GUE matrices.
///
/// GUE entries: real diagonal with variance 1/N; strictly upper entries with
/// independent real and imaginary parts of variance 1/(2N). Matrix u of
/// sample s is filled from Rng(stream_seed(seed, s, u)), row by row over the
/// upper triangle (diagonal, then real and imaginary part of each entry to
/// its right). Traces of words are complex in a single draw; the real part
/// is kept.
FloatSeries sample_moments(const SampleSpec& spec, std::uint64_t seed);

}  // namespace planar
