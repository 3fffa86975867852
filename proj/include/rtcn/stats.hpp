#pragma once

// The law of the number of branching events of a uniform random network,
// Monte-Carlo samplers for it, and normality diagnostics.
//
// The branching count B of a uniform network on l leaves is distributed as
// the cycle count of a uniform permutation of l-1 elements. The boat
// statistic X (returns made by the highest-ranked person) equals B - 1.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rtcn {

using Rational = boost::multiprecision::cpp_rational;

// pmf[b-1] = P(B = b) for b = 1..l-1.
std::vector<Rational> exact_branching_pmf(int leaves);

struct ExactMoments {
  Rational mean;
  Rational variance;
};

// Mean and variance of B as harmonic sums. The variance of X is the same and
// its mean is one less.
ExactMoments exact_moments(int leaves);

// The same sums in floating point, suitable for large l.
struct Moments {
  double mean = 0;
  double variance = 0;
};
Moments branching_moments(int leaves);

enum class SamplerPath : std::uint8_t {
  Fast,  // independent per-level events with geometric skipping
  Full,  // draws whole uniform objects and reads the statistic off them
};

// Samples of B. Work is split into fixed-size chunks with independent seed
// substreams, so the result depends only on (leaves, n, seed, path), not on
// the number of threads (capped by RTCNKIT_THREADS).
std::vector<int> sample_branching_counts(int leaves, std::int64_t n, std::uint64_t seed,
                                         SamplerPath path = SamplerPath::Fast);

// Samples of X over uniform boat sequences.
std::vector<int> boat_return_experiment(int leaves, std::int64_t n, std::uint64_t seed,
                                        SamplerPath path = SamplerPath::Fast);

struct ExperimentReport {
  int leaves = 0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  double sample_mean = 0;
  double sample_variance = 0;
  double exact_mean = 0;
  double exact_variance = 0;
  // (sample mean - exact mean) in standard errors.
  double mean_deviation = 0;
  // |sample variance - exact variance| / exact variance.
  double variance_deviation = 0;
  // The samples live on the integers: the sup distance between the
  // empirical CDF and Phi((k + 1/2 - mean) / sd) at integer k.
  double ks_distance = 0;
  // Sup distance against the uncorrected Phi((x - mean) / sd); bounded below
  // by half the largest atom, so it stays large for moderate l.
  double ks_distance_raw = 0;
  bool degenerate = false;
  bool mean_ok = false;
  bool variance_ok = false;
  bool ks_ok = false;
  bool pass = false;
};

// Standardizes X samples with the exact moments for `leaves`. Needs at least
// 1000 samples. Tolerances: mean within 4 standard errors, variance within
// 10%, corrected KS distance at most 0.05.
ExperimentReport normality_report(std::span<const int> samples, int leaves, std::uint64_t seed = 0);

// Keys in this order: leaves, n, seed, sample_mean, sample_variance,
// exact_mean, exact_variance, mean_deviation, variance_deviation,
// ks_distance, ks_distance_raw, degenerate, mean_ok, variance_ok, ks_ok,
// pass.
std::string report_json(const ExperimentReport& report);

// Header `sample_index,x`, then one row per sample, indices from 0.
void write_samples_csv(std::ostream& out, std::span<const int> samples);

// Pearson chi-square goodness-of-fit p-value. Cells with expected count
// below 5 are pooled with their neighbours.
double chi_square_pvalue(std::span<const std::int64_t> observed, std::span<const double> probabilities);

// Worker threads used by the samplers.
unsigned worker_threads();

}  // namespace rtcn
