#include "rtcn/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <random>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>
#include "json.hpp"

#include "rtcn/boat.hpp"
#include "rtcn/enumeration.hpp"

namespace rtcn {

namespace {

constexpr std::int64_t kChunk = 4096;

void require_leaves(int leaves) {
  if (leaves < 2) throw InvalidInput("need at least 2 leaves");
}

// Counts successes among independent trials j = first..last where trial j
// succeeds with probability 1/j. Given a success at j, the next one comes
// after t with probability j/t, so it can be drawn in one step.
int count_records(int first, int last, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int count = 0;
  double j = first - 1;
  while (true) {
    const double u = 1.0 - unit(rng);  // (0, 1]
    const double next = std::floor(j / u) + 1;
    if (next > last) return count;
    ++count;
    j = next;
  }
}

// Runs `draw(rng)` n times across worker threads, chunk c seeded from
// (seed, c).
template <class Draw>
std::vector<int> run_chunks(std::int64_t n, std::uint64_t seed, const Draw& draw) {
  if (n < 1) throw InvalidInput("need at least one sample");
  std::vector<int> out(static_cast<std::size_t>(n));
  const std::int64_t chunks = (n + kChunk - 1) / kChunk;
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t c = next++; c < chunks; c = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
      std::mt19937_64 rng(seq);
      const std::int64_t end = std::min(n, (c + 1) * kChunk);
      for (std::int64_t s = c * kChunk; s < end; ++s) out[static_cast<std::size_t>(s)] = draw(rng);
    }
  };
  const auto threads = static_cast<std::int64_t>(std::min<std::int64_t>(worker_threads(), chunks));
  std::vector<std::thread> pool;
  for (std::int64_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

RankArray uniform_rank_array(int leaves, std::mt19937_64& rng) {
  RankArray arr{leaves, {}, {}};
  for (int i = 1; i <= leaves - 1; ++i) {
    const int m = leaves - i + 1;
    int a = std::uniform_int_distribution<int>(1, m)(rng);
    int b = std::uniform_int_distribution<int>(1, m - 1)(rng);
    if (b >= a) ++b;
    arr.row1.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (int i = 1; i <= leaves - 2; ++i) arr.row2.push_back(std::uniform_int_distribution<int>(1, i + 1)(rng));
  return arr;
}

double phi(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

std::vector<Rational> exact_branching_pmf(int leaves) {
  require_leaves(leaves);
  const int n = leaves - 1;
  BigInt factorial = 1;
  for (int j = 2; j <= n; ++j) factorial *= j;
  std::vector<Rational> pmf;
  for (int b = 1; b <= n; ++b) pmf.emplace_back(stirling1(n, b), factorial);
  return pmf;
}

ExactMoments exact_moments(int leaves) {
  require_leaves(leaves);
  ExactMoments m{0, 0};
  for (int j = 1; j <= leaves - 1; ++j) {
    const Rational inv(1, j);
    m.mean += inv;
    m.variance += inv * (1 - inv);
  }
  return m;
}

Moments branching_moments(int leaves) {
  require_leaves(leaves);
  // Summing the small terms first keeps the rounding error negligible.
  long double mean = 0;
  long double variance = 0;
  for (int j = leaves - 1; j >= 1; --j) {
    const long double inv = 1.0L / j;
    mean += inv;
    variance += inv * (1 - inv);
  }
  return {static_cast<double>(mean), static_cast<double>(variance)};
}

std::vector<int> sample_branching_counts(int leaves, std::int64_t n, std::uint64_t seed, SamplerPath path) {
  require_leaves(leaves);
  if (path == SamplerPath::Fast) {
    return run_chunks(n, seed, [leaves](std::mt19937_64& rng) { return count_records(1, leaves - 1, rng); });
  }
  return run_chunks(n, seed, [leaves](std::mt19937_64& rng) {
    return profile(sample_uniform(leaves, rng)).branching_count;
  });
}

std::vector<int> boat_return_experiment(int leaves, std::int64_t n, std::uint64_t seed, SamplerPath path) {
  require_leaves(leaves);
  if (path == SamplerPath::Fast) {
    // row2[i-1] = i+1 with probability 1/(i+1), for i = 1..l-2.
    return run_chunks(n, seed, [leaves](std::mt19937_64& rng) { return count_records(2, leaves - 1, rng); });
  }
  return run_chunks(n, seed, [leaves](std::mt19937_64& rng) {
    return max_rank_return_count(rank_unmap(uniform_rank_array(leaves, rng)));
  });
}

ExperimentReport normality_report(std::span<const int> samples, int leaves, std::uint64_t seed) {
  require_leaves(leaves);
  if (samples.size() < 1000) throw InvalidInput("normality report needs at least 1000 samples");
  ExperimentReport r;
  r.leaves = leaves;
  r.n = static_cast<std::int64_t>(samples.size());
  r.seed = seed;

  // Integer sums are exact, hence independent of summation order.
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  for (int x : samples) {
    sum += x;
    sum_sq += static_cast<std::int64_t>(x) * x;
  }
  const long double n = static_cast<long double>(r.n);
  const long double mean = sum / n;
  r.sample_mean = static_cast<double>(mean);
  r.sample_variance = static_cast<double>((sum_sq - n * mean * mean) / (n - 1));

  const Moments exact = branching_moments(leaves);
  r.exact_mean = exact.mean - 1;
  r.exact_variance = exact.variance;
  r.degenerate = r.exact_variance <= 0 || r.sample_variance <= 0;
  if (r.degenerate) return r;

  const double sd = std::sqrt(r.exact_variance);
  r.mean_deviation = (r.sample_mean - r.exact_mean) / (sd / std::sqrt(static_cast<double>(r.n)));
  r.variance_deviation = std::abs(r.sample_variance - r.exact_variance) / r.exact_variance;

  std::vector<int> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const int lo = sorted.front();
  const int hi = sorted.back();
  double below = 0;  // empirical CDF at k - 1
  auto it = sorted.begin();
  for (int k = lo; k <= hi; ++k) {
    it = std::upper_bound(it, sorted.end(), k);
    const double at = static_cast<double>(it - sorted.begin()) / static_cast<double>(r.n);
    const double raw = phi((k - r.exact_mean) / sd);
    r.ks_distance_raw = std::max({r.ks_distance_raw, std::abs(at - raw), std::abs(below - raw)});
    const double corrected_below = phi((k - 0.5 - r.exact_mean) / sd);
    const double corrected_at = phi((k + 0.5 - r.exact_mean) / sd);
    r.ks_distance = std::max({r.ks_distance, std::abs(below - corrected_below), std::abs(at - corrected_at)});
    below = at;
  }

  r.mean_ok = std::abs(r.mean_deviation) <= 4;
  r.variance_ok = r.variance_deviation <= 0.1;
  r.ks_ok = r.ks_distance <= 0.05;
  r.pass = r.mean_ok && r.variance_ok && r.ks_ok;
  return r;
}

std::string report_json(const ExperimentReport& r) {
  nlohmann::ordered_json j;
  j["leaves"] = r.leaves;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["sample_mean"] = r.sample_mean;
  j["sample_variance"] = r.sample_variance;
  j["exact_mean"] = r.exact_mean;
  j["exact_variance"] = r.exact_variance;
  j["mean_deviation"] = r.mean_deviation;
  j["variance_deviation"] = r.variance_deviation;
  j["ks_distance"] = r.ks_distance;
  j["ks_distance_raw"] = r.ks_distance_raw;
  j["degenerate"] = r.degenerate;
  j["mean_ok"] = r.mean_ok;
  j["variance_ok"] = r.variance_ok;
  j["ks_ok"] = r.ks_ok;
  j["pass"] = r.pass;
  return j.dump();
}

void write_samples_csv(std::ostream& out, std::span<const int> samples) {
  out << "sample_index,x\n";
  for (std::size_t i = 0; i < samples.size(); ++i) out << i << ',' << samples[i] << '\n';
}

double chi_square_pvalue(std::span<const std::int64_t> observed, std::span<const double> probabilities) {
  if (observed.size() != probabilities.size()) throw InvalidInput("observed and expected cell counts differ");
  std::int64_t total = 0;
  for (auto o : observed) total += o;
  std::vector<std::pair<double, double>> cells;  // (observed, expected)
  std::pair<double, double> pending{0, 0};
  for (std::size_t i = 0; i < observed.size(); ++i) {
    pending.first += static_cast<double>(observed[i]);
    pending.second += probabilities[i] * static_cast<double>(total);
    if (pending.second >= 5) {
      cells.push_back(pending);
      pending = {0, 0};
    }
  }
  if (pending.first > 0 || pending.second > 0) {
    if (cells.empty()) {
      cells.push_back(pending);
    } else {
      cells.back().first += pending.first;
      cells.back().second += pending.second;
    }
  }
  if (cells.size() < 2) return 1.0;
  double chi = 0;
  for (const auto& [o, e] : cells) {
    if (e <= 0) return o > 0 ? 0.0 : 1.0;
    chi += (o - e) * (o - e) / e;
  }
  return boost::math::gamma_q(static_cast<double>(cells.size() - 1) / 2, chi / 2);
}

unsigned worker_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("RTCNKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && v >= 1) threads = std::min(threads, static_cast<unsigned>(v));
  }
  return threads;
}

}  // namespace rtcn
