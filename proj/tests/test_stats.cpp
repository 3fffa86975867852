#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rtcn/boat.hpp"
#include "rtcn/stats.hpp"

using namespace rtcn;

namespace {

std::vector<std::int64_t> histogram(const std::vector<int>& samples, int size, int offset) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(size), 0);
  for (int x : samples) ++h.at(static_cast<std::size_t>(x - offset));
  return h;
}

std::vector<double> to_double(const std::vector<Rational>& pmf) {
  std::vector<double> out;
  for (const auto& p : pmf) out.push_back(static_cast<double>(p));
  return out;
}

}  // namespace

TEST_CASE("exact pmf of the branching count") {
  CHECK(exact_branching_pmf(2) == std::vector<Rational>{1});
  CHECK(exact_branching_pmf(3) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  for (int l = 2; l <= 15; ++l) {
    Rational total = 0;
    for (const auto& p : exact_branching_pmf(l)) total += p;
    CHECK(total == 1);
  }
}

TEST_CASE("pmf matches the strata of exhaustive enumeration") {
  for (int l = 2; l <= 6; ++l) {
    std::map<int, long> strata;
    long total = 0;
    CodeEnumerator en(l);
    while (auto c = en.next()) {
      ++strata[profile(*c).branching_count];
      ++total;
    }
    const auto pmf = exact_branching_pmf(l);
    for (int b = 1; b <= l - 1; ++b) CHECK(pmf[static_cast<std::size_t>(b - 1)] == Rational(strata[b], total));
  }
}

TEST_CASE("exact moments") {
  CHECK(exact_moments(2).mean == 1);
  CHECK(exact_moments(2).variance == 0);
  CHECK(exact_moments(3).mean == Rational(3, 2));
  CHECK(exact_moments(3).variance == Rational(1, 4));
  for (int l = 2; l <= 12; ++l) {
    const auto pmf = exact_branching_pmf(l);
    Rational mean = 0;
    Rational second = 0;
    for (int b = 1; b <= l - 1; ++b) {
      mean += pmf[static_cast<std::size_t>(b - 1)] * b;
      second += pmf[static_cast<std::size_t>(b - 1)] * b * b;
    }
    const ExactMoments m = exact_moments(l);
    CHECK(m.mean == mean);
    CHECK(m.variance == second - mean * mean);
    CHECK(branching_moments(l).mean == doctest::Approx(static_cast<double>(mean)).epsilon(1e-14));
    CHECK(branching_moments(l).variance == doctest::Approx(static_cast<double>(m.variance)).epsilon(1e-14));
  }
  // H_{9999} - 1 and H_{9999} - H^(2)_{9999}, by direct summation here.
  long double h1 = 0, h2 = 0;
  for (int j = 1; j <= 9999; ++j) {
    h1 += 1.0L / j;
    h2 += 1.0L / (static_cast<long double>(j) * j);
  }
  CHECK(branching_moments(10000).mean == doctest::Approx(static_cast<double>(h1)).epsilon(1e-13));
  CHECK(branching_moments(10000).variance == doctest::Approx(static_cast<double>(h1 - h2)).epsilon(1e-13));
}

TEST_CASE("branching samplers") {
  for (int b : sample_branching_counts(2, 1000, 1)) CHECK(b == 1);
  const auto three = sample_branching_counts(3, 60000, 2);
  const double ones = static_cast<double>(std::count(three.begin(), three.end(), 1)) / 60000.0;
  CHECK(ones == doctest::Approx(0.5).epsilon(0.02));

  // l = 4: counts s(3,b) * 18 out of 108, i.e. 2/6, 3/6, 1/6.
  const auto four = sample_branching_counts(4, 60000, 3);
  const std::vector<double> p4{2.0 / 6, 3.0 / 6, 1.0 / 6};
  CHECK(chi_square_pvalue(histogram(four, 3, 1), p4) > 0.001);
}

TEST_CASE("fast and full sampling paths agree") {
  for (int l = 3; l <= 5; ++l) {
    const auto probs = to_double(exact_branching_pmf(l));
    const auto fast = sample_branching_counts(l, 20000, 10 + l, SamplerPath::Fast);
    const auto full = sample_branching_counts(l, 20000, 20 + l, SamplerPath::Full);
    CHECK(chi_square_pvalue(histogram(fast, l - 1, 1), probs) > 0.001);
    CHECK(chi_square_pvalue(histogram(full, l - 1, 1), probs) > 0.001);
    const auto boat_fast = boat_return_experiment(l, 20000, 30 + l, SamplerPath::Fast);
    const auto boat_full = boat_return_experiment(l, 20000, 40 + l, SamplerPath::Full);
    CHECK(chi_square_pvalue(histogram(boat_fast, l - 1, 0), probs) > 0.001);
    CHECK(chi_square_pvalue(histogram(boat_full, l - 1, 0), probs) > 0.001);
  }
}

TEST_CASE("boat statistic is the branching count shifted by one") {
  for (int x : boat_return_experiment(2, 1000, 5)) CHECK(x == 0);
  const auto three = boat_return_experiment(3, 60000, 6);
  const double ones = static_cast<double>(std::count(three.begin(), three.end(), 1)) / 60000.0;
  CHECK(std::abs(ones - 0.5) <= 0.01);

  for (int l = 2; l <= 5; ++l) {
    std::vector<long> counts(static_cast<std::size_t>(l), 0);
    long total = 0;
    for (const auto& b : oracle::boat_schedules(l)) {
      ++counts[static_cast<std::size_t>(max_rank_return_count(b))];
      ++total;
    }
    const auto pmf = exact_branching_pmf(l);
    for (int x = 0; x <= l - 2; ++x) CHECK(Rational(counts[static_cast<std::size_t>(x)], total) == pmf[static_cast<std::size_t>(x)]);
  }

  const auto hundred = boat_return_experiment(100, 50000, 7, SamplerPath::Full);
  const auto probs = to_double(exact_branching_pmf(100));
  CHECK(chi_square_pvalue(histogram(hundred, 99, 0), probs) > 0.001);
}

TEST_CASE("samples do not depend on the number of threads") {
  const auto many = boat_return_experiment(500, 30000, 8);
  const char* old = std::getenv("RTCNKIT_THREADS");
  const std::string saved = old ? old : "";
  setenv("RTCNKIT_THREADS", "1", 1);
  CHECK(worker_threads() == 1);
  const auto one = boat_return_experiment(500, 30000, 8);
  if (old) {
    setenv("RTCNKIT_THREADS", saved.c_str(), 1);
  } else {
    unsetenv("RTCNKIT_THREADS");
  }
  CHECK(one == many);
  CHECK(boat_return_experiment(500, 30000, 9) != many);
}

TEST_CASE("normality report") {
  const std::vector<int> constant(2000, 3);
  const ExperimentReport flat = normality_report(constant, 50);
  CHECK(flat.degenerate);
  CHECK_FALSE(flat.pass);
  CHECK(normality_report(std::vector<int>(1000, 0), 2).degenerate);
  CHECK_THROWS_AS(normality_report(std::vector<int>(10, 0), 5), InvalidInput);

  const auto samples = boat_return_experiment(2000, 20000, 11);
  const ExperimentReport r = normality_report(samples, 2000, 11);
  CHECK(r.n == 20000);
  CHECK(r.seed == 11);
  CHECK(std::abs(r.sample_mean - r.exact_mean) <= 4 * std::sqrt(r.exact_variance / r.n));
  CHECK(r.mean_ok);
  CHECK(r.variance_ok);
  CHECK(r.ks_distance < r.ks_distance_raw);
  CHECK(report_json(normality_report(samples, 2000, 11)) == report_json(r));
}

TEST_CASE("report and CSV formats") {
  const auto samples = boat_return_experiment(100, 1000, 12);
  const std::string json = report_json(normality_report(samples, 100, 12));
  const std::vector<std::string> keys{"leaves", "n", "seed", "sample_mean", "sample_variance", "exact_mean",
                                      "exact_variance", "mean_deviation", "variance_deviation", "ks_distance",
                                      "ks_distance_raw", "degenerate", "mean_ok", "variance_ok", "ks_ok", "pass"};
  std::size_t at = 0;
  for (const auto& k : keys) {
    const std::size_t pos = json.find("\"" + k + "\":", at);
    REQUIRE(pos != std::string::npos);
    at = pos + 1;
  }
  CHECK(json.rfind("{\"leaves\":100,\"n\":1000,\"seed\":12,", 0) == 0);

  std::ostringstream csv;
  write_samples_csv(csv, std::vector<int>{4, 7});
  CHECK(csv.str() == "sample_index,x\n0,4\n1,7\n");
}

TEST_CASE("chi-square p-values") {
  const std::vector<std::int64_t> fair{500, 500};
  const std::vector<double> half{0.5, 0.5};
  CHECK(chi_square_pvalue(fair, half) == doctest::Approx(1.0));
  const std::vector<std::int64_t> skewed{700, 300};
  CHECK(chi_square_pvalue(skewed, half) < 1e-6);
}
