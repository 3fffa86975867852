#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rtcn/codec.hpp"
#include "rtcn/enumeration.hpp"

using namespace rtcn;

namespace {

std::vector<EventCode> codes(int l, bool trees_only = false) {
  std::vector<EventCode> out;
  CodeEnumerator en(l, trees_only);
  while (auto c = en.next()) out.push_back(*c);
  return out;
}

}  // namespace

TEST_CASE("closed-form counts") {
  const std::vector<int> networks{1, 6, 108, 4320, 324000};
  const std::vector<int> trees{1, 3, 18, 180};
  for (int l = 2; l <= 6; ++l) CHECK(rtc_count(l) == networks[static_cast<std::size_t>(l - 2)]);
  for (int l = 2; l <= 5; ++l) CHECK(rt_count(l) == trees[static_cast<std::size_t>(l - 2)]);
  for (int l = 2; l <= 40; ++l) {
    CHECK(rtc_count(l) == oracle::network_count(l));
    CHECK(rt_count(l) == oracle::ranked_tree_count(l));
    CHECK(containing_count(l) == oracle::odd_double_factorial(l));
  }
  CHECK(containing_count(4) == 15);
  CHECK_THROWS_AS(rtc_count(1), InvalidInput);
}

TEST_CASE("Stirling numbers of the first kind count cycles") {
  for (int n = 1; n <= 8; ++n) {
    const auto census = oracle::cycle_census(n);
    for (int k = 1; k <= n; ++k) CHECK(stirling1(n, k) == census[static_cast<std::size_t>(k)]);
  }
  CHECK(stirling1(0, 0) == 1);
  CHECK(stirling1(5, 0) == 0);
  CHECK_THROWS_AS(stirling1(3, 4), InvalidInput);
}

TEST_CASE("enumeration matches the counts and is strictly increasing") {
  for (int l = 2; l <= 6; ++l) {
    const auto all = codes(l);
    CHECK(BigInt(static_cast<long>(all.size())) == oracle::network_count(l));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    const auto trees = codes(l, true);
    CHECK(BigInt(static_cast<long>(trees.size())) == oracle::ranked_tree_count(l));
    for (const auto& t : trees) CHECK(t.is_ranked_tree());
  }
  CHECK(format_rtcn(codes(3).front()) == "rtcn 3: B 1 2; B 1 2");
}

TEST_CASE("branching strata follow Stirling numbers") {
  // For l = 4 and b = 3: |s(3,3)| * 18 = 18 ranked trees.
  CHECK(rtc_count_by_branching(4, 3) == 18);
  for (int l = 2; l <= 6; ++l) {
    std::map<int, long> strata;
    for (const auto& c : codes(l)) ++strata[profile(c).branching_count];
    const auto census = oracle::cycle_census(l - 1);
    for (int b = 1; b <= l - 1; ++b) {
      const BigInt expected = BigInt(census[static_cast<std::size_t>(b)]) * oracle::ranked_tree_count(l);
      CHECK(BigInt(strata[b]) == expected);
      CHECK(rtc_count_by_branching(l, b) == expected);
    }
  }
}

TEST_CASE("three-leaf networks: half have a reticulation") {
  const auto all = codes(3);
  REQUIRE(all.size() == 6);
  int with_retic = 0;
  for (const auto& c : all) with_retic += c.reticulation_count();
  CHECK(with_retic == 3);
}

TEST_CASE("level options") {
  CHECK(level_option_count(2) == 1);
  CHECK(level_option_count(3) == 6);
  CHECK(level_option_count(4) == 18);
  CHECK(level_option_count(4, true) == 6);
  CHECK(level_option(3, 0) == Event::branch(1, 2));
  CHECK(level_option(3, 3) == Event::retic(1, 2, 3));
  CHECK(level_option(3, 5) == Event::retic(2, 3, 1));
}

TEST_CASE("growth operations") {
  CHECK(growth_ops(2).size() == 6);
  for (int l = 2; l <= 6; ++l) {
    const auto ops = growth_ops(l);
    CHECK(ops.size() == static_cast<std::size_t>((l + 1) * l * l / 2));
    for (const auto& op : ops) CHECK(op_in_domain(op, l));
  }
  CHECK_FALSE(op_in_domain(GrowthOp::oi(1, 4), 2));
  CHECK_FALSE(op_in_domain(GrowthOp::oii(1, 2, 2), 3));

  // OI on the cherry adds a cherry of leaves a, b below leaf 2's position.
  CHECK(format_rtcn(apply_growth(cherry(), GrowthOp::oi(1, 2))) == "rtcn 3: B 1 2; B 1 2");
  CHECK(format_rtcn(apply_growth(cherry(), GrowthOp::oii(1, 2, 3))) == "rtcn 3: R 1 2 3; B 1 2");
}

TEST_CASE("every network arises exactly once by growth") {
  for (int l = 2; l <= 5; ++l) {
    std::set<EventCode> grown;
    std::size_t attempts = 0;
    for (const auto& c : codes(l)) {
      for (const auto& op : growth_ops(l)) {
        const EventCode g = apply_growth(c, op);
        REQUIRE(validate_code(g).empty());
        grown.insert(g);
        ++attempts;
        const auto [back, used] = strip_bottom(g);
        CHECK(back == c);
        CHECK(used == op);
      }
    }
    CHECK(grown.size() == attempts);
    CHECK(BigInt(static_cast<long>(grown.size())) == oracle::network_count(l + 1));
  }
}

TEST_CASE("uniform sampler hits every three- and four-leaf network evenly") {
  std::mt19937_64 rng(12345);
  std::map<EventCode, std::int64_t> seen;
  const int draws = 108 * 400;
  for (int j = 0; j < draws; ++j) ++seen[sample_uniform(4, rng)];
  CHECK(seen.size() == 108);
  double chi = 0;
  for (const auto& [c, k] : seen) chi += (k - 400.0) * (k - 400.0) / 400.0;
  // 107 degrees of freedom; the 0.999 quantile is about 160.
  CHECK(chi < 160);
  CHECK(sample_uniform(7, 99) == sample_uniform(7, 99));
  for (int j = 0; j < 200; ++j) CHECK(validate_code(sample_uniform(9, rng)).empty());
}
