#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rtcn/boat.hpp"
#include "rtcn/codec.hpp"

using namespace rtcn;

TEST_CASE("the map r uses ranks within the current shore") {
  // Before the third crossing the near shore holds {2,3,5,6}; sending {2,5}
  // is recorded as {1,3}.
  const BoatSequence boat = parse_boat("boat 6: send 1,4 1,2 2,5 3,4 5,6 ; back 1 2 4 5");
  const RankArray r = rank_map(boat);
  CHECK(r.row1.at(2) == PersonPair{1, 3});
  CHECK(r.row1.at(0) == PersonPair{1, 4});
  CHECK(r.row1.back() == PersonPair{1, 2});
  CHECK(r.row2.at(0) == 1);
  CHECK(validate_rank_array(r).empty());
  CHECK(rank_unmap(r) == boat);
}

TEST_CASE("r is a bijection onto rank arrays") {
  for (int l = 2; l <= 6; ++l) {
    std::set<RankArray> images;
    const auto boats = oracle::boat_schedules(l);
    for (const auto& b : boats) {
      const RankArray r = rank_map(b);
      CHECK(validate_rank_array(r).empty());
      CHECK(rank_unmap(r) == b);
      images.insert(r);
    }
    CHECK(images.size() == boats.size());
    CHECK(BigInt(static_cast<long>(boats.size())) == oracle::network_count(l));
  }
}

TEST_CASE("extend and reduce rank arrays") {
  const RankArray base = rank_map(trivial_boat());
  CHECK(base.row1 == std::vector<PersonPair>{{1, 2}});
  CHECK(base.row2.empty());
  const RankArray oi = extend_ranks(base, GrowthOp::oi(1, 3));
  CHECK(oi.row1 == std::vector<PersonPair>{{1, 3}, {1, 2}});
  CHECK(oi.row2 == std::vector<int>{2});
  const RankArray oii = extend_ranks(base, GrowthOp::oii(2, 3, 1));
  CHECK(oii.row1 == std::vector<PersonPair>{{2, 3}, {1, 2}});
  CHECK(oii.row2 == std::vector<int>{1});
  CHECK(reduce_ranks(oi) == std::pair{base, GrowthOp::oi(1, 3)});
  CHECK(reduce_ranks(oii) == std::pair{base, GrowthOp::oii(2, 3, 1)});
}

TEST_CASE("three-leaf correspondence") {
  std::set<BoatSequence> image;
  int max_returns = 0;
  CodeEnumerator en(3);
  while (auto c = en.next()) {
    const BoatSequence b = rtcn_to_boat(*c);
    image.insert(b);
    // A ranked tree maps to a schedule where the better of the two on the far
    // shore rows back.
    CHECK((max_rank_return_count(b) == 1) == c->is_ranked_tree());
    max_returns += max_rank_return_count(b);
  }
  CHECK(image.size() == 6);
  CHECK(max_returns == 3);
  CHECK(rtcn_to_boat(cherry()) == trivial_boat());
}

TEST_CASE("bijection with boat schedules for leaves up to 5") {
  for (int l = 2; l <= 5; ++l) {
    const auto boats = oracle::boat_schedules(l);
    const std::set<BoatSequence> all(boats.begin(), boats.end());
    std::set<BoatSequence> image;
    CodeEnumerator en(l);
    while (auto c = en.next()) {
      const BoatSequence b = rtcn_to_boat(*c);
      CHECK(all.count(b) == 1);
      CHECK(image.insert(b).second);
      CHECK(boat_to_rtcn(b) == *c);
      CHECK(max_rank_return_count(b) + 1 == profile(*c).branching_count);
    }
    CHECK(image == all);
  }
}

TEST_CASE("boat enumerator lists every schedule once") {
  for (int l = 2; l <= 5; ++l) {
    std::set<BoatSequence> seen;
    BoatEnumerator en(l);
    while (auto b = en.next()) {
      CHECK(validate_boat(*b).empty());
      CHECK(seen.insert(*b).second);
    }
    const auto boats = oracle::boat_schedules(l);
    CHECK(seen == std::set<BoatSequence>(boats.begin(), boats.end()));
  }
}

TEST_CASE("invalid schedules are rejected") {
  CHECK_THROWS_AS(boat_to_rtcn(BoatSequence{3, {{1, 2}, {1, 2}}, {3}}), InvalidInput);
  CHECK_FALSE(validate_boat(BoatSequence{3, {{1, 2}, {1, 3}}, {3}}).empty());
  CHECK_FALSE(validate_boat(BoatSequence{3, {{1, 2}}, {}}).empty());
}
