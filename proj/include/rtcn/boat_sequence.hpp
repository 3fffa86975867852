#pragma once

// River crossings for l people with a two-person boat: two cross, one
// returns, two cross, ... until everyone is on the far shore.

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace rtcn {

using PersonPair = std::pair<int, int>;  // always stored with first < second

struct BoatSequence {
  int people = 0;
  std::vector<PersonPair> sends;  // people-1 crossings
  std::vector<int> returns;       // people-2 returners

  auto operator<=>(const BoatSequence&) const = default;
};

// Relative-rank image of a boat sequence. row1[i-1] is a 2-subset of
// {1..size-i+1}; row2[i-1] lies in {1..i+1}.
struct RankArray {
  int size = 0;
  std::vector<PersonPair> row1;
  std::vector<int> row2;

  auto operator<=>(const RankArray&) const = default;
};

// Simulates the crossings; empty iff every send and return is possible and
// everyone ends on the far shore.
std::vector<std::string> validate_boat(const BoatSequence& boat);
std::vector<std::string> validate_rank_array(const RankArray& arr);

// The unique schedule for two people.
BoatSequence trivial_boat();

}  // namespace rtcn
