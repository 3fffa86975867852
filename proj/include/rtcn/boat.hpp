#pragma once

// Bijection between ranked tree-child networks and boat sequences.
//
// Both families grow one leaf/person at a time with the same number of
// choices per step. A network is stripped down to the cherry while the
// growth operations are recorded; the operations are then replayed on the
// rank array of the trivial two-person boat sequence.

#include <optional>
#include <utility>
#include <vector>

#include "rtcn/boat_sequence.hpp"
#include "rtcn/enumeration.hpp"
#include "rtcn/event_code.hpp"

namespace rtcn {

// The map r: people replaced by their relative rank on their current shore.
RankArray rank_map(const BoatSequence& boat);
// r^-1.
BoatSequence rank_unmap(const RankArray& arr);

// Prepends {a,b} to row1 and appends to row2 either `size` (OI) or the rank
// of c in {1..size+1}\{a,b} (OII).
RankArray extend_ranks(const RankArray& arr, const GrowthOp& op);
// Inverse of extend_ranks; requires size >= 3.
std::pair<RankArray, GrowthOp> reduce_ranks(const RankArray& arr);

BoatSequence rtcn_to_boat(const EventCode& code);
EventCode boat_to_rtcn(const BoatSequence& boat);

// Number of return trips made by the highest-numbered person on the far
// shore, i.e. row2 entries that equal their maximum.
int max_rank_return_count(const BoatSequence& boat);

// Lazy walk over every boat sequence for `people` people, in lexicographic
// order of their rank arrays.
class BoatEnumerator {
 public:
  explicit BoatEnumerator(int people);
  std::optional<BoatSequence> next();

 private:
  RankArray current_;
  bool done_ = false;
};

}  // namespace rtcn
