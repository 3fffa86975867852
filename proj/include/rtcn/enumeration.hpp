#pragma once

// Exact counts, exhaustive enumeration, the one-leaf growth operations and
// uniform sampling of ranked tree-child networks.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rtcn/event_code.hpp"

namespace rtcn {

using BigInt = boost::multiprecision::cpp_int;

// Number of RTCNs on l leaves: l!(l-1)!^2 / 2^(l-1).
BigInt rtc_count(int leaves);
// Number of ranked trees on l leaves: l!(l-1)! / 2^(l-1).
BigInt rt_count(int leaves);
// Signless Stirling number of the first kind [n, k].
BigInt stirling1(int n, int k);
// RTCNs on l leaves with exactly b branching events.
BigInt rtc_count_by_branching(int leaves, int branching);
// Networks containing a fixed ranked tree on l leaves: (2l-3)!!.
BigInt containing_count(int leaves);

// Grows a network on l leaves into one on l+1 leaves.
//   OI{a,b}:   the leaf labeled l becomes a cherry on new leaves a < b.
//   OII{a,b,c}: the leaves a' < b' (ranks of a, b in {1..l+1}\{c}) become
//              the parents of a reticulation event with children a, b and
//              hybrid leaf c.
// Other leaves are relabeled order-consistently.
struct GrowthOp {
  enum class Kind : std::uint8_t { OI, OII };
  Kind kind = Kind::OI;
  int a = 1;
  int b = 2;
  int c = 0;

  static GrowthOp oi(int a, int b) { return {Kind::OI, a, b, 0}; }
  static GrowthOp oii(int a, int b, int c) { return {Kind::OII, a, b, c}; }

  auto operator<=>(const GrowthOp&) const = default;
};

bool op_in_domain(const GrowthOp& op, int leaves);
// Every op applicable at `leaves` leaves, OI first; there are (l+1)l^2/2.
std::vector<GrowthOp> growth_ops(int leaves);

EventCode apply_growth(const EventCode& code, const GrowthOp& op);
// Inverse of apply_growth; requires at least 3 leaves.
std::pair<EventCode, GrowthOp> strip_bottom(const EventCode& code);

// Lazy walk over all valid codes in lexicographic order. Single consumer.
class CodeEnumerator {
 public:
  explicit CodeEnumerator(int leaves, bool trees_only = false);

  std::optional<EventCode> next();

 private:
  int leaves_;
  // options_[i-1] lists the admissible events at bottom-up index i.
  std::vector<std::vector<Event>> options_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

// Number of admissible events at a level with `width` lineages below it.
std::uint64_t level_option_count(int width, bool trees_only = false);
// The index-th admissible event, in lexicographic order.
Event level_option(int width, std::uint64_t index);

EventCode sample_uniform(int leaves, std::mt19937_64& rng);
EventCode sample_uniform(int leaves, std::uint64_t seed);

}  // namespace rtcn
