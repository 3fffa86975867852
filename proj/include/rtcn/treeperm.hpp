#pragma once

// RTCNs with k reticulations <-> (ranked tree, permutation of {1..l-1} with
// l-1-k cycles).
//
// Each reticulation, from the bottom up, is turned into a branching event;
// the hybrid lineage is handed to the former right parent. The position a
// of the event and an offset b identifying that lineage among the others
// above it are recorded as the transposition (a, a+b). Products of
// transpositions are applied left to right.

#include <string>
#include <utility>
#include <vector>

#include "rtcn/event_code.hpp"
#include "rtcn/permutation.hpp"

namespace rtcn {

struct ReplacementStep {
  int a = 0;  // bottom-up event index
  int L1 = 0, L2 = 0, L3 = 0;       // below-labels: children and hybrid
  int l1 = 0, l2 = 0;               // above-labels of the parents before
  int l1_after = 0, l2_after = 0;   // above-labels after replacement
  int b = 0;

  auto operator<=>(const ReplacementStep&) const = default;
};

// Event i must be a reticulation. The returned code has a branching event
// there and identical events below it.
std::pair<EventCode, ReplacementStep> replace_retic(const EventCode& code, int i);
// Inverse of replace_retic; event a must be a branching event and
// 1 <= b <= l-1-a.
EventCode insert_retic(const EventCode& code, int a, int b);

struct TreePerm {
  EventCode tree;
  Permutation sigma;

  auto operator<=>(const TreePerm&) const = default;
};

TreePerm rtcn_to_treeperm(const EventCode& code);
// Same, also returning the individual replacement steps.
TreePerm rtcn_to_treeperm(const EventCode& code, std::vector<ReplacementStep>& steps);
EventCode treeperm_to_rtcn(const EventCode& tree, const Permutation& sigma);

// Applies (x1,y1) first, then (x2,y2), and so on.
Permutation transpositions_to_perm(const TranspositionSeq& seq);
// The unique canonical factorization.
TranspositionSeq perm_to_transpositions(const Permutation& sigma);

// Cycles including fixed points.
int cycle_count(const Permutation& sigma);
// "(1,5,3,4)(2)": cycles sorted by minimum element, each starting there.
std::string format_cycles(const Permutation& sigma);

}  // namespace rtcn
