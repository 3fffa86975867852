#pragma once

// Networks containing a fixed ranked tree T, and their bijection with
// phylogenetic trees.
//
// Every network N with T contained in it arises from T by deciding, for each
// branching event of T (top-down rank k), whether to keep it or to turn it
// into a reticulation: one of the k-1 other lineages just below the event
// becomes the second parent and the left or right child lineage becomes the
// hybrid. Lineages are ordered left to right by T's lineage labels, which
// coincide with the order of their smallest descendant leaf.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rtcn/event_code.hpp"
#include "rtcn/network_dag.hpp"
#include "rtcn/phylo_tree.hpp"

namespace rtcn {

enum class Side : std::uint8_t { Left, Right };

struct Decision {
  bool keep = true;
  int lineage = 0;  // 1..k-1 among the other lineages, when !keep
  Side side = Side::Left;

  static Decision keep_event() { return {}; }
  static Decision retic(int lineage, Side side) { return {false, lineage, side}; }

  auto operator<=>(const Decision&) const = default;
};

struct DecisionVector {
  int leaves = 0;
  std::vector<Decision> entries;  // entries[k-1] for top-down rank k

  auto operator<=>(const DecisionVector&) const = default;
};

std::vector<std::string> validate_decisions(const DecisionVector& d);
// All (2l-3)!! vectors. Per rank the options run Keep, (1,L), (1,R), (2,L),
// ...; the last rank varies fastest.
std::vector<DecisionVector> all_decision_vectors(int leaves);

// Deletes, for each reticulation node (in rank order), the edge from
// `removed_parents[j]` and suppresses the resulting degree-two nodes.
EventCode reduce_by_choice(const NetworkDag& network, std::span<const NodeId> removed_parents);
// Every reduction of the network, choice j of the mask removing the edge
// from parents[bit j] of the j-th reticulation.
std::vector<EventCode> all_reductions(const NetworkDag& network);

// 2^k brute force over reductions.
bool contains_bruteforce(const EventCode& tree, const EventCode& network);
// Decision decoding.
bool contains(const EventCode& tree, const EventCode& network);

NetworkDag expand(const EventCode& tree, const DecisionVector& d);
EventCode expand_code(const EventCode& tree, const DecisionVector& d);
// Throws InvalidInput if the network does not arise from the tree.
DecisionVector decisions_from_pair(const EventCode& tree, const EventCode& network);

// The growth process of the tree of labeled histories, driven by decisions.
LabeledHistoryTree history_tree(const DecisionVector& d);
// Reads the decisions back off a labeled history tree.
DecisionVector decisions_from_history(const LabeledHistoryTree& tau);

PhyloTree pair_to_phylo(const EventCode& tree, const EventCode& network);
LabeledHistoryTree label_phylo(const PhyloTree& phylo);
NetworkDag phylo_to_pair(const EventCode& tree, const PhyloTree& phylo);

}  // namespace rtcn
