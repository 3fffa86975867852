#pragma once

// Explicit node/edge form of a ranked tree-child network.
//
// Ranks: the root has rank 0, events have ranks 1..l-1 (top-down) and all
// leaves have rank l. A branching event is a single tree node; a
// reticulation event is a reticulation node together with its two tree-node
// parents, all three carrying the event's rank.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rtcn/event_code.hpp"

namespace rtcn {

using NodeId = int;

enum class NodeKind : std::uint8_t { Root, Tree, Reticulation, Leaf };

struct DagNode {
  NodeKind kind = NodeKind::Tree;
  int rank = 0;
  int label = 0;  // leaves only
  std::vector<NodeId> parents;
  std::vector<NodeId> children;
};

class NetworkDag {
 public:
  NodeId add_node(NodeKind kind, int rank, int label = 0);
  void add_edge(NodeId from, NodeId to);
  void remove_edge(NodeId from, NodeId to);
  // Detaches and erases a node; ids above `id` shift down by one.
  void remove_node(NodeId id);

  const DagNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  DagNode& node(NodeId id) { return nodes_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(nodes_.size()); }

  int leaf_count() const;
  int reticulation_count() const;
  // Throws InvalidInput if there is not exactly one root.
  NodeId root() const;
  // Leaf node carrying `label`, or -1.
  NodeId leaf(int label) const;
  // Reticulation nodes ordered by rank.
  std::vector<NodeId> reticulations() const;
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<DagNode> nodes_;
};

// Empty iff the DAG is a valid ranked tree-child network.
std::vector<std::string> validate_dag(const NetworkDag& dag);

// Instantiates the events top-down on left-to-right labeled lineages.
NetworkDag code_to_dag(const EventCode& code);

// Recovers lineage labels bottom-up. Throws InvalidInput for DAGs that are
// not valid RTCNs ("not tree-child", bad degrees, inconsistent ranks).
EventCode dag_to_code(const NetworkDag& dag);

struct LineageLabels {
  EventCode code;
  // gaps[k][x-1] is the node entered by lineage x just below rank k, for
  // k = 0..l-1 (gap 0 holds the root edge, gap l-1 the leaf edges).
  std::vector<std::vector<NodeId>> gaps;
};

// dag_to_code together with the per-gap lineage labeling it derives.
LineageLabels label_lineages(const NetworkDag& dag);

// A string that is equal for two DAGs iff they are isomorphic as ranked,
// leaf-labeled DAGs. Independent of the lineage-label machinery.
std::string canonical_signature(const NetworkDag& dag);

}  // namespace rtcn
