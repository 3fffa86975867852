#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace rtcn {

// Rooted binary tree with leaves labeled 1..l and unordered children.
//
// Stored canonically: ids 0..l-1 are the leaves (label = id + 1), internal
// nodes l..2l-2 are numbered in post-order with children visited in order
// of their smallest descendant leaf, so the root is 2l-2. Two trees are
// equal iff they are the same phylogenetic tree.
class PhyloTree {
 public:
  PhyloTree() = default;

  // `parent[v]` for v = 0..2l-2, where 0..l-1 are the leaves and the root
  // has parent -1. Throws InvalidInput if this is not a binary tree.
  static PhyloTree from_parents(int leaves, const std::vector<int>& parent);

  int leaves() const { return leaves_; }
  int root() const { return 2 * leaves_ - 2; }
  bool is_leaf(int v) const { return v < leaves_; }
  // Children of an internal node, smaller-minimum-leaf first.
  std::pair<int, int> children(int v) const { return kids_[static_cast<std::size_t>(v - leaves_)]; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }

  auto operator<=>(const PhyloTree&) const = default;

 private:
  int leaves_ = 0;
  std::vector<std::pair<int, int>> kids_;
  std::vector<int> parent_;
};

// The tree of labeled histories: a root with a single child (the root edge),
// leaves 1..l and internal nodes labeled 1bar..(l-1)bar, with the total
// label order 1 < ... < l < 1bar < ... < (l-1)bar.
//
// Node ids follow that order: leaf x has id x-1, internal node kbar has id
// l+k-1 and the root has id 2l-1. Comparing ids compares labels.
class LabeledHistoryTree {
 public:
  LabeledHistoryTree() = default;
  // Throws InvalidInput unless `parent` describes such a tree.
  LabeledHistoryTree(int leaves, std::vector<int> parent);

  int leaves() const { return leaves_; }
  int root() const { return 2 * leaves_ - 1; }
  static int leaf_id(int label) { return label - 1; }
  int internal_id(int k) const { return leaves_ + k - 1; }
  bool is_leaf(int id) const { return id < leaves_; }

  int parent(int id) const { return parent_[static_cast<std::size_t>(id)]; }
  // Ascending by id (label order).
  std::vector<int> children(int id) const;
  const std::vector<int>& parents() const { return parent_; }

  // Removes the root edge and forgets the internal labels.
  PhyloTree to_phylo() const;

  auto operator<=>(const LabeledHistoryTree&) const = default;

 private:
  int leaves_ = 0;
  std::vector<int> parent_;
};

}  // namespace rtcn
