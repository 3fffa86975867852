#include "rtcn/phylo_tree.hpp"

#include <algorithm>
#include <string>

#include "rtcn/event_code.hpp"

namespace rtcn {

namespace {

// Children lists from a parent array; throws unless each node reaches `root`.
std::vector<std::vector<int>> children_of(const std::vector<int>& parent, int root) {
  const int n = static_cast<int>(parent.size());
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    const int p = parent[static_cast<std::size_t>(v)];
    if (p < 0 || p >= n || p == v) throw InvalidInput("tree: bad parent pointer");
    kids[static_cast<std::size_t>(p)].push_back(v);
  }
  for (int v = 0; v < n; ++v) {
    int steps = 0;
    for (int u = v; u != root; u = parent[static_cast<std::size_t>(u)]) {
      if (++steps > n) throw InvalidInput("tree: cycle in parent pointers");
    }
  }
  return kids;
}

}  // namespace

PhyloTree PhyloTree::from_parents(int leaves, const std::vector<int>& parent) {
  if (leaves < 2) throw InvalidInput("phylogenetic tree needs at least 2 leaves");
  const int n = 2 * leaves - 1;
  if (static_cast<int>(parent.size()) != n) {
    throw InvalidInput("phylogenetic tree on " + std::to_string(leaves) + " leaves needs " +
                       std::to_string(n) + " nodes");
  }
  auto root_it = std::find(parent.begin(), parent.end(), -1);
  if (root_it == parent.end() || std::count(parent.begin(), parent.end(), -1) != 1) {
    throw InvalidInput("phylogenetic tree needs exactly one root");
  }
  const int root = static_cast<int>(root_it - parent.begin());
  auto kids = children_of(parent, root);
  for (int v = 0; v < n; ++v) {
    const auto deg = kids[static_cast<std::size_t>(v)].size();
    if (v < leaves ? deg != 0 : deg != 2) throw InvalidInput("phylogenetic tree must be binary");
  }

  std::vector<int> min_leaf(static_cast<std::size_t>(n), 0);
  auto compute_min = [&](auto&& self, int v) -> int {
    if (v < leaves) return min_leaf[static_cast<std::size_t>(v)] = v;
    const auto& ch = kids[static_cast<std::size_t>(v)];
    return min_leaf[static_cast<std::size_t>(v)] = std::min(self(self, ch[0]), self(self, ch[1]));
  };
  compute_min(compute_min, root);

  PhyloTree out;
  out.leaves_ = leaves;
  out.kids_.assign(static_cast<std::size_t>(leaves - 1), {0, 0});
  out.parent_.assign(static_cast<std::size_t>(n), -1);
  int next_id = leaves;
  auto assign = [&](auto&& self, int v) -> int {
    if (v < leaves) return v;
    auto ch = kids[static_cast<std::size_t>(v)];
    if (min_leaf[static_cast<std::size_t>(ch[0])] > min_leaf[static_cast<std::size_t>(ch[1])]) {
      std::swap(ch[0], ch[1]);
    }
    const int a = self(self, ch[0]);
    const int b = self(self, ch[1]);
    const int id = next_id++;
    out.kids_[static_cast<std::size_t>(id - leaves)] = {a, b};
    out.parent_[static_cast<std::size_t>(a)] = id;
    out.parent_[static_cast<std::size_t>(b)] = id;
    return id;
  };
  assign(assign, root);
  return out;
}

LabeledHistoryTree::LabeledHistoryTree(int leaves, std::vector<int> parent)
    : leaves_(leaves), parent_(std::move(parent)) {
  if (leaves_ < 1) throw InvalidInput("labeled history tree needs a leaf");
  if (static_cast<int>(parent_.size()) != 2 * leaves_) {
    throw InvalidInput("labeled history tree on " + std::to_string(leaves_) + " leaves needs " +
                       std::to_string(2 * leaves_) + " nodes");
  }
  if (parent_[static_cast<std::size_t>(root())] != -1) {
    throw InvalidInput("labeled history tree: root must have no parent");
  }
  auto kids = children_of(parent_, root());
  for (int v = 0; v <= root(); ++v) {
    const auto deg = kids[static_cast<std::size_t>(v)].size();
    const std::size_t want = v == root() ? 1 : is_leaf(v) ? 0 : 2;
    if (deg != want) throw InvalidInput("labeled history tree: bad out-degree");
  }
}

std::vector<int> LabeledHistoryTree::children(int id) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
    if (parent_[static_cast<std::size_t>(v)] == id) out.push_back(v);
  }
  return out;
}

PhyloTree LabeledHistoryTree::to_phylo() const {
  // Internal ids already follow the leaves; dropping the root (the last id)
  // leaves exactly the 2l-1 nodes of the phylogenetic tree.
  std::vector<int> parent(parent_.begin(), parent_.end() - 1);
  for (int& p : parent) {
    if (p == root()) p = -1;
  }
  return PhyloTree::from_parents(leaves_, parent);
}

}  // namespace rtcn
