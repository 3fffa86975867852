#include "rtcn/containment.hpp"

#include <algorithm>

namespace rtcn {

namespace {

void require_tree(const EventCode& tree) {
  require_valid(tree);
  if (!tree.is_ranked_tree()) throw InvalidInput("expected a ranked tree, got a network with reticulations");
}

void require_decisions(const DecisionVector& d, int leaves) {
  if (d.leaves != leaves) throw InvalidInput("decision vector is for a different leaf count");
  if (auto v = validate_decisions(d); !v.empty()) throw InvalidInput("invalid decision vector: " + v.front());
}

std::vector<Decision> rank_options(int k) {
  std::vector<Decision> out{Decision::keep_event()};
  for (int i = 1; i < k; ++i) {
    out.push_back(Decision::retic(i, Side::Left));
    out.push_back(Decision::retic(i, Side::Right));
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_decisions(const DecisionVector& d) {
  std::vector<std::string> violations;
  if (d.leaves < 2) {
    violations.push_back("need at least 2 leaves");
    return violations;
  }
  if (static_cast<int>(d.entries.size()) != d.leaves - 1) {
    violations.push_back("expected " + std::to_string(d.leaves - 1) + " entries");
    return violations;
  }
  for (int k = 1; k < d.leaves; ++k) {
    const Decision& e = d.entries[static_cast<std::size_t>(k - 1)];
    if (!e.keep && (e.lineage < 1 || e.lineage > k - 1)) {
      violations.push_back("entry " + std::to_string(k) + ": lineage must lie in 1.." +
                           std::to_string(k - 1));
    }
  }
  return violations;
}

std::vector<DecisionVector> all_decision_vectors(int leaves) {
  if (leaves < 2) throw InvalidInput("need at least 2 leaves");
  std::vector<std::vector<Decision>> options;
  for (int k = 1; k < leaves; ++k) options.push_back(rank_options(k));
  std::vector<std::size_t> digits(options.size(), 0);
  std::vector<DecisionVector> out;
  while (true) {
    DecisionVector d{leaves, {}};
    for (std::size_t j = 0; j < digits.size(); ++j) d.entries.push_back(options[j][digits[j]]);
    out.push_back(std::move(d));
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < options[pos].size()) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

EventCode reduce_by_choice(const NetworkDag& network, std::span<const NodeId> removed_parents) {
  NetworkDag dag = network;
  const std::vector<NodeId> retics = dag.reticulations();
  if (removed_parents.size() != retics.size()) {
    throw InvalidInput("need one removed edge per reticulation node");
  }
  std::vector<NodeId> doomed;
  for (std::size_t j = 0; j < retics.size(); ++j) {
    const NodeId r = retics[j];
    const NodeId p = removed_parents[j];
    const auto& rp = dag.node(r).parents;
    if (std::find(rp.begin(), rp.end(), p) == rp.end()) {
      throw InvalidInput("removed edge does not enter its reticulation node");
    }
    dag.remove_edge(p, r);
    // p and r are now indegree 1, outdegree 1: splice them out.
    for (NodeId v : {p, r}) {
      const NodeId up = dag.node(v).parents.at(0);
      const NodeId down = dag.node(v).children.at(0);
      dag.remove_edge(up, v);
      dag.remove_edge(v, down);
      dag.add_edge(up, down);
      doomed.push_back(v);
    }
  }
  std::sort(doomed.rbegin(), doomed.rend());
  for (NodeId v : doomed) dag.remove_node(v);
  return dag_to_code(dag);
}

std::vector<EventCode> all_reductions(const NetworkDag& network) {
  const std::vector<NodeId> retics = network.reticulations();
  std::vector<EventCode> out;
  std::vector<NodeId> removed(retics.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << retics.size()); ++mask) {
    for (std::size_t j = 0; j < retics.size(); ++j) {
      removed[j] = network.node(retics[j]).parents[(mask >> j) & 1];
    }
    out.push_back(reduce_by_choice(network, removed));
  }
  return out;
}

bool contains_bruteforce(const EventCode& tree, const EventCode& network) {
  require_tree(tree);
  require_valid(network);
  if (tree.leaves() != network.leaves()) return false;
  const auto reductions = all_reductions(code_to_dag(network));
  return std::find(reductions.begin(), reductions.end(), tree) != reductions.end();
}

bool contains(const EventCode& tree, const EventCode& network) {
  require_tree(tree);
  require_valid(network);
  if (tree.leaves() != network.leaves()) return false;
  try {
    decisions_from_pair(tree, network);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

NetworkDag expand(const EventCode& tree, const DecisionVector& d) {
  require_tree(tree);
  const int l = tree.leaves();
  require_decisions(d, l);
  NetworkDag dag;
  // Indexed by the tree's lineage labels: where each lineage departs in N.
  std::vector<NodeId> above{dag.add_node(NodeKind::Root, 0)};
  for (int k = 1; k < l; ++k) {
    const Event& e = tree.at_rank(k);
    const Decision& dec = d.entries[static_cast<std::size_t>(k - 1)];
    auto from_above = [&](int x) { return above[static_cast<std::size_t>(x - 1)]; };
    std::vector<NodeId> below(static_cast<std::size_t>(k + 1));
    for (int x = 1; x <= k + 1; ++x) {
      if (x != e.c1 && x != e.c2) below[static_cast<std::size_t>(x - 1)] = from_above(x - (x > e.c2));
    }
    if (dec.keep) {
      const NodeId t = dag.add_node(NodeKind::Tree, k);
      dag.add_edge(from_above(e.c1), t);
      below[static_cast<std::size_t>(e.c1 - 1)] = t;
      below[static_cast<std::size_t>(e.c2 - 1)] = t;
    } else {
      // The lineage-th label outside {c1, c2}.
      int other = dec.lineage;
      if (other >= e.c1) ++other;
      if (other >= e.c2) ++other;
      const NodeId t1 = dag.add_node(NodeKind::Tree, k);
      const NodeId t2 = dag.add_node(NodeKind::Tree, k);
      const NodeId r = dag.add_node(NodeKind::Reticulation, k);
      dag.add_edge(from_above(e.c1), t1);
      dag.add_edge(from_above(other - (other > e.c2)), t2);
      dag.add_edge(t1, r);
      dag.add_edge(t2, r);
      below[static_cast<std::size_t>(other - 1)] = t2;
      const bool left = dec.side == Side::Left;
      below[static_cast<std::size_t>(e.c1 - 1)] = left ? r : t1;
      below[static_cast<std::size_t>(e.c2 - 1)] = left ? t1 : r;
    }
    above = std::move(below);
  }
  for (int x = 1; x <= l; ++x) {
    dag.add_edge(above[static_cast<std::size_t>(x - 1)], dag.add_node(NodeKind::Leaf, l, x));
  }
  return dag;
}

EventCode expand_code(const EventCode& tree, const DecisionVector& d) {
  return dag_to_code(expand(tree, d));
}

DecisionVector decisions_from_pair(const EventCode& tree, const EventCode& network) {
  require_tree(tree);
  require_valid(network);
  const int l = tree.leaves();
  if (network.leaves() != l) throw InvalidInput("tree and network have different leaf counts");
  auto fail = [] { throw InvalidInput("network does not arise from the tree"); };

  DecisionVector d{l, std::vector<Decision>(static_cast<std::size_t>(l - 1))};
  // to_tree[x-1]: the tree lineage matching the network's lineage x.
  std::vector<int> to_tree(static_cast<std::size_t>(l));
  for (int x = 1; x <= l; ++x) to_tree[static_cast<std::size_t>(x - 1)] = x;

  for (int k = l - 1; k >= 1; --k) {
    const int i = l - k;
    const Event& te = tree.event(i);
    const Event& ne = network.event(i);
    auto psi = [&](int x) { return to_tree[static_cast<std::size_t>(x - 1)]; };
    auto tree_above = [&](int y) { return y - (y > te.c2); };
    std::vector<int> next(static_cast<std::size_t>(k));
    Decision dec;
    if (ne.is_branch()) {
      const int a = psi(ne.c1), b = psi(ne.c2);
      if (std::min(a, b) != te.c1 || std::max(a, b) != te.c2) fail();
      for (int x = 1; x <= k + 1; ++x) {
        if (x == ne.c2) continue;
        next[static_cast<std::size_t>(x - (x > ne.c2) - 1)] = x == ne.c1 ? te.c1 : tree_above(psi(x));
      }
    } else {
      const int chosen = psi(ne.h);
      if (chosen != te.c1 && chosen != te.c2) fail();
      const int kept = chosen == te.c1 ? te.c2 : te.c1;
      int kept_child = 0, other_child = 0;
      if (psi(ne.c1) == kept) {
        kept_child = ne.c1;
        other_child = ne.c2;
      } else if (psi(ne.c2) == kept) {
        kept_child = ne.c2;
        other_child = ne.c1;
      } else {
        fail();
      }
      const int other = psi(other_child);
      for (int x = 1; x <= k + 1; ++x) {
        if (x == ne.h) continue;
        next[static_cast<std::size_t>(x - (x > ne.h) - 1)] = x == kept_child ? te.c1 : tree_above(psi(x));
      }
      dec = Decision::retic(other - (other > te.c1) - (other > te.c2),
                            chosen == te.c1 ? Side::Left : Side::Right);
    }
    d.entries[static_cast<std::size_t>(k - 1)] = dec;
    to_tree = std::move(next);
  }
  if (auto v = validate_decisions(d); !v.empty()) fail();
  if (expand_code(tree, d) != network) fail();
  return d;
}

LabeledHistoryTree history_tree(const DecisionVector& d) {
  require_decisions(d, d.leaves);
  const int l = d.leaves;
  const int root = 2 * l - 1;
  std::vector<int> parent(static_cast<std::size_t>(2 * l), -1);
  auto at = [&](int id) -> int& { return parent[static_cast<std::size_t>(id)]; };
  at(LabeledHistoryTree::leaf_id(1)) = root;
  int top = LabeledHistoryTree::leaf_id(1);  // child of the root
  for (int k = 1; k < l; ++k) {
    const int node = l + k - 1;
    const int leaf = LabeledHistoryTree::leaf_id(k + 1);
    const Decision& dec = d.entries[static_cast<std::size_t>(k - 1)];
    int below = 0;
    if (dec.keep) {
      below = top;
      at(node) = root;
      top = node;
    } else {
      const int host = l + dec.lineage - 1;
      std::vector<int> kids;
      for (int v = 0; v < root; ++v) {
        if (at(v) == host) kids.push_back(v);
      }
      below = dec.side == Side::Left ? std::min(kids[0], kids[1]) : std::max(kids[0], kids[1]);
      at(node) = host;
    }
    at(below) = node;
    at(leaf) = node;
  }
  return LabeledHistoryTree(l, std::move(parent));
}

DecisionVector decisions_from_history(const LabeledHistoryTree& tau) {
  const int l = tau.leaves();
  const int root = tau.root();
  std::vector<int> parent = tau.parents();
  auto at = [&](int id) -> int& { return parent[static_cast<std::size_t>(id)]; };
  auto kids_of = [&](int id) {
    std::vector<int> kids;
    for (int v = 0; v < root; ++v) {
      if (at(v) == id) kids.push_back(v);
    }
    return kids;
  };
  auto fail = [] { throw InvalidInput("labeled history tree is not decodable"); };

  DecisionVector d{l, std::vector<Decision>(static_cast<std::size_t>(l - 1))};
  for (int k = l - 1; k >= 1; --k) {
    const int node = l + k - 1;
    const int leaf = LabeledHistoryTree::leaf_id(k + 1);
    if (at(leaf) != node) fail();
    const auto kids = kids_of(node);
    if (kids.size() != 2) fail();
    const int below = kids[0] == leaf ? kids[1] : kids[0];
    const int up = at(node);
    Decision dec;
    if (up != root) {
      if (up < l || up >= node) fail();
      const auto siblings = kids_of(up);
      if (siblings.size() != 2) fail();
      const int sibling = siblings[0] == node ? siblings[1] : siblings[0];
      dec = Decision::retic(up - l + 1, below < sibling ? Side::Left : Side::Right);
    }
    d.entries[static_cast<std::size_t>(k - 1)] = dec;
    at(below) = up;
    at(node) = -2;
    at(leaf) = -2;
  }
  return d;
}

PhyloTree pair_to_phylo(const EventCode& tree, const EventCode& network) {
  return history_tree(decisions_from_pair(tree, network)).to_phylo();
}

LabeledHistoryTree label_phylo(const PhyloTree& phylo) {
  const int l = phylo.leaves();
  const int n = 2 * l - 1;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    parent[static_cast<std::size_t>(v)] = phylo.parent(v);
    if (!phylo.is_leaf(v)) {
      auto [a, b] = phylo.children(v);
      kids[static_cast<std::size_t>(v)] = {a, b};
    }
  }
  // Peel off the largest leaf; its parent carries the next label down.
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  for (int m = l; m >= 2; --m) {
    const int leaf = m - 1;
    const int u = parent[static_cast<std::size_t>(leaf)];
    label[static_cast<std::size_t>(u)] = m - 1;
    auto& uk = kids[static_cast<std::size_t>(u)];
    const int sibling = uk[0] == leaf ? uk[1] : uk[0];
    const int g = parent[static_cast<std::size_t>(u)];
    parent[static_cast<std::size_t>(sibling)] = g;
    if (g >= 0) {
      auto& gk = kids[static_cast<std::size_t>(g)];
      std::replace(gk.begin(), gk.end(), u, sibling);
    }
  }
  auto tau_id = [&](int v) { return phylo.is_leaf(v) ? v : l + label[static_cast<std::size_t>(v)] - 1; };
  std::vector<int> tau_parent(static_cast<std::size_t>(2 * l), -1);
  for (int v = 0; v < n; ++v) {
    const int p = phylo.parent(v);
    tau_parent[static_cast<std::size_t>(tau_id(v))] = p < 0 ? 2 * l - 1 : tau_id(p);
  }
  return LabeledHistoryTree(l, std::move(tau_parent));
}

NetworkDag phylo_to_pair(const EventCode& tree, const PhyloTree& phylo) {
  require_tree(tree);
  if (phylo.leaves() != tree.leaves()) throw InvalidInput("tree and phylogenetic tree have different leaf counts");
  return expand(tree, decisions_from_history(label_phylo(phylo)));
}

}  // namespace rtcn
