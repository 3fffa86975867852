#include "rtcn/network_dag.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace rtcn {

NodeId NetworkDag::add_node(NodeKind kind, int rank, int label) {
  nodes_.push_back(DagNode{kind, rank, label, {}, {}});
  return static_cast<NodeId>(nodes_.size() - 1);
}

void NetworkDag::add_edge(NodeId from, NodeId to) {
  node(from).children.push_back(to);
  node(to).parents.push_back(from);
}

void NetworkDag::remove_edge(NodeId from, NodeId to) {
  auto drop = [](std::vector<NodeId>& v, NodeId x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw InvalidInput("remove_edge: no such edge");
    v.erase(it);
  };
  drop(node(from).children, to);
  drop(node(to).parents, from);
}

void NetworkDag::remove_node(NodeId id) {
  for (NodeId p : std::vector<NodeId>(node(id).parents)) remove_edge(p, id);
  for (NodeId c : std::vector<NodeId>(node(id).children)) remove_edge(id, c);
  nodes_.erase(nodes_.begin() + id);
  for (DagNode& n : nodes_) {
    for (NodeId& p : n.parents) p -= (p > id);
    for (NodeId& c : n.children) c -= (c > id);
  }
}

int NetworkDag::leaf_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                        [](const DagNode& n) { return n.kind == NodeKind::Leaf; }));
}

int NetworkDag::reticulation_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const DagNode& n) {
    return n.kind == NodeKind::Reticulation;
  }));
}

NodeId NetworkDag::root() const {
  NodeId found = -1;
  for (NodeId id = 0; id < size(); ++id) {
    if (node(id).kind != NodeKind::Root) continue;
    if (found != -1) throw InvalidInput("network has more than one root");
    found = id;
  }
  if (found == -1) throw InvalidInput("network has no root");
  return found;
}

NodeId NetworkDag::leaf(int label) const {
  for (NodeId id = 0; id < size(); ++id) {
    if (node(id).kind == NodeKind::Leaf && node(id).label == label) return id;
  }
  return -1;
}

std::vector<NodeId> NetworkDag::reticulations() const {
  std::vector<NodeId> out;
  for (NodeId id = 0; id < size(); ++id) {
    if (node(id).kind == NodeKind::Reticulation) out.push_back(id);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](NodeId a, NodeId b) { return node(a).rank < node(b).rank; });
  return out;
}

std::vector<std::pair<NodeId, NodeId>> NetworkDag::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId id = 0; id < size(); ++id) {
    for (NodeId c : node(id).children) out.emplace_back(id, c);
  }
  return out;
}

namespace {

bool is_retic(const NetworkDag& dag, NodeId id) {
  return dag.node(id).kind == NodeKind::Reticulation;
}

// The child of a reticulation parent that is not the reticulation node.
NodeId other_child(const NetworkDag& dag, NodeId parent, NodeId retic) {
  const auto& ch = dag.node(parent).children;
  return ch[0] == retic ? ch[1] : ch[0];
}

}  // namespace

std::vector<std::string> validate_dag(const NetworkDag& dag) {
  std::vector<std::string> violations;
  auto fail = [&](std::string msg) { violations.push_back(std::move(msg)); };

  int roots = 0;
  for (NodeId id = 0; id < dag.size(); ++id) roots += dag.node(id).kind == NodeKind::Root;
  if (roots != 1) {
    fail("expected exactly one root, found " + std::to_string(roots));
    return violations;
  }

  // Degrees and simplicity.
  for (NodeId id = 0; id < dag.size(); ++id) {
    const DagNode& n = dag.node(id);
    const auto in = n.parents.size(), out = n.children.size();
    const std::string where = "node " + std::to_string(id) + ": ";
    bool ok = true;
    switch (n.kind) {
      case NodeKind::Root: ok = in == 0 && out == 1; break;
      case NodeKind::Leaf: ok = in == 1 && out == 0; break;
      case NodeKind::Tree: ok = in == 1 && out == 2; break;
      case NodeKind::Reticulation: ok = in == 2 && out == 1; break;
    }
    if (!ok) fail(where + "bad degrees for its node type");
    std::set<NodeId> distinct(n.children.begin(), n.children.end());
    if (distinct.size() != n.children.size()) fail(where + "parallel edges");
    if (distinct.count(id)) fail(where + "self loop");
  }
  if (!violations.empty()) return violations;

  const int leaves = dag.leaf_count();
  if (leaves < 2) {
    fail("need at least 2 leaves");
    return violations;
  }
  std::vector<int> seen(static_cast<std::size_t>(leaves + 1), 0);
  for (NodeId id = 0; id < dag.size(); ++id) {
    const DagNode& n = dag.node(id);
    if (n.kind != NodeKind::Leaf) continue;
    if (n.label < 1 || n.label > leaves || seen[static_cast<std::size_t>(n.label)]++) {
      fail("leaf labels must be a bijection onto 1.." + std::to_string(leaves));
      return violations;
    }
  }

  for (NodeId id = 0; id < dag.size(); ++id) {
    const DagNode& n = dag.node(id);
    if (n.kind == NodeKind::Leaf) continue;
    bool has_tree_child = std::any_of(n.children.begin(), n.children.end(),
                                      [&](NodeId c) { return !is_retic(dag, c); });
    if (!has_tree_child) {
      fail("not tree-child: node " + std::to_string(id) + " has only reticulation children");
      return violations;
    }
  }

  // Rank structure: one event per rank 1..l-1.
  std::vector<std::vector<NodeId>> by_rank(static_cast<std::size_t>(leaves + 1));
  for (NodeId id = 0; id < dag.size(); ++id) {
    const DagNode& n = dag.node(id);
    const bool ok = n.kind == NodeKind::Root   ? n.rank == 0
                    : n.kind == NodeKind::Leaf ? n.rank == leaves
                                               : (n.rank >= 1 && n.rank < leaves);
    if (!ok) {
      fail("inconsistent ranks: node " + std::to_string(id) + " has rank " +
           std::to_string(n.rank));
      return violations;
    }
    if (n.kind == NodeKind::Tree || n.kind == NodeKind::Reticulation) {
      by_rank[static_cast<std::size_t>(n.rank)].push_back(id);
    }
  }
  for (int k = 1; k < leaves; ++k) {
    const auto& group = by_rank[static_cast<std::size_t>(k)];
    const std::string where = "inconsistent ranks: rank " + std::to_string(k) + ": ";
    if (group.size() == 1) {
      NodeId t = group[0];
      if (dag.node(t).kind != NodeKind::Tree) {
        fail(where + "lone node is not a branching tree node");
      } else if (std::any_of(dag.node(t).children.begin(), dag.node(t).children.end(),
                             [&](NodeId c) { return is_retic(dag, c); })) {
        fail(where + "branching node has a reticulation child");
      }
    } else if (group.size() == 3) {
      std::vector<NodeId> rets, trees;
      for (NodeId id : group) (is_retic(dag, id) ? rets : trees).push_back(id);
      if (rets.size() != 1) {
        fail(where + "reticulation event needs exactly one reticulation node");
        continue;
      }
      std::vector<NodeId> ps = dag.node(rets[0]).parents;
      std::sort(ps.begin(), ps.end());
      std::sort(trees.begin(), trees.end());
      if (ps != trees) fail(where + "reticulation parents must share the event's rank");
    } else {
      fail(where + "expected 1 or 3 nodes, found " + std::to_string(group.size()));
    }
  }
  if (!violations.empty()) return violations;

  for (const auto& [u, v] : dag.edges()) {
    const int ru = dag.node(u).rank, rv = dag.node(v).rank;
    const bool intra = is_retic(dag, v) && ru == rv;
    if (is_retic(dag, v) ? !intra : ru >= rv) {
      fail("inconsistent ranks: edge " + std::to_string(u) + "->" + std::to_string(v));
      return violations;
    }
  }

  // Exactly k+1 lineages cross the gap below rank k.
  for (int k = 0; k < leaves; ++k) {
    int crossing = 0;
    for (const auto& [u, v] : dag.edges()) {
      crossing += dag.node(u).rank <= k && dag.node(v).rank > k;
    }
    if (crossing != k + 1) {
      fail("inconsistent ranks: " + std::to_string(crossing) + " lineages below rank " +
           std::to_string(k));
      return violations;
    }
  }
  return violations;
}

NetworkDag code_to_dag(const EventCode& code) {
  require_valid(code);
  const int leaves = code.leaves();
  NetworkDag dag;
  // above[x-1] is the node from which lineage x (above the current event) departs.
  std::vector<NodeId> above{dag.add_node(NodeKind::Root, 0)};
  for (int k = 1; k < leaves; ++k) {
    const Event& e = code.at_rank(k);
    std::vector<NodeId> below(static_cast<std::size_t>(k + 1));
    auto from_above = [&](int x) { return above[static_cast<std::size_t>(x - 1)]; };
    if (e.is_branch()) {
      const NodeId t = dag.add_node(NodeKind::Tree, k);
      dag.add_edge(from_above(e.c1), t);
      for (int x = 1; x <= k + 1; ++x) {
        below[static_cast<std::size_t>(x - 1)] =
            (x == e.c1 || x == e.c2) ? t : from_above(x - (x > e.c2));
      }
    } else {
      const NodeId t1 = dag.add_node(NodeKind::Tree, k);
      const NodeId t2 = dag.add_node(NodeKind::Tree, k);
      const NodeId r = dag.add_node(NodeKind::Reticulation, k);
      dag.add_edge(from_above(e.c1 - (e.h < e.c1)), t1);
      dag.add_edge(from_above(e.c2 - (e.h < e.c2)), t2);
      dag.add_edge(t1, r);
      dag.add_edge(t2, r);
      for (int x = 1; x <= k + 1; ++x) {
        below[static_cast<std::size_t>(x - 1)] = x == e.c1   ? t1
                                                 : x == e.c2 ? t2
                                                 : x == e.h  ? r
                                                             : from_above(x - (x > e.h));
      }
    }
    above = std::move(below);
  }
  for (int x = 1; x <= leaves; ++x) {
    const NodeId leaf = dag.add_node(NodeKind::Leaf, leaves, x);
    dag.add_edge(above[static_cast<std::size_t>(x - 1)], leaf);
  }
  return dag;
}

EventCode dag_to_code(const NetworkDag& dag) { return label_lineages(dag).code; }

LineageLabels label_lineages(const NetworkDag& dag) {
  if (auto violations = validate_dag(dag); !violations.empty()) {
    throw InvalidInput("invalid network: " + violations.front());
  }
  const int leaves = dag.leaf_count();
  std::vector<std::vector<NodeId>> by_rank(static_cast<std::size_t>(leaves));
  for (NodeId id = 0; id < dag.size(); ++id) {
    const DagNode& n = dag.node(id);
    if (n.kind == NodeKind::Tree || n.kind == NodeKind::Reticulation) {
      by_rank[static_cast<std::size_t>(n.rank)].push_back(id);
    }
  }

  // lineage[x-1] is the node entered by lineage x in the current gap.
  std::vector<NodeId> lineage(static_cast<std::size_t>(leaves));
  for (NodeId id = 0; id < dag.size(); ++id) {
    if (dag.node(id).kind == NodeKind::Leaf) {
      lineage[static_cast<std::size_t>(dag.node(id).label - 1)] = id;
    }
  }
  auto label_of = [&](NodeId v) {
    auto it = std::find(lineage.begin(), lineage.end(), v);
    if (it == lineage.end()) throw InvalidInput("invalid network: inconsistent ranks");
    return static_cast<int>(it - lineage.begin()) + 1;
  };

  std::vector<std::vector<NodeId>> gaps(static_cast<std::size_t>(leaves));
  gaps[static_cast<std::size_t>(leaves - 1)] = lineage;
  std::vector<Event> events(static_cast<std::size_t>(leaves - 1));
  for (int k = leaves - 1; k >= 1; --k) {
    const auto& group = by_rank[static_cast<std::size_t>(k)];
    std::vector<NodeId> above(static_cast<std::size_t>(k));
    Event e;
    if (group.size() == 1) {
      const NodeId t = group[0];
      int x1 = label_of(dag.node(t).children[0]);
      int x2 = label_of(dag.node(t).children[1]);
      if (x1 > x2) std::swap(x1, x2);
      e = Event::branch(x1, x2);
      for (int x = 1; x <= k + 1; ++x) {
        if (x == x2) continue;
        above[static_cast<std::size_t>(x - (x > x2) - 1)] =
            x == x1 ? t : lineage[static_cast<std::size_t>(x - 1)];
      }
    } else {
      NodeId r = *std::find_if(group.begin(), group.end(),
                               [&](NodeId id) { return is_retic(dag, id); });
      NodeId t1 = dag.node(r).parents[0], t2 = dag.node(r).parents[1];
      int y1 = label_of(other_child(dag, t1, r));
      int y2 = label_of(other_child(dag, t2, r));
      if (y1 > y2) {
        std::swap(y1, y2);
        std::swap(t1, t2);
      }
      const int h = label_of(dag.node(r).children[0]);
      e = Event::retic(y1, y2, h);
      for (int x = 1; x <= k + 1; ++x) {
        if (x == h) continue;
        above[static_cast<std::size_t>(x - (x > h) - 1)] =
            x == y1 ? t1 : x == y2 ? t2 : lineage[static_cast<std::size_t>(x - 1)];
      }
    }
    events[static_cast<std::size_t>(leaves - k - 1)] = e;
    lineage = std::move(above);
    gaps[static_cast<std::size_t>(k - 1)] = lineage;
  }
  const NodeId root = dag.root();
  if (lineage.size() != 1 || dag.node(root).children[0] != lineage[0]) {
    throw InvalidInput("invalid network: inconsistent ranks");
  }
  EventCode code(leaves, std::move(events));
  require_valid(code);
  return {std::move(code), std::move(gaps)};
}

std::string canonical_signature(const NetworkDag& dag) {
  std::map<NodeId, std::string> memo;
  std::function<std::string(NodeId)> ident = [&](NodeId id) -> std::string {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    const DagNode& n = dag.node(id);
    std::string s;
    switch (n.kind) {
      case NodeKind::Root: s = "root"; break;
      case NodeKind::Leaf: s = "L" + std::to_string(n.label); break;
      case NodeKind::Reticulation: s = "H" + std::to_string(n.rank); break;
      case NodeKind::Tree: {
        auto rc = std::find_if(n.children.begin(), n.children.end(),
                               [&](NodeId c) { return is_retic(dag, c); });
        if (rc == n.children.end()) {
          s = "B" + std::to_string(n.rank);
        } else {
          s = "P" + std::to_string(n.rank) + "[" + ident(other_child(dag, id, *rc)) + "]";
        }
        break;
      }
    }
    memo.emplace(id, s);
    return s;
  };
  std::vector<std::string> edges;
  for (const auto& [u, v] : dag.edges()) edges.push_back(ident(u) + ">" + ident(v));
  std::sort(edges.begin(), edges.end());
  std::string out;
  for (const auto& e : edges) {
    out += e;
    out += ';';
  }
  return out;
}

}  // namespace rtcn
