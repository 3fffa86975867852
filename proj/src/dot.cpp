#include "rtcn/dot.hpp"

#include <map>
#include <variant>
#include <vector>

#include "rtcn/boat.hpp"
#include "rtcn/treeperm.hpp"

namespace rtcn {

std::string export_dot(const EventCode& code) {
  const NetworkDag dag = code_to_dag(code);
  // code_to_dag creates the nodes of a reticulation event as (tree, tree,
  // reticulation), in that order.
  std::vector<std::string> name(static_cast<std::size_t>(dag.size()));
  std::map<int, std::vector<NodeId>> by_rank;
  for (NodeId v = 0; v < dag.size(); ++v) {
    const DagNode& n = dag.node(v);
    std::string& s = name[static_cast<std::size_t>(v)];
    switch (n.kind) {
      case NodeKind::Root: s = "root"; break;
      case NodeKind::Leaf: s = "L" + std::to_string(n.label); break;
      case NodeKind::Reticulation: s = "h" + std::to_string(n.rank); break;
      case NodeKind::Tree: {
        s = "t" + std::to_string(n.rank);
        if (code.at_rank(n.rank).is_retic()) s += by_rank[n.rank].empty() ? "a" : "b";
        break;
      }
    }
    if (n.kind != NodeKind::Root) by_rank[n.rank].push_back(v);
  }

  std::string out = "digraph rtcn {\n  node [shape=circle, label=\"\", width=0.15];\n";
  out += "  root [shape=point];\n";
  for (NodeId v = 0; v < dag.size(); ++v) {
    const DagNode& n = dag.node(v);
    const std::string& s = name[static_cast<std::size_t>(v)];
    if (n.kind == NodeKind::Leaf) {
      out += "  " + s + " [shape=plaintext, label=\"" + std::to_string(n.label) + "\"];\n";
    } else if (n.kind == NodeKind::Reticulation) {
      out += "  " + s + " [shape=box, style=filled, fillcolor=gray70];\n";
    }
  }
  for (const auto& [rank, nodes] : by_rank) {
    out += "  { rank=same;";
    for (NodeId v : nodes) out += " " + name[static_cast<std::size_t>(v)] + ";";
    out += " }\n";
  }
  for (const auto& [from, to] : dag.edges()) {
    out += "  " + name[static_cast<std::size_t>(from)] + " -> " + name[static_cast<std::size_t>(to)] + ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_dot(const NetworkDag& dag) { return export_dot(dag_to_code(dag)); }

std::string export_dot(const PhyloTree& tree) {
  std::string out = "digraph phylo {\n  node [shape=circle, label=\"\", width=0.15];\n";
  const int l = tree.leaves();
  auto name = [&](int v) { return tree.is_leaf(v) ? "L" + std::to_string(v + 1) : "v" + std::to_string(v); };
  for (int v = 0; v < l; ++v) out += "  " + name(v) + " [shape=plaintext, label=\"" + std::to_string(v + 1) + "\"];\n";
  for (int v = l; v < 2 * l - 1; ++v) {
    const auto [a, b] = tree.children(v);
    out += "  " + name(v) + " -> " + name(a) + ";\n";
    out += "  " + name(v) + " -> " + name(b) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_dot(const LabeledHistoryTree& tau) {
  const int l = tau.leaves();
  auto name = [&](int v) {
    if (v == tau.root()) return std::string("root");
    return tau.is_leaf(v) ? "L" + std::to_string(v + 1) : "k" + std::to_string(v - l + 1);
  };
  std::string out = "digraph history {\n  node [shape=plaintext];\n  root [shape=point];\n";
  for (int v = 0; v < tau.root(); ++v) {
    const std::string label =
        tau.is_leaf(v) ? "\"" + std::to_string(v + 1) + "\"" : "<<O>" + std::to_string(v - l + 1) + "</O>>";
    out += "  " + name(v) + " [label=" + label + "];\n";
  }
  for (int v = 0; v < tau.root(); ++v) out += "  " + name(tau.parent(v)) + " -> " + name(v) + ";\n";
  out += "}\n";
  return out;
}

std::string export_dot(const TextObject& object) {
  struct Render {
    std::string operator()(const EventCode& c) const { return export_dot(c); }
    std::string operator()(const BoatSequence& b) const { return export_dot(boat_to_rtcn(b)); }
    std::string operator()(const PhyloTree& t) const { return export_dot(t); }
    std::string operator()(const DecisionVector& d) const { return export_dot(history_tree(d)); }
    std::string operator()(const TreePerm& tp) const { return export_dot(treeperm_to_rtcn(tp.tree, tp.sigma)); }
    std::string operator()(const Permutation& p) const {
      std::string out = "digraph perm {\n  node [shape=circle];\n";
      for (int x = 1; x <= p.size(); ++x) out += "  " + std::to_string(x) + " -> " + std::to_string(p(x)) + ";\n";
      out += "}\n";
      return out;
    }
  };
  return std::visit(Render{}, object);
}

}  // namespace rtcn
