#include "rtcn/treeperm.hpp"

#include <algorithm>

#include "rtcn/network_dag.hpp"

namespace rtcn {

namespace {

NodeId gap_node(const LineageLabels& labels, int rank, int label) {
  return labels.gaps[static_cast<std::size_t>(rank)][static_cast<std::size_t>(label - 1)];
}

NodeId parent_of(const NetworkDag& dag, NodeId v) { return dag.node(v).parents.at(0); }

}  // namespace

std::pair<EventCode, ReplacementStep> replace_retic(const EventCode& code, int i) {
  require_valid(code);
  const int l = code.leaves();
  if (i < 1 || i >= l) throw InvalidInput("event index out of range");
  const Event& e = code.event(i);
  if (!e.is_retic()) throw InvalidInput("replace_retic: event " + std::to_string(i) + " is not a reticulation");

  ReplacementStep step;
  step.a = i;
  step.L1 = e.c1;
  step.L2 = e.c2;
  step.L3 = e.h;
  step.l1 = e.c1 - (e.h < e.c1);
  step.l2 = e.c2 - (e.h < e.c2);
  step.l1_after = e.c1;
  step.l2_after = e.h - (e.c2 < e.h);
  step.b = step.l2_after < step.l1_after ? step.l2_after : step.l2_after - 1;

  NetworkDag dag = code_to_dag(code);
  const LineageLabels labels = label_lineages(dag);
  const int k = l - i;
  const NodeId w1 = gap_node(labels, k, e.c1);
  const NodeId w2 = gap_node(labels, k, e.c2);
  const NodeId wh = gap_node(labels, k, e.h);
  const NodeId t1 = parent_of(dag, w1);
  const NodeId t2 = parent_of(dag, w2);
  const NodeId r = parent_of(dag, wh);
  const NodeId p2 = parent_of(dag, t2);
  // t1 becomes the branching event; the right parent's past flows into the
  // former hybrid lineage.
  dag.remove_edge(t2, w2);
  dag.add_edge(t1, w2);
  dag.remove_edge(r, wh);
  dag.add_edge(p2, wh);
  for (NodeId id : {std::max(t2, r), std::min(t2, r)}) dag.remove_node(id);
  return {dag_to_code(dag), step};
}

EventCode insert_retic(const EventCode& code, int a, int b) {
  require_valid(code);
  const int l = code.leaves();
  if (a < 1 || a >= l) throw InvalidInput("event index out of range");
  const Event& e = code.event(a);
  if (!e.is_branch()) throw InvalidInput("insert_retic: event " + std::to_string(a) + " is not a branching event");
  if (b < 1 || b > l - 1 - a) {
    throw InvalidInput("insert_retic: need 1 <= b <= " + std::to_string(l - 1 - a));
  }
  const int parent_label = e.c1;
  const int j = b + (b >= parent_label ? 1 : 0);

  NetworkDag dag = code_to_dag(code);
  const LineageLabels labels = label_lineages(dag);
  const int k = l - a;
  const NodeId u2 = gap_node(labels, k, e.c2);
  const NodeId t = parent_of(dag, u2);
  const NodeId q = gap_node(labels, k - 1, j);  // lineage j just above the event
  const NodeId p = parent_of(dag, q);
  dag.remove_edge(t, u2);
  dag.remove_edge(p, q);
  const NodeId t2 = dag.add_node(NodeKind::Tree, k);
  const NodeId r = dag.add_node(NodeKind::Reticulation, k);
  dag.add_edge(p, t2);
  dag.add_edge(t2, u2);
  dag.add_edge(t2, r);
  dag.add_edge(t, r);
  dag.add_edge(r, q);
  return dag_to_code(dag);
}

TreePerm rtcn_to_treeperm(const EventCode& code, std::vector<ReplacementStep>& steps) {
  require_valid(code);
  const int n = code.leaves() - 1;
  steps.clear();
  TranspositionSeq seq{n, {}};
  EventCode current = code;
  for (int a : profile(code).retic_positions) {
    auto [next, step] = replace_retic(current, a);
    seq.pairs.emplace_back(a, a + step.b);
    steps.push_back(step);
    current = std::move(next);
  }
  return TreePerm{std::move(current), transpositions_to_perm(seq)};
}

TreePerm rtcn_to_treeperm(const EventCode& code) {
  std::vector<ReplacementStep> steps;
  return rtcn_to_treeperm(code, steps);
}

EventCode treeperm_to_rtcn(const EventCode& tree, const Permutation& sigma) {
  require_valid(tree);
  if (!tree.is_ranked_tree()) throw InvalidInput("treeperm_to_rtcn: first argument must be a ranked tree");
  if (sigma.size() != tree.leaves() - 1) {
    throw InvalidInput("treeperm_to_rtcn: permutation must act on 1.." +
                       std::to_string(tree.leaves() - 1));
  }
  const TranspositionSeq seq = perm_to_transpositions(sigma);
  EventCode code = tree;
  for (auto it = seq.pairs.rbegin(); it != seq.pairs.rend(); ++it) {
    code = insert_retic(code, it->first, it->second - it->first);
  }
  return code;
}

Permutation transpositions_to_perm(const TranspositionSeq& seq) {
  if (auto v = validate_transpositions(seq); !v.empty()) {
    throw InvalidInput("invalid transposition sequence: " + v.front());
  }
  std::vector<int> image(static_cast<std::size_t>(seq.n));
  for (int x = 1; x <= seq.n; ++x) {
    int v = x;
    for (const auto& [p, q] : seq.pairs) v = v == p ? q : v == q ? p : v;
    image[static_cast<std::size_t>(x - 1)] = v;
  }
  return Permutation(std::move(image));
}

TranspositionSeq perm_to_transpositions(const Permutation& sigma) {
  const int n = sigma.size();
  TranspositionSeq seq{n, {}};
  // rest = (x, y) . rest' means rest(z) = rest'((x y) z): peel the smallest
  // moved point off the front by swapping image entries x and y.
  std::vector<int> rest = sigma.image();
  for (int x = 1; x <= n; ++x) {
    if (rest[static_cast<std::size_t>(x - 1)] == x) continue;
    const int y = static_cast<int>(std::find(rest.begin(), rest.end(), x) - rest.begin()) + 1;
    seq.pairs.emplace_back(x, y);
    std::swap(rest[static_cast<std::size_t>(x - 1)], rest[static_cast<std::size_t>(y - 1)]);
  }
  return seq;
}

int cycle_count(const Permutation& sigma) {
  std::vector<bool> seen(static_cast<std::size_t>(sigma.size() + 1), false);
  int cycles = 0;
  for (int x = 1; x <= sigma.size(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    ++cycles;
    for (int v = x; !seen[static_cast<std::size_t>(v)]; v = sigma(v)) seen[static_cast<std::size_t>(v)] = true;
  }
  return cycles;
}

std::string format_cycles(const Permutation& sigma) {
  std::vector<bool> seen(static_cast<std::size_t>(sigma.size() + 1), false);
  std::string out;
  for (int x = 1; x <= sigma.size(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    out += '(';
    for (int v = x; !seen[static_cast<std::size_t>(v)]; v = sigma(v)) {
      if (v != x) out += ',';
      out += std::to_string(v);
      seen[static_cast<std::size_t>(v)] = true;
    }
    out += ')';
  }
  return out;
}

}  // namespace rtcn
