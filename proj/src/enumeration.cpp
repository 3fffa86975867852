#include "rtcn/enumeration.hpp"

#include <algorithm>

#include "rtcn/network_dag.hpp"

namespace rtcn {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

void require_leaves(int leaves) {
  if (leaves < 2) throw InvalidInput("need at least 2 leaves, got " + std::to_string(leaves));
}

// {1..n} minus `excluded`, ascending.
std::vector<int> complement(int n, std::initializer_list<int> excluded) {
  std::vector<int> out;
  for (int x = 1; x <= n; ++x) {
    if (std::find(excluded.begin(), excluded.end(), x) == excluded.end()) out.push_back(x);
  }
  return out;
}

// Relabels the listed leaves, in increasing label order, onto `targets`.
void relabel_in_order(NetworkDag& dag, std::vector<NodeId> leaves, const std::vector<int>& targets,
                      int rank) {
  std::sort(leaves.begin(), leaves.end(),
            [&](NodeId a, NodeId b) { return dag.node(a).label < dag.node(b).label; });
  for (std::size_t j = 0; j < leaves.size(); ++j) {
    dag.node(leaves[j]).label = targets[j];
    dag.node(leaves[j]).rank = rank;
  }
}

std::vector<NodeId> leaves_except(const NetworkDag& dag, std::initializer_list<NodeId> skip) {
  std::vector<NodeId> out;
  for (NodeId id = 0; id < dag.size(); ++id) {
    if (dag.node(id).kind == NodeKind::Leaf &&
        std::find(skip.begin(), skip.end(), id) == skip.end()) {
      out.push_back(id);
    }
  }
  return out;
}

void remove_nodes(NetworkDag& dag, std::vector<NodeId> ids) {
  std::sort(ids.rbegin(), ids.rend());
  for (NodeId id : ids) dag.remove_node(id);
}

}  // namespace

BigInt rtc_count(int leaves) {
  require_leaves(leaves);
  const BigInt f = factorial(leaves - 1);
  return factorial(leaves) * f * f / (BigInt(1) << (leaves - 1));
}

BigInt rt_count(int leaves) {
  require_leaves(leaves);
  return factorial(leaves) * factorial(leaves - 1) / (BigInt(1) << (leaves - 1));
}

BigInt stirling1(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidInput("stirling1 needs 0 <= k <= n, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
  }
  // row[j] = [m, j] for the current m.
  std::vector<BigInt> row(static_cast<std::size_t>(n + 1), 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = m; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + (m - 1) * row[static_cast<std::size_t>(j)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt rtc_count_by_branching(int leaves, int branching) {
  require_leaves(leaves);
  if (branching < 1 || branching > leaves - 1) {
    throw InvalidInput("branching count must lie in 1.." + std::to_string(leaves - 1));
  }
  return stirling1(leaves - 1, branching) * rt_count(leaves);
}

BigInt containing_count(int leaves) {
  require_leaves(leaves);
  BigInt out = 1;
  for (int j = 3; j <= 2 * leaves - 3; j += 2) out *= j;
  return out;
}

bool op_in_domain(const GrowthOp& op, int leaves) {
  const int n = leaves + 1;
  if (!(1 <= op.a && op.a < op.b && op.b <= n)) return false;
  if (op.kind == GrowthOp::Kind::OI) return true;
  return 1 <= op.c && op.c <= n && op.c != op.a && op.c != op.b;
}

std::vector<GrowthOp> growth_ops(int leaves) {
  require_leaves(leaves);
  const int n = leaves + 1;
  std::vector<GrowthOp> ops;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) ops.push_back(GrowthOp::oi(a, b));
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        if (c != a && c != b) ops.push_back(GrowthOp::oii(a, b, c));
      }
    }
  }
  return ops;
}

EventCode apply_growth(const EventCode& code, const GrowthOp& op) {
  const int l = code.leaves();
  if (!op_in_domain(op, l)) throw InvalidInput("growth op out of domain for this leaf count");
  NetworkDag dag = code_to_dag(code);
  if (op.kind == GrowthOp::Kind::OI) {
    const NodeId grown = dag.leaf(l);
    relabel_in_order(dag, leaves_except(dag, {grown}), complement(l + 1, {op.a, op.b}), l + 1);
    dag.node(grown) = DagNode{NodeKind::Tree, l, 0, dag.node(grown).parents, {}};
    dag.add_edge(grown, dag.add_node(NodeKind::Leaf, l + 1, op.a));
    dag.add_edge(grown, dag.add_node(NodeKind::Leaf, l + 1, op.b));
  } else {
    const int a_rank = op.a - (op.c < op.a);
    const int b_rank = op.b - (op.c < op.b);
    const NodeId na = dag.leaf(a_rank);
    const NodeId nb = dag.leaf(b_rank);
    relabel_in_order(dag, leaves_except(dag, {na, nb}), complement(l + 1, {op.a, op.b, op.c}),
                     l + 1);
    dag.node(na) = DagNode{NodeKind::Tree, l, 0, dag.node(na).parents, {}};
    dag.node(nb) = DagNode{NodeKind::Tree, l, 0, dag.node(nb).parents, {}};
    const NodeId r = dag.add_node(NodeKind::Reticulation, l);
    dag.add_edge(na, dag.add_node(NodeKind::Leaf, l + 1, op.a));
    dag.add_edge(na, r);
    dag.add_edge(nb, dag.add_node(NodeKind::Leaf, l + 1, op.b));
    dag.add_edge(nb, r);
    dag.add_edge(r, dag.add_node(NodeKind::Leaf, l + 1, op.c));
  }
  return dag_to_code(dag);
}

std::pair<EventCode, GrowthOp> strip_bottom(const EventCode& code) {
  require_valid(code);
  const int l = code.leaves() - 1;  // leaf count after stripping
  if (l < 2) throw InvalidInput("strip_bottom needs at least 3 leaves");
  const Event& bottom = code.event(1);
  NetworkDag dag = code_to_dag(code);
  const NodeId leaf_a = dag.leaf(bottom.c1);
  const NodeId leaf_b = dag.leaf(bottom.c2);
  const NodeId pa = dag.node(leaf_a).parents[0];
  const NodeId pb = dag.node(leaf_b).parents[0];
  if (bottom.is_branch()) {
    const GrowthOp op = GrowthOp::oi(bottom.c1, bottom.c2);
    relabel_in_order(dag, leaves_except(dag, {leaf_a, leaf_b}), complement(l, {l}), l);
    dag.node(pa).kind = NodeKind::Leaf;
    dag.node(pa).rank = l;
    dag.node(pa).label = l;
    remove_nodes(dag, {leaf_a, leaf_b});
    return {dag_to_code(dag), op};
  }
  const GrowthOp op = GrowthOp::oii(bottom.c1, bottom.c2, bottom.h);
  const NodeId leaf_c = dag.leaf(bottom.h);
  const NodeId r = dag.node(leaf_c).parents[0];
  const int a_rank = op.a - (op.c < op.a);
  const int b_rank = op.b - (op.c < op.b);
  relabel_in_order(dag, leaves_except(dag, {leaf_a, leaf_b, leaf_c}),
                   complement(l, {a_rank, b_rank}), l);
  for (auto [p, label] : {std::pair{pa, a_rank}, std::pair{pb, b_rank}}) {
    dag.node(p).kind = NodeKind::Leaf;
    dag.node(p).rank = l;
    dag.node(p).label = label;
  }
  remove_nodes(dag, {leaf_a, leaf_b, leaf_c, r});
  return {dag_to_code(dag), op};
}

std::uint64_t level_option_count(int width, bool trees_only) {
  const auto w = static_cast<std::uint64_t>(width);
  const std::uint64_t pairs = w * (w - 1) / 2;
  if (trees_only || width < 3) return pairs;
  return pairs * (w - 1);
}

Event level_option(int width, std::uint64_t index) {
  const auto w = static_cast<std::uint64_t>(width);
  const std::uint64_t pairs = w * (w - 1) / 2;
  auto nth_pair = [&](std::uint64_t j) {
    int c1 = 1;
    while (j >= static_cast<std::uint64_t>(width - c1)) {
      j -= static_cast<std::uint64_t>(width - c1);
      ++c1;
    }
    return std::pair<int, int>{c1, c1 + 1 + static_cast<int>(j)};
  };
  if (index < pairs) {
    auto [c1, c2] = nth_pair(index);
    return Event::branch(c1, c2);
  }
  index -= pairs;
  if (width < 3 || index >= pairs * (w - 2)) throw InvalidInput("level option index out of range");
  auto [c1, c2] = nth_pair(index / (w - 2));
  int h = static_cast<int>(index % (w - 2)) + 1;
  if (h >= c1) ++h;
  if (h >= c2) ++h;
  return Event::retic(c1, c2, h);
}

CodeEnumerator::CodeEnumerator(int leaves, bool trees_only) : leaves_(leaves) {
  require_leaves(leaves);
  for (int i = 1; i < leaves; ++i) {
    const int width = leaves - i + 1;
    std::vector<Event> opts;
    const auto count = level_option_count(width, trees_only);
    opts.reserve(count);
    for (std::uint64_t j = 0; j < count; ++j) opts.push_back(level_option(width, j));
    options_.push_back(std::move(opts));
  }
  digits_.assign(options_.size(), 0);
}

std::optional<EventCode> CodeEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Event> events;
  events.reserve(digits_.size());
  for (std::size_t i = 0; i < digits_.size(); ++i) events.push_back(options_[i][digits_[i]]);
  done_ = true;
  for (std::size_t pos = digits_.size(); pos-- > 0;) {
    if (++digits_[pos] < options_[pos].size()) {
      done_ = false;
      break;
    }
    digits_[pos] = 0;
  }
  return EventCode(leaves_, std::move(events));
}

EventCode sample_uniform(int leaves, std::mt19937_64& rng) {
  require_leaves(leaves);
  std::vector<Event> events;
  events.reserve(static_cast<std::size_t>(leaves - 1));
  for (int i = 1; i < leaves; ++i) {
    const int width = leaves - i + 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, level_option_count(width) - 1);
    events.push_back(level_option(width, pick(rng)));
  }
  return EventCode(leaves, std::move(events));
}

EventCode sample_uniform(int leaves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_uniform(leaves, rng);
}

}  // namespace rtcn
