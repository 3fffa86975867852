#include "rtcn/boat.hpp"

#include <algorithm>

namespace rtcn {

namespace {

// 1-based position of x in the sorted vector.
int rank_in(const std::vector<int>& shore, int x) {
  auto it = std::lower_bound(shore.begin(), shore.end(), x);
  return static_cast<int>(it - shore.begin()) + 1;
}

void insert_sorted(std::vector<int>& shore, int x) {
  shore.insert(std::lower_bound(shore.begin(), shore.end(), x), x);
}

void erase_sorted(std::vector<int>& shore, int x) {
  shore.erase(std::lower_bound(shore.begin(), shore.end(), x));
}

std::vector<int> everyone(int people) {
  std::vector<int> v(static_cast<std::size_t>(people));
  for (int p = 1; p <= people; ++p) v[static_cast<std::size_t>(p - 1)] = p;
  return v;
}

void require_valid_boat(const BoatSequence& boat) {
  auto v = validate_boat(boat);
  if (!v.empty()) throw InvalidInput("invalid boat sequence: " + v.front());
}

void require_valid_ranks(const RankArray& arr) {
  auto v = validate_rank_array(arr);
  if (!v.empty()) throw InvalidInput("invalid rank array: " + v.front());
}

RankArray base_ranks() { return RankArray{2, {{1, 2}}, {}}; }

}  // namespace

RankArray rank_map(const BoatSequence& boat) {
  require_valid_boat(boat);
  const int l = boat.people;
  RankArray arr{l, {}, {}};
  std::vector<int> near = everyone(l), far;
  for (int i = 0; i < l - 1; ++i) {
    const auto [a, b] = boat.sends[static_cast<std::size_t>(i)];
    arr.row1.emplace_back(rank_in(near, a), rank_in(near, b));
    erase_sorted(near, a);
    erase_sorted(near, b);
    insert_sorted(far, a);
    insert_sorted(far, b);
    if (i == l - 2) break;
    const int x = boat.returns[static_cast<std::size_t>(i)];
    arr.row2.push_back(rank_in(far, x));
    erase_sorted(far, x);
    insert_sorted(near, x);
  }
  return arr;
}

BoatSequence rank_unmap(const RankArray& arr) {
  require_valid_ranks(arr);
  const int l = arr.size;
  BoatSequence boat{l, {}, {}};
  std::vector<int> near = everyone(l), far;
  for (int i = 0; i < l - 1; ++i) {
    const auto [ra, rb] = arr.row1[static_cast<std::size_t>(i)];
    const int a = near[static_cast<std::size_t>(ra - 1)];
    const int b = near[static_cast<std::size_t>(rb - 1)];
    boat.sends.emplace_back(a, b);
    erase_sorted(near, a);
    erase_sorted(near, b);
    insert_sorted(far, a);
    insert_sorted(far, b);
    if (i == l - 2) break;
    const int x = far[static_cast<std::size_t>(arr.row2[static_cast<std::size_t>(i)] - 1)];
    boat.returns.push_back(x);
    erase_sorted(far, x);
    insert_sorted(near, x);
  }
  return boat;
}

RankArray extend_ranks(const RankArray& arr, const GrowthOp& op) {
  require_valid_ranks(arr);
  const int l = arr.size;
  if (!op_in_domain(op, l)) throw InvalidInput("growth op out of domain for this size");
  RankArray out{l + 1, {}, arr.row2};
  out.row1.reserve(arr.row1.size() + 1);
  out.row1.emplace_back(op.a, op.b);
  out.row1.insert(out.row1.end(), arr.row1.begin(), arr.row1.end());
  if (op.kind == GrowthOp::Kind::OI) {
    out.row2.push_back(l);
  } else {
    out.row2.push_back(op.c - (op.a < op.c) - (op.b < op.c));
  }
  return out;
}

std::pair<RankArray, GrowthOp> reduce_ranks(const RankArray& arr) {
  require_valid_ranks(arr);
  const int l = arr.size - 1;
  if (l < 2) throw InvalidInput("reduce_ranks needs size at least 3");
  const auto [a, b] = arr.row1.front();
  const int t = arr.row2.back();
  RankArray out{l, {arr.row1.begin() + 1, arr.row1.end()}, {arr.row2.begin(), arr.row2.end() - 1}};
  if (t == l) return {out, GrowthOp::oi(a, b)};
  // t-th element of {1..l+1} \ {a, b}
  int c = t;
  if (c >= a) ++c;
  if (c >= b) ++c;
  return {out, GrowthOp::oii(a, b, c)};
}

BoatSequence rtcn_to_boat(const EventCode& code) {
  require_valid(code);
  std::vector<GrowthOp> ops;
  EventCode current = code;
  while (current.leaves() > 2) {
    auto [smaller, op] = strip_bottom(current);
    ops.push_back(op);
    current = std::move(smaller);
  }
  RankArray arr = base_ranks();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) arr = extend_ranks(arr, *it);
  return rank_unmap(arr);
}

EventCode boat_to_rtcn(const BoatSequence& boat) {
  RankArray arr = rank_map(boat);
  std::vector<GrowthOp> ops;
  while (arr.size > 2) {
    auto [smaller, op] = reduce_ranks(arr);
    ops.push_back(op);
    arr = std::move(smaller);
  }
  EventCode code = cherry();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) code = apply_growth(code, *it);
  return code;
}

int max_rank_return_count(const BoatSequence& boat) {
  const RankArray arr = rank_map(boat);
  int count = 0;
  for (std::size_t i = 0; i < arr.row2.size(); ++i) {
    count += arr.row2[i] == static_cast<int>(i) + 2;
  }
  return count;
}

BoatEnumerator::BoatEnumerator(int people) {
  if (people < 2) throw InvalidInput("need at least 2 people");
  current_ = RankArray{people, std::vector<PersonPair>(static_cast<std::size_t>(people - 1), {1, 2}),
                       std::vector<int>(static_cast<std::size_t>(people - 2), 1)};
}

std::optional<BoatSequence> BoatEnumerator::next() {
  if (done_) return std::nullopt;
  BoatSequence out = rank_unmap(current_);
  const int l = current_.size;
  // Odometer: row1 then row2, last position fastest.
  for (int i = l - 2; i >= 1; --i) {
    int& s = current_.row2[static_cast<std::size_t>(i - 1)];
    if (++s <= i + 1) return out;
    s = 1;
  }
  for (int i = l - 1; i >= 1; --i) {
    auto& [a, b] = current_.row1[static_cast<std::size_t>(i - 1)];
    const int width = l - i + 1;
    if (++b <= width) return out;
    if (++a < width) {
      b = a + 1;
      return out;
    }
    a = 1;
    b = 2;
  }
  done_ = true;
  return out;
}

}  // namespace rtcn
