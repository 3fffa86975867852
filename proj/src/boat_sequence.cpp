#include "rtcn/boat_sequence.hpp"

#include <set>

namespace rtcn {

std::vector<std::string> validate_boat(const BoatSequence& boat) {
  std::vector<std::string> violations;
  const int l = boat.people;
  if (l < 2) {
    violations.push_back("need at least 2 people");
    return violations;
  }
  if (static_cast<int>(boat.sends.size()) != l - 1 ||
      static_cast<int>(boat.returns.size()) != l - 2) {
    violations.push_back("expected " + std::to_string(l - 1) + " sends and " +
                         std::to_string(l - 2) + " returns");
    return violations;
  }
  std::set<int> near, far;
  for (int p = 1; p <= l; ++p) near.insert(p);
  for (int i = 0; i < l - 1; ++i) {
    const auto [a, b] = boat.sends[static_cast<std::size_t>(i)];
    const std::string where = "step " + std::to_string(i + 1) + ": ";
    if (a >= b || !near.count(a) || !near.count(b)) {
      violations.push_back(where + "send " + std::to_string(a) + "," + std::to_string(b) +
                           " is not a pair on the near shore");
      return violations;
    }
    near.erase(a);
    near.erase(b);
    far.insert(a);
    far.insert(b);
    if (i == l - 2) break;
    const int x = boat.returns[static_cast<std::size_t>(i)];
    if (!far.count(x)) {
      violations.push_back(where + "returner " + std::to_string(x) + " is not on the far shore");
      return violations;
    }
    far.erase(x);
    near.insert(x);
  }
  if (!near.empty()) violations.push_back("someone is left on the near shore");
  return violations;
}

std::vector<std::string> validate_rank_array(const RankArray& arr) {
  std::vector<std::string> violations;
  const int l = arr.size;
  if (l < 2) {
    violations.push_back("need size at least 2");
    return violations;
  }
  if (static_cast<int>(arr.row1.size()) != l - 1 ||
      static_cast<int>(arr.row2.size()) != l - 2) {
    violations.push_back("row lengths must be " + std::to_string(l - 1) + " and " +
                         std::to_string(l - 2));
    return violations;
  }
  for (int i = 1; i <= l - 1; ++i) {
    const auto [a, b] = arr.row1[static_cast<std::size_t>(i - 1)];
    if (!(1 <= a && a < b && b <= l - i + 1)) {
      violations.push_back("row1 entry " + std::to_string(i) + " outside {1.." +
                           std::to_string(l - i + 1) + "}");
    }
  }
  for (int i = 1; i <= l - 2; ++i) {
    const int s = arr.row2[static_cast<std::size_t>(i - 1)];
    if (s < 1 || s > i + 1) {
      violations.push_back("row2 entry " + std::to_string(i) + " outside {1.." +
                           std::to_string(i + 1) + "}");
    }
  }
  return violations;
}

BoatSequence trivial_boat() { return BoatSequence{2, {{1, 2}}, {}}; }

}  // namespace rtcn
