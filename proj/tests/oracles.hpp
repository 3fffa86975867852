#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's counting or bijection code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "rtcn/boat_sequence.hpp"
#include "rtcn/enumeration.hpp"
#include "rtcn/phylo_tree.hpp"

namespace oracle {

inline rtcn::BigInt factorial(int n) {
  rtcn::BigInt f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

// l! (l-1)!^2 / 2^(l-1)
inline rtcn::BigInt network_count(int l) {
  rtcn::BigInt num = factorial(l) * factorial(l - 1) * factorial(l - 1);
  return num >> (l - 1);
}

// l! (l-1)! / 2^(l-1)
inline rtcn::BigInt ranked_tree_count(int l) { return (factorial(l) * factorial(l - 1)) >> (l - 1); }

inline rtcn::BigInt odd_double_factorial(int l) {
  rtcn::BigInt p = 1;
  for (int j = 1; j <= 2 * l - 3; j += 2) p *= j;
  return p;
}

inline int cycles(const std::vector<int>& image) {
  std::vector<bool> seen(image.size(), false);
  int c = 0;
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (seen[x]) continue;
    ++c;
    for (std::size_t v = x; !seen[v]; v = static_cast<std::size_t>(image[v] - 1)) seen[v] = true;
  }
  return c;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Stirling numbers of the first kind by counting cycles of every permutation.
inline std::vector<std::int64_t> cycle_census(int n) {
  std::vector<std::int64_t> count(static_cast<std::size_t>(n + 1), 0);
  for (const auto& p : permutations(n)) ++count[static_cast<std::size_t>(cycles(p))];
  return count;
}

// All boat schedules for `people`, by simulating every legal move.
inline std::vector<rtcn::BoatSequence> boat_schedules(int people) {
  std::vector<rtcn::BoatSequence> out;
  rtcn::BoatSequence cur{people, {}, {}};
  std::set<int> near;
  for (int p = 1; p <= people; ++p) near.insert(p);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.sends.size()) == people - 1) {
      out.push_back(cur);
      return;
    }
    const std::vector<int> here(near.begin(), near.end());
    for (std::size_t i = 0; i < here.size(); ++i) {
      for (std::size_t j = i + 1; j < here.size(); ++j) {
        near.erase(here[i]);
        near.erase(here[j]);
        cur.sends.emplace_back(here[i], here[j]);
        if (static_cast<int>(cur.sends.size()) == people - 1) {
          self(self);
        } else {
          for (int x = 1; x <= people; ++x) {
            if (near.count(x)) continue;
            near.insert(x);
            cur.returns.push_back(x);
            self(self);
            cur.returns.pop_back();
            near.erase(x);
          }
        }
        cur.sends.pop_back();
        near.insert(here[i]);
        near.insert(here[j]);
      }
    }
  };
  rec(rec);
  return out;
}

// Rooted binary trees as nested leaf sets: every tree on l leaves, built by
// attaching leaf m above each existing node. Represented as parent arrays
// (leaf x at id x-1, internal nodes from id l).
inline std::vector<std::vector<int>> phylo_parent_arrays(int l) {
  std::vector<std::vector<int>> trees{std::vector<int>(static_cast<std::size_t>(2 * l - 1), -1)};
  for (int m = 2; m <= l; ++m) {
    const int fresh = l + m - 2;
    std::vector<std::vector<int>> next;
    for (const auto& t : trees) {
      std::vector<int> present;
      for (int v = 0; v < m - 1; ++v) present.push_back(v);
      for (int v = l; v < fresh; ++v) present.push_back(v);
      for (int v : present) {
        auto g = t;
        g[static_cast<std::size_t>(fresh)] = t[static_cast<std::size_t>(v)];
        g[static_cast<std::size_t>(v)] = fresh;
        g[static_cast<std::size_t>(m - 1)] = fresh;
        next.push_back(std::move(g));
      }
    }
    trees = std::move(next);
  }
  return trees;
}

// The clusters (leaf sets below each internal node) of a parent array,
// sorted; two arrays describe the same phylogenetic tree iff these agree.
inline std::set<std::set<int>> clusters(const std::vector<int>& parent, int l) {
  std::vector<std::set<int>> below(parent.size());
  for (int x = 0; x < l; ++x) {
    for (int v = x; v >= 0; v = parent[static_cast<std::size_t>(v)]) below[static_cast<std::size_t>(v)].insert(x + 1);
  }
  std::set<std::set<int>> out;
  for (std::size_t v = static_cast<std::size_t>(l); v < parent.size(); ++v) out.insert(below[v]);
  return out;
}

inline std::set<std::set<int>> clusters(const rtcn::PhyloTree& t) {
  std::vector<int> parent;
  for (int v = 0; v < 2 * t.leaves() - 1; ++v) parent.push_back(t.parent(v));
  return clusters(parent, t.leaves());
}

}  // namespace oracle
