#include "rtcn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "rtcn/boat.hpp"
#include "rtcn/codec.hpp"
#include "rtcn/containment.hpp"
#include "rtcn/enumeration.hpp"
#include "rtcn/stats.hpp"
#include "rtcn/treeperm.hpp"

namespace rtcn {

namespace {

struct Failure {
  std::string summary;
  std::vector<std::string> lines;
};

[[noreturn]] void fail(std::string summary, std::vector<std::string> lines = {}) {
  throw Failure{std::move(summary), std::move(lines)};
}

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.summary = body();
  } catch (const Failure& f) {
    r.pass = false;
    r.summary = f.summary;
    r.counterexample = f.lines;
  } catch (const std::exception& e) {
    r.pass = false;
    r.summary = std::string("unexpected error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<EventCode> all_codes(int leaves, bool trees_only) {
  std::vector<EventCode> out;
  CodeEnumerator en(leaves, trees_only);
  while (auto c = en.next()) out.push_back(std::move(*c));
  return out;
}

std::string str(const BigInt& v) { return v.str(); }

// Every schedule by direct simulation, in lexicographic order.
std::vector<BoatSequence> all_boats(int people) {
  std::vector<BoatSequence> out;
  BoatSequence cur{people, {}, {}};
  std::vector<bool> near(static_cast<std::size_t>(people + 1), true);
  near[0] = false;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.sends.size()) == people - 1) {
      out.push_back(cur);
      return;
    }
    for (int a = 1; a <= people; ++a) {
      for (int b = a + 1; b <= people; ++b) {
        if (!near[static_cast<std::size_t>(a)] || !near[static_cast<std::size_t>(b)]) continue;
        near[static_cast<std::size_t>(a)] = near[static_cast<std::size_t>(b)] = false;
        cur.sends.emplace_back(a, b);
        if (static_cast<int>(cur.sends.size()) == people - 1) {
          self(self);
        } else {
          for (int x = 1; x <= people; ++x) {
            if (near[static_cast<std::size_t>(x)]) continue;
            near[static_cast<std::size_t>(x)] = true;
            cur.returns.push_back(x);
            self(self);
            cur.returns.pop_back();
            near[static_cast<std::size_t>(x)] = false;
          }
        }
        cur.sends.pop_back();
        near[static_cast<std::size_t>(a)] = near[static_cast<std::size_t>(b)] = true;
      }
    }
  };
  rec(rec);
  return out;
}

// Phylogenetic trees by inserting leaf m on each of the 2m-3 edges of every
// tree on m-1 leaves (the root edge included).
std::vector<PhyloTree> all_phylo_trees(int leaves) {
  // Parent arrays with leaf m at id m-1 and the j-th internal node at id
  // leaves+j-1; ids not yet in use hold -1.
  std::vector<std::vector<int>> trees{std::vector<int>(static_cast<std::size_t>(2 * leaves - 1), -1)};
  for (int m = 2; m <= leaves; ++m) {
    const int internal = leaves + m - 2;
    std::vector<std::vector<int>> grown;
    for (const auto& t : trees) {
      auto graft = [&](int v) {
        std::vector<int> g = t;
        g[static_cast<std::size_t>(internal)] = t[static_cast<std::size_t>(v)];
        g[static_cast<std::size_t>(v)] = internal;
        g[static_cast<std::size_t>(m - 1)] = internal;
        grown.push_back(std::move(g));
      };
      for (int v = 0; v <= m - 2; ++v) graft(v);
      for (int v = leaves; v < internal; ++v) graft(v);
    }
    trees = std::move(grown);
  }
  std::vector<PhyloTree> out;
  for (const auto& t : trees) out.push_back(PhyloTree::from_parents(leaves, t));
  return out;
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::string check_counts(int max_leaves) {
  for (int l = 2; l <= max_leaves; ++l) {
    std::map<int, BigInt> by_branching;
    BigInt total = 0;
    for (const auto& c : all_codes(l, false)) {
      ++total;
      ++by_branching[profile(c).branching_count];
    }
    if (total != rtc_count(l)) {
      fail("leaves " + std::to_string(l) + ": enumerated " + str(total) + ", formula gives " + str(rtc_count(l)));
    }
    const BigInt trees = static_cast<long>(all_codes(l, true).size());
    if (trees != rt_count(l)) fail("leaves " + std::to_string(l) + ": ranked tree count mismatch");
    for (int b = 1; b <= l - 1; ++b) {
      const BigInt expected = stirling1(l - 1, b) * rt_count(l);
      if (by_branching[b] != expected || rtc_count_by_branching(l, b) != expected) {
        fail("leaves " + std::to_string(l) + ", branching " + std::to_string(b) + ": enumerated " +
             str(by_branching[b]) + ", expected " + str(expected));
      }
    }
  }
  return "code counts and branching strata match for leaves 2.." + std::to_string(max_leaves);
}

std::string check_boat(int max_leaves) {
  for (int l = 2; l <= max_leaves; ++l) {
    std::set<BoatSequence> image;
    for (const auto& c : all_codes(l, false)) {
      const BoatSequence b = rtcn_to_boat(c);
      if (!validate_boat(b).empty()) fail("image is not a valid schedule", {format_rtcn(c), format_boat(b)});
      if (!image.insert(b).second) fail("two networks share a schedule", {format_boat(b)});
      if (boat_to_rtcn(b) != c) fail("boat_to_rtcn does not invert", {format_rtcn(c), format_boat(b)});
      if (max_rank_return_count(b) + 1 != profile(c).branching_count) {
        fail("branching count differs from X + 1", {format_rtcn(c), format_boat(b)});
      }
    }
    const auto boats = all_boats(l);
    if (boats.size() != image.size()) {
      fail("leaves " + std::to_string(l) + ": " + std::to_string(boats.size()) + " schedules, " +
           std::to_string(image.size()) + " images");
    }
    for (const auto& b : boats) {
      if (!image.count(b)) fail("schedule missed by the bijection", {format_boat(b)});
    }
  }
  return "boat bijection exact for leaves 2.." + std::to_string(max_leaves);
}

std::string check_treeperm(int max_leaves) {
  for (int l = 2; l <= max_leaves; ++l) {
    for (const auto& c : all_codes(l, false)) {
      const TreePerm tp = rtcn_to_treeperm(c);
      if (!tp.tree.is_ranked_tree()) fail("reduction left a reticulation", {format_rtcn(c)});
      if (treeperm_to_rtcn(tp.tree, tp.sigma) != c) fail("round trip failed", {format_rtcn(c), format_treeperm(tp)});
      if (cycle_count(tp.sigma) != l - 1 - c.reticulation_count()) {
        fail("cycle count differs from l-1-k", {format_rtcn(c), format_treeperm(tp)});
      }
    }
    const auto perms = all_perms(l - 1);
    for (const auto& t : all_codes(l, true)) {
      for (const auto& sigma : perms) {
        const TreePerm back = rtcn_to_treeperm(treeperm_to_rtcn(t, sigma));
        if (back.tree != t || back.sigma != sigma) fail("inverse round trip failed", {format_treeperm({t, sigma})});
      }
    }
  }

  const EventCode fig = parse_rtcn("rtcn 6: R 1 5 4; B 1 2; R 1 2 4; R 2 3 1; B 1 2");
  std::vector<ReplacementStep> steps;
  const TreePerm tp = rtcn_to_treeperm(fig, steps);
  const std::vector<std::vector<int>> tuples{{1, 5, 4, 1, 4, 1, 4}, {1, 2, 4, 1, 2, 1, 3}, {2, 3, 1, 1, 2, 2, 1}};
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& st = steps[s];
    if (std::vector<int>{st.L1, st.L2, st.L3, st.l1, st.l2, st.l1_after, st.l2_after} != tuples.at(s)) {
      fail("worked example: step " + std::to_string(s + 1) + " tuple differs", {format_rtcn(fig)});
    }
  }
  if (format_perm(tp.sigma) != "perm 5: 5 2 4 1 3" || format_cycles(tp.sigma) != "(1,5,3,4)(2)") {
    fail("worked example: wrong permutation", {format_treeperm(tp)});
  }

  for (int n = 1; n <= max_leaves + 1; ++n) {
    for (const auto& sigma : all_perms(n)) {
      const TranspositionSeq seq = perm_to_transpositions(sigma);
      if (!validate_transpositions(seq).empty() || transpositions_to_perm(seq) != sigma) {
        fail("factorization does not round-trip", {format_perm(sigma)});
      }
      if (static_cast<int>(seq.pairs.size()) != n - cycle_count(sigma)) {
        fail("factorization length differs from n - cycles", {format_perm(sigma)});
      }
    }
  }
  for (int n = 1; n <= max_leaves; ++n) {
    std::set<Permutation> products;
    std::size_t sequences = 0;
    TranspositionSeq seq{n, {}};
    auto rec = [&](auto&& self, int from) -> void {
      ++sequences;
      products.insert(transpositions_to_perm(seq));
      for (int x = from; x < n; ++x) {
        for (int y = x + 1; y <= n; ++y) {
          seq.pairs.emplace_back(x, y);
          self(self, x + 1);
          seq.pairs.pop_back();
        }
      }
    };
    rec(rec, 1);
    if (products.size() != sequences || sequences != all_perms(n).size()) {
      fail("canonical products are not a bijection for n = " + std::to_string(n));
    }
  }
  return "tree/permutation bijection and factorizations exact for leaves 2.." + std::to_string(max_leaves);
}

std::string check_contain(int max_leaves) {
  for (int l = 2; l <= max_leaves; ++l) {
    const auto decisions = all_decision_vectors(l);
    const auto phylos = all_phylo_trees(l);
    const std::set<PhyloTree> all_phylo(phylos.begin(), phylos.end());
    if (decisions.size() != all_phylo.size() || BigInt(static_cast<long>(decisions.size())) != containing_count(l)) {
      fail("leaves " + std::to_string(l) + ": decision vectors and phylogenetic trees differ in number");
    }
    std::map<EventCode, std::set<EventCode>> containing;
    for (const auto& n : all_codes(l, false)) {
      for (auto& t : all_reductions(code_to_dag(n))) containing[t].insert(n);
    }
    for (const auto& t : all_codes(l, true)) {
      std::set<EventCode> expanded;
      std::set<PhyloTree> image;
      for (const auto& d : decisions) {
        const EventCode n = expand_code(t, d);
        expanded.insert(n);
        if (!contains_bruteforce(t, n)) fail("expansion does not contain the tree", {format_rtcn(t), format_decisions(d)});
        if (decisions_from_pair(t, n) != d) fail("decisions not recovered", {format_rtcn(t), format_rtcn(n)});
        const PhyloTree p = pair_to_phylo(t, n);
        image.insert(p);
        if (dag_to_code(phylo_to_pair(t, p)) != n) fail("phylo round trip failed", {format_rtcn(t), format_rtcn(n)});
      }
      if (expanded != containing[t]) fail("expansion differs from the networks containing the tree", {format_rtcn(t)});
      if (image != all_phylo) fail("image is not every phylogenetic tree", {format_rtcn(t)});
    }
  }
  return "containment bijections exact for leaves 2.." + std::to_string(max_leaves);
}

std::string check_stats(const VerifyConfig& config) {
  const int exact_max = std::min(config.max_leaves, 6);
  for (int l = 2; l <= exact_max; ++l) {
    const auto pmf = exact_branching_pmf(l);
    std::vector<BigInt> x_counts(static_cast<std::size_t>(l), 0);
    BigInt total = 0;
    BoatEnumerator en(l);
    while (auto b = en.next()) {
      ++x_counts[static_cast<std::size_t>(max_rank_return_count(*b))];
      ++total;
    }
    for (int b = 1; b <= l - 1; ++b) {
      if (Rational(x_counts[static_cast<std::size_t>(b - 1)], total) != pmf[static_cast<std::size_t>(b - 1)]) {
        fail("leaves " + std::to_string(l) + ": P(X = " + std::to_string(b - 1) + ") differs from P(B = " +
             std::to_string(b) + ")");
      }
    }
  }
  const auto samples = boat_return_experiment(config.stats_leaves, config.stats_samples, config.seed);
  const ExperimentReport r = normality_report(samples, config.stats_leaves, config.seed);
  if (!r.pass) fail("normality check failed", {report_json(r)});
  return report_json(r);
}

std::string check_codec(const VerifyConfig& config) {
  std::mt19937_64 rng(config.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_tree = [&](int l) {
    std::vector<Event> events;
    for (int i = 1; i < l; ++i) {
      const int width = l - i + 1;
      events.push_back(level_option(width, static_cast<std::uint64_t>(uniform(0, width * (width - 1) / 2 - 1))));
    }
    return EventCode(l, std::move(events));
  };
  auto random_decisions = [&](int l) {
    DecisionVector d{l, {}};
    for (int k = 1; k < l; ++k) {
      const int pick = uniform(0, 2 * k - 2);
      d.entries.push_back(pick == 0 ? Decision::keep_event()
                                    : Decision::retic((pick + 1) / 2, pick % 2 ? Side::Left : Side::Right));
    }
    return d;
  };
  auto random_perm = [&](int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    std::shuffle(image.begin(), image.end(), rng);
    return Permutation(std::move(image));
  };

  for (std::int64_t j = 0; j < config.codec_objects; ++j) {
    const int l = uniform(2, 12);
    TextObject obj;
    switch (j % 6) {
      case 0: obj = sample_uniform(l, rng); break;
      case 1: obj = rtcn_to_boat(sample_uniform(l, rng)); break;
      case 2: obj = random_perm(l); break;
      case 3: obj = history_tree(random_decisions(l)).to_phylo(); break;
      case 4: obj = random_decisions(l); break;
      default: obj = TreePerm{random_tree(l), random_perm(l - 1)}; break;
    }
    const std::string text = format_object(obj);
    const TextObject back = parse_object(text);
    if (back != obj || format_object(back) != text) fail("round trip is not the identity", {text});
  }
  return std::to_string(config.codec_objects) + " random objects round-trip byte for byte";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counts", "boat", "treeperm", "contain", "stats", "codec"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config) {
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, config);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const int m = config.max_leaves;
  if (m < 2) throw InvalidInput("--max-leaves must be at least 2");
  if (suite == "counts") return {run_check("counts", [&] { return check_counts(m); })};
  if (suite == "boat") return {run_check("boat", [&] { return check_boat(m); })};
  if (suite == "treeperm") return {run_check("treeperm", [&] { return check_treeperm(m); })};
  if (suite == "contain") return {run_check("contain", [&] { return check_contain(m); })};
  if (suite == "stats") return {run_check("stats", [&] { return check_stats(config); })};
  if (suite == "codec") return {run_check("codec", [&] { return check_codec(config); })};
  throw InvalidInput("unknown suite '" + suite + "'");
}

}  // namespace rtcn
