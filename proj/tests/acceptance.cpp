// One line per acceptance criterion: "criterion N (...): PASS|FAIL ...".
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "rtcn/boat.hpp"
#include "rtcn/codec.hpp"
#include "rtcn/containment.hpp"
#include "rtcn/enumeration.hpp"
#include "rtcn/stats.hpp"
#include "rtcn/treeperm.hpp"

using namespace rtcn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<EventCode> codes(int l, bool trees_only = false) {
  std::vector<EventCode> out;
  CodeEnumerator en(l, trees_only);
  while (auto c = en.next()) out.push_back(*c);
  return out;
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome counting() {
  std::string detail = "counts";
  const std::vector<long> expected{1, 6, 108, 4320, 324000};
  for (int l = 2; l <= 6; ++l) {
    long n = 0;
    CodeEnumerator en(l);
    while (en.next()) ++n;
    detail += " " + std::to_string(n);
    if (n != expected[static_cast<std::size_t>(l - 2)] || BigInt(n) != oracle::network_count(l)) {
      return fail("leaves " + std::to_string(l) + ": enumerated " + std::to_string(n));
    }
  }
  return {true, detail};
}

Outcome stratification() {
  for (int l = 2; l <= 6; ++l) {
    std::map<int, long> strata;
    for (const auto& c : codes(l)) ++strata[profile(c).branching_count];
    const auto census = oracle::cycle_census(l - 1);
    for (int b = 1; b <= l - 1; ++b) {
      const BigInt want = stirling1(l - 1, b) * rt_count(l);
      if (BigInt(strata[b]) != want || stirling1(l - 1, b) != census[static_cast<std::size_t>(b)]) {
        return fail("leaves " + std::to_string(l) + ", b = " + std::to_string(b));
      }
    }
  }
  return {true, "every stratum exact for leaves 2..6"};
}

Outcome boat_bijection() {
  for (int l = 2; l <= 5; ++l) {
    const auto schedules = oracle::boat_schedules(l);
    const std::set<BoatSequence> valid(schedules.begin(), schedules.end());
    std::set<BoatSequence> image;
    for (const auto& c : codes(l)) {
      const BoatSequence b = rtcn_to_boat(c);
      if (!image.insert(b).second) return fail("not injective at " + format_boat(b));
      if (boat_to_rtcn(b) != c) return fail("not inverted at " + format_rtcn(c));
      if (max_rank_return_count(b) + 1 != profile(c).branching_count) return fail("X + 1 fails at " + format_rtcn(c));
    }
    if (image != valid) return fail("image differs from the valid schedules at leaves " + std::to_string(l));
  }
  return {true, "bijective with simulation-valid schedules for leaves 2..5"};
}

Outcome treeperm_bijection() {
  for (int l = 2; l <= 5; ++l) {
    for (const auto& c : codes(l)) {
      const TreePerm tp = rtcn_to_treeperm(c);
      if (treeperm_to_rtcn(tp.tree, tp.sigma) != c) return fail("round trip fails at " + format_rtcn(c));
      if (cycle_count(tp.sigma) != l - 1 - c.reticulation_count()) return fail("cycles wrong at " + format_rtcn(c));
    }
    for (const auto& t : codes(l, true)) {
      for (const auto& image : oracle::permutations(l - 1)) {
        const TreePerm tp{t, Permutation(image)};
        const TreePerm back = rtcn_to_treeperm(treeperm_to_rtcn(tp.tree, tp.sigma));
        if (back.tree != tp.tree || back.sigma != tp.sigma) return fail("inverse fails at " + format_treeperm(tp));
      }
    }
  }
  std::vector<ReplacementStep> steps;
  const TreePerm tp = rtcn_to_treeperm(parse_rtcn("rtcn 6: R 1 5 4; B 1 2; R 1 2 4; R 2 3 1; B 1 2"), steps);
  const std::vector<std::vector<int>> want{{1, 5, 4, 1, 4, 1, 4}, {1, 2, 4, 1, 2, 1, 3}, {2, 3, 1, 1, 2, 2, 1}};
  std::vector<std::vector<int>> got;
  std::string pairs;
  for (const auto& s : steps) {
    got.push_back({s.L1, s.L2, s.L3, s.l1, s.l2, s.l1_after, s.l2_after});
    pairs += "(" + std::to_string(s.a) + "," + std::to_string(s.a + s.b) + ")";
  }
  if (got != want || pairs != "(1,4)(3,5)(4,5)" || format_cycles(tp.sigma) != "(1,5,3,4)(2)") {
    return fail("worked example gives " + pairs + " = " + format_cycles(tp.sigma));
  }
  return {true, "round trips for leaves 2..5; worked example sigma = " + pairs + " = " + format_cycles(tp.sigma)};
}

Outcome factorization() {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& image : oracle::permutations(n)) {
      const Permutation sigma(image);
      const TranspositionSeq seq = perm_to_transpositions(sigma);
      if (!validate_transpositions(seq).empty() || transpositions_to_perm(seq) != sigma ||
          static_cast<int>(seq.pairs.size()) != n - oracle::cycles(image)) {
        return fail("factorization fails at " + format_perm(sigma));
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    std::set<Permutation> products;
    std::size_t sequences = 0;
    TranspositionSeq seq{n, {}};
    std::function<void(int)> rec = [&](int from) {
      ++sequences;
      products.insert(transpositions_to_perm(seq));
      for (int x = from; x < n; ++x) {
        for (int y = x + 1; y <= n; ++y) {
          seq.pairs.emplace_back(x, y);
          rec(x + 1);
          seq.pairs.pop_back();
        }
      }
    };
    rec(1);
    if (products.size() != sequences || sequences != oracle::permutations(n).size()) {
      return fail("product map not bijective for n = " + std::to_string(n));
    }
  }
  return {true, "factorizations exact for n <= 6, unique for n <= 5"};
}

Outcome containment() {
  std::size_t four = 0;
  for (int l = 2; l <= 5; ++l) {
    std::set<std::set<std::set<int>>> all_phylo;
    for (const auto& p : oracle::phylo_parent_arrays(l)) all_phylo.insert(oracle::clusters(p, l));
    const BigInt want = oracle::odd_double_factorial(l);
    if (BigInt(static_cast<long>(all_phylo.size())) != want) return fail("phylogenetic tree oracle is off");
    const auto decisions = all_decision_vectors(l);
    for (const auto& t : codes(l, true)) {
      std::set<EventCode> networks;
      std::set<std::set<std::set<int>>> image;
      for (const auto& d : decisions) {
        const EventCode n = expand_code(t, d);
        networks.insert(n);
        if (!contains_bruteforce(t, n)) return fail(format_rtcn(n) + " does not contain " + format_rtcn(t));
        const PhyloTree p = pair_to_phylo(t, n);
        image.insert(oracle::clusters(p));
        if (dag_to_code(phylo_to_pair(t, p)) != n || pair_to_phylo(t, dag_to_code(phylo_to_pair(t, p))) != p) {
          return fail("round trip fails at " + format_rtcn(n));
        }
      }
      if (BigInt(static_cast<long>(networks.size())) != want) return fail("wrong count for " + format_rtcn(t));
      if (image != all_phylo) return fail("not onto the phylogenetic trees for " + format_rtcn(t));
      if (l == 4) four = networks.size();
    }
  }
  if (four != 15) return fail("four-leaf count is " + std::to_string(four));
  return {true, "(2l-3)!! networks per tree for leaves 2..5; 15 at four leaves"};
}

Outcome normality() {
  const int l = 10000;
  const std::int64_t n = 100000;
  const auto samples = boat_return_experiment(l, n, 20240607);

  long double h1 = 0, h2 = 0;
  for (int j = l - 1; j >= 1; --j) {
    h1 += 1.0L / j;
    h2 += 1.0L / (static_cast<long double>(j) * j);
  }
  const double mean = static_cast<double>(h1 - 1);
  const double var = static_cast<double>(h1 - h2);

  long double s = 0, ss = 0;
  for (int x : samples) {
    s += x;
    ss += static_cast<long double>(x) * x;
  }
  const double sample_mean = static_cast<double>(s / n);
  const double sample_var = static_cast<double>((ss - s * s / n) / (n - 1));
  const double se = std::sqrt(var / static_cast<double>(n));

  // Sup distance between the empirical CDF and the normal CDF evaluated at
  // half-integers (the samples are integers).
  std::map<int, std::int64_t> freq;
  for (int x : samples) ++freq[x];
  const double sd = std::sqrt(var);
  auto phi = [&](double x) { return 0.5 * std::erfc(-(x - mean) / sd / std::sqrt(2.0)); };
  double ks = 0;
  std::int64_t cum = 0;
  for (int k = freq.begin()->first - 1; k <= freq.rbegin()->first; ++k) {
    cum += freq.count(k) ? freq[k] : 0;
    ks = std::max(ks, std::abs(static_cast<double>(cum) / static_cast<double>(n) - phi(k + 0.5)));
  }
  const ExperimentReport report = normality_report(samples, l, 20240607);

  char buf[320];
  std::snprintf(buf, sizeof buf,
                "mean %.4f vs %.4f (%.2f se), variance %.4f vs %.4f (%.2f%%), KS %.4f (uncorrected %.4f)", sample_mean,
                mean, (sample_mean - mean) / se, sample_var, var, 100 * std::abs(sample_var - var) / var, ks,
                report.ks_distance_raw);
  const bool ok = std::abs(sample_mean - mean) <= 4 * se && std::abs(sample_var - var) <= 0.1 * var && ks <= 0.05 &&
                  std::abs(report.ks_distance - ks) < 1e-9 && report.pass;
  return {ok, buf};
}

Outcome codec_stability() {
  std::mt19937_64 rng(8);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::map<std::string, long> per_grammar;
  for (int j = 0; j < 100000; ++j) {
    const int l = uniform(2, 15);
    std::string text;
    std::string grammar;
    switch (j % 7) {
      case 0:
        grammar = "rtcn";
        text = format_rtcn(sample_uniform(l, rng));
        break;
      case 1: {
        grammar = "ranked tree";
        std::vector<Event> events;
        for (int i = 1; i < l; ++i) {
          const int w = l - i + 1;
          events.push_back(level_option(w, static_cast<std::uint64_t>(uniform(0, w * (w - 1) / 2 - 1))));
        }
        text = format_rtcn(EventCode(l, events));
        break;
      }
      case 2:
        grammar = "boat";
        text = format_boat(rank_unmap(rank_map(rtcn_to_boat(sample_uniform(l, rng)))));
        break;
      case 3: {
        grammar = "perm";
        std::vector<int> image(static_cast<std::size_t>(l));
        std::iota(image.begin(), image.end(), 1);
        std::shuffle(image.begin(), image.end(), rng);
        text = format_perm(Permutation(image));
        break;
      }
      case 4:
      case 5: {
        DecisionVector d{l, {}};
        for (int k = 1; k < l; ++k) {
          const int pick = uniform(0, 2 * k - 2);
          d.entries.push_back(pick == 0 ? Decision::keep_event()
                                        : Decision::retic((pick + 1) / 2, pick % 2 ? Side::Left : Side::Right));
        }
        grammar = j % 7 == 4 ? "dec" : "newick";
        text = j % 7 == 4 ? format_decisions(d) : format_newick(history_tree(d).to_phylo());
        break;
      }
      default:
        grammar = "treeperm";
        text = format_treeperm(rtcn_to_treeperm(sample_uniform(l, rng)));
        break;
    }
    const TextObject obj = parse_object(text);
    if (format_object(obj) != text || parse_object(format_object(obj)) != obj) return fail("round trip fails: " + text);
    ++per_grammar[grammar];
  }
  std::string detail = "100000 objects:";
  for (const auto& [g, k] : per_grammar) detail += " " + g + "=" + std::to_string(k);
  return {true, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "counting", 60, counting},
      {2, "branching stratification", 0, stratification},
      {3, "boat bijection", 0, boat_bijection},
      {4, "tree/permutation bijection", 0, treeperm_bijection},
      {5, "transposition factorization", 0, factorization},
      {6, "containment bijection", 120, containment},
      {7, "normality of X", 60, normality},
      {8, "codec stability", 0, codec_stability},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %d (%s): %s - %s [%.2f s]\n", c.number, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                secs);
  }
  return failures == 0 ? 0 : 1;
}
