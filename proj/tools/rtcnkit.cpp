// rtcnkit: counting, enumeration, sampling, conversion and checks for ranked
// tree-child networks. Payloads go to stdout one object per line; errors go
// to stderr. Exit codes: 0 success, 1 bad input, 2 failed verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "rtcn/boat.hpp"
#include "rtcn/codec.hpp"
#include "rtcn/containment.hpp"
#include "rtcn/dot.hpp"
#include "rtcn/enumeration.hpp"
#include "rtcn/stats.hpp"
#include "rtcn/treeperm.hpp"
#include "rtcn/verify.hpp"

using namespace rtcn;

namespace {

struct Line {
  int number;
  std::string text;
};

// Non-blank lines that do not start with '#'.
std::vector<Line> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InvalidInput("cannot open " + path);
    in = &file;
  }
  std::vector<Line> out;
  std::string text;
  for (int n = 1; std::getline(*in, text); ++n) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    if (text.back() == '\r') text.pop_back();
    out.push_back({n, text});
  }
  return out;
}

// Runs `fn` on each input object, prefixing errors with the line number.
template <class Fn>
void for_each_object(const std::string& path, Fn&& fn) {
  for (const Line& line : read_lines(path)) {
    try {
      fn(parse_object(line.text));
    } catch (const InvalidInput& e) {
      throw InvalidInput((path == "-" ? std::string("<stdin>") : path) + ":" + std::to_string(line.number) + ": " +
                         e.what());
    }
  }
}

EventCode read_tree(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.size() != 1) throw InvalidInput(path + ": expected exactly one ranked tree");
  return parse_ranked_tree(lines.front().text);
}

EventCode as_network(const TextObject& obj, const std::optional<EventCode>& tree) {
  if (const auto* c = std::get_if<EventCode>(&obj)) return *c;
  if (const auto* b = std::get_if<BoatSequence>(&obj)) return boat_to_rtcn(*b);
  if (const auto* tp = std::get_if<TreePerm>(&obj)) return treeperm_to_rtcn(tp->tree, tp->sigma);
  if (!tree) throw InvalidInput("--tree is required to turn this object into a network");
  if (const auto* d = std::get_if<DecisionVector>(&obj)) return expand_code(*tree, *d);
  if (const auto* p = std::get_if<PhyloTree>(&obj)) return dag_to_code(phylo_to_pair(*tree, *p));
  throw InvalidInput("a permutation alone does not determine a network");
}

std::string convert(const TextObject& obj, const std::string& to, const std::optional<EventCode>& tree) {
  if (to == "rtcn") return format_rtcn(as_network(obj, tree));
  if (to == "boat") return format_boat(rtcn_to_boat(as_network(obj, tree)));
  if (to == "treeperm") return format_treeperm(rtcn_to_treeperm(as_network(obj, tree)));
  if (to == "phylo") {
    if (const auto* p = std::get_if<PhyloTree>(&obj)) return format_newick(*p);
    if (const auto* d = std::get_if<DecisionVector>(&obj)) return format_newick(history_tree(*d).to_phylo());
    if (!tree) throw InvalidInput("--tree is required for --to phylo");
    return format_newick(pair_to_phylo(*tree, as_network(obj, tree)));
  }
  // to == "dec"
  if (const auto* d = std::get_if<DecisionVector>(&obj)) return format_decisions(*d);
  if (const auto* p = std::get_if<PhyloTree>(&obj)) return format_decisions(decisions_from_history(label_phylo(*p)));
  if (!tree) throw InvalidInput("--tree is required for --to dec");
  return format_decisions(decisions_from_pair(*tree, as_network(obj, tree)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranked tree-child network toolkit"};
  app.require_subcommand(1);

  int leaves = 0;
  int branching = 0;
  std::string tree_path;
  std::string input = "-";
  std::string format = "rtcn";
  std::string to;
  std::string suite = "all";
  std::string out_path;
  std::string path_name = "fast";
  bool trees_only = false;
  bool do_expand = false;
  bool do_check = false;
  int max_leaves = 5;
  std::int64_t n = 0;
  std::uint64_t seed = 0;

  auto* count = app.add_subcommand("count", "Count networks, ranked trees or containing networks");
  auto* count_leaves = count->add_option("--leaves", leaves, "Number of leaves")->check(CLI::Range(2, 100000));
  count->add_option("--branching", branching, "Only networks with this many branching events")->needs(count_leaves);
  auto* count_contain =
      count->add_option("--contain", tree_path, "Count networks containing the ranked tree in this file");
  count_leaves->excludes(count_contain);
  count->add_flag("--trees-only", trees_only, "Count ranked trees instead");

  auto* enumerate = app.add_subcommand("enum", "List all networks on a number of leaves");
  enumerate->add_option("--leaves", leaves, "Number of leaves")->required()->check(CLI::Range(2, 7));
  enumerate->add_flag("--trees-only", trees_only, "List ranked trees only");
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"rtcn", "dot"}));

  auto* sample = app.add_subcommand("sample", "Draw uniform random networks");
  sample->add_option("--leaves", leaves, "Number of leaves")->required()->check(CLI::Range(2, 1000000));
  sample->add_option("-n", n, "Number of networks")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Random seed")->required();

  auto* conv = app.add_subcommand("convert", "Convert objects between representations");
  conv->add_option("--to", to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"rtcn", "boat", "treeperm", "phylo", "dec"}));
  conv->add_option("--tree", tree_path, "Ranked tree for containment conversions");
  conv->add_option("input", input, "Input file, - for stdin");

  auto* contain = app.add_subcommand("contain", "Networks containing a ranked tree");
  contain->add_option("--tree", tree_path, "Ranked tree file")->required();
  auto* expand_flag = contain->add_flag("--expand", do_expand, "List every network containing the tree");
  auto* check_flag = contain->add_flag("--check", do_check, "Answer yes or no for each input network");
  expand_flag->excludes(check_flag);
  contain->add_option("input", input, "Networks to check, - for stdin");

  auto* verify = app.add_subcommand("verify", "Run exhaustive and statistical self-checks");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suites));
  verify->add_option("--max-leaves", max_leaves, "Largest leaf count for exhaustive checks")
      ->check(CLI::Range(2, 7));
  auto* verify_seed = verify->add_option("--seed", seed, "Seed for the randomized checks");

  auto* stats = app.add_subcommand("stats", "Sample the boat statistic X and test normality");
  stats->add_option("--leaves", leaves, "Number of leaves")->required()->check(CLI::Range(2, 100000000));
  stats->add_option("-n", n, "Number of samples")->required()->check(CLI::PositiveNumber);
  stats->add_option("--seed", seed, "Random seed")->required();
  stats->add_option("--out", out_path, "Write samples as CSV to this file");
  stats->add_option("--path", path_name, "Sampler")->check(CLI::IsMember({"fast", "full"}));

  auto* dot = app.add_subcommand("dot", "Render objects as Graphviz digraphs");
  dot->add_option("input", input, "Input file, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << app.help();
    return 1;
  }

  std::ostream& out = std::cout;
  try {
    if (count->parsed()) {
      if (!tree_path.empty()) {
        out << containing_count(read_tree(tree_path).leaves()) << '\n';
      } else if (leaves == 0) {
        throw InvalidInput("count needs --leaves or --contain");
      } else if (count->count("--branching") > 0) {
        if (trees_only) throw InvalidInput("--branching and --trees-only cannot be combined");
        out << rtc_count_by_branching(leaves, branching) << '\n';
      } else {
        out << (trees_only ? rt_count(leaves) : rtc_count(leaves)) << '\n';
      }
    } else if (enumerate->parsed()) {
      CodeEnumerator en(leaves, trees_only);
      while (auto c = en.next()) {
        if (format == "dot") {
          out << export_dot(*c);
        } else {
          out << format_rtcn(*c) << '\n';
        }
      }
    } else if (sample->parsed()) {
      std::mt19937_64 rng(seed);
      for (std::int64_t j = 0; j < n; ++j) out << format_rtcn(sample_uniform(leaves, rng)) << '\n';
    } else if (conv->parsed()) {
      std::optional<EventCode> tree;
      if (!tree_path.empty()) tree = read_tree(tree_path);
      for_each_object(input, [&](const TextObject& obj) { out << convert(obj, to, tree) << '\n'; });
    } else if (contain->parsed()) {
      const EventCode tree = read_tree(tree_path);
      if (do_check) {
        for_each_object(input, [&](const TextObject& obj) {
          out << (contains(tree, as_network(obj, tree)) ? "yes" : "no") << '\n';
        });
      } else {
        for (const auto& d : all_decision_vectors(tree.leaves())) out << format_rtcn(expand_code(tree, d)) << '\n';
      }
    } else if (verify->parsed()) {
      VerifyConfig config;
      config.max_leaves = max_leaves;
      if (verify_seed->count() > 0) config.seed = seed;
      bool ok = true;
      for (const auto& r : run_suite(suite, config)) {
        ok = ok && r.pass;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
        out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << secs << " s): " << r.summary << '\n';
        for (const auto& line : r.counterexample) out << "  " << line << '\n';
      }
      return ok ? 0 : 2;
    } else if (stats->parsed()) {
      const SamplerPath path = path_name == "full" ? SamplerPath::Full : SamplerPath::Fast;
      const auto samples = boat_return_experiment(leaves, n, seed, path);
      if (!out_path.empty()) {
        std::ofstream csv(out_path);
        if (!csv) throw InvalidInput("cannot write " + out_path);
        write_samples_csv(csv, samples);
      }
      out << report_json(normality_report(samples, leaves, seed)) << '\n';
    } else if (dot->parsed()) {
      for_each_object(input, [&](const TextObject& obj) { out << export_dot(obj); });
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
