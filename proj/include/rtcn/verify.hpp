#pragma once

// Self-checks backing `rtcnkit verify`. Each check walks its instances in
// increasing size and canonical order and stops at the first failure, so a
// reported counterexample is a smallest one.

#include <cstdint>
#include <string>
#include <vector>

namespace rtcn {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string summary;
  std::vector<std::string> counterexample;  // core-grammar lines
  double seconds = 0;
};

struct VerifyConfig {
  int max_leaves = 5;
  std::uint64_t seed = 20240607;
  int stats_leaves = 10000;
  std::int64_t stats_samples = 100000;
  std::int64_t codec_objects = 100000;
};

// counts, boat, treeperm, contain, stats, codec.
const std::vector<std::string>& suite_names();

// `suite` is one of suite_names() or "all". Throws InvalidInput otherwise.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config);

}  // namespace rtcn
