#pragma once

// The permgen command line, as a library so it can be tested in process.
//
//   permgen mingen <spec> [--seed N] [--mode certified|heuristic]
//                         [--no-fast-paths] [--oracle-check] [--stats] [--json]
//   permgen chief <spec> [--seed N] [--ordering abelian-high|as-found] [--json]
//   permgen order <spec> [--json]
//   permgen bench [--suite paper-table|scaling] [--max-degree N] [--runs N]
//                 [--seed N] [--mode ...] [--no-fast-paths] [--json]
//
// Exit codes: 0 success, 1 bad input or other failure, 2 exhaustive cap
// exceeded, 3 oracle mismatch. PERMGEN_EXHAUSTIVE_CAP overrides the cap.
//
// --json prints one JSON object per line. A mingen report is
//   {"group", "degree", "order", "d", "gens", "stats": {"ss_tests",
//    "rss_tests", "random_elements", "early_stop_tests", "abelian_ss_tests",
//    "exhaustive_candidates", "exhaustive_tests", "sampling_trials",
//    "per_factor": [{"factor", "order", "abelian", "branch", "trials",
//    "d_after", "ss_tests", "rss_tests"}]}, "mode", "seed",
//    "certified_minimal", "method"}
// plus "oracle_d" under --oracle-check. Orders are decimal strings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permgen {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchRow {
  std::string name;
  std::string spec;
  std::size_t degree = 0;
  /// d(G) as published, where known.
  std::optional<std::size_t> expected_d;
};

/// Rows of "paper-table" or "scaling" with degree at most max_degree.
/// Errors: InvalidArgument for an unknown suite.
std::vector<BenchRow> bench_suite(const std::string& suite, std::size_t max_degree);

struct ScalingFit {
  /// Least-squares slope through the origin of tests against n^2 ln n.
  double fitted = 0;
  /// Smallest C with tests <= C n^2 ln n at every point.
  double envelope = 0;
};

/// Points are (degree, generating tests); degrees must exceed 1.
ScalingFit fit_scaling(const std::vector<std::pair<std::size_t, double>>& points);

}  // namespace permgen
