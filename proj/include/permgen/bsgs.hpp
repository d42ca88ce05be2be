#pragma once

// Generating tests and their bookkeeping.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permgen/chain.hpp"
#include "permgen/group.hpp"
#include "permgen/random.hpp"

namespace permgen {

enum class TestStrategy { SS, RSS };

/// Default error bound for Monte Carlo chains: 2^-20.
inline constexpr double kDefaultEpsilon = 1.0 / 1048576.0;

/// What happened while lifting through one chief factor.
struct FactorRecord {
  std::size_t factor = 0;  // k, 1-based from the bottom of the series
  BigInt order;
  bool abelian = false;
  std::string branch;
  std::uint64_t trials = 0;
  std::size_t d_after = 0;
  std::uint64_t ss_tests = 0;
  std::uint64_t rss_tests = 0;
};

struct GenTestStats {
  std::uint64_t ss_tests = 0;
  std::uint64_t rss_tests = 0;
  std::uint64_t random_elements = 0;
  std::uint64_t early_stop_tests = 0;
  /// SS tests spent inside abelian lifting steps.
  std::uint64_t abelian_ss_tests = 0;
  std::uint64_t exhaustive_candidates = 0;
  std::uint64_t exhaustive_tests = 0;
  /// Trial counts of every random search for non-abelian factor generators
  /// that ended in success, in the order they ran.
  std::vector<std::uint64_t> sampling_trials;
  std::vector<FactorRecord> per_factor;

  std::uint64_t total_tests() const { return ss_tests + rss_tests; }
};

/// Does <candidate> equal target? SS answers exactly. RSS never answers
/// true wrongly and answers false wrongly with probability <= epsilon.
/// Candidates outside target are rejected before any chain is built.
bool generates(std::span<const Permutation> candidate, const Group& target, TestStrategy strategy,
               GenTestStats& stats, Rng& rng, double epsilon = kDefaultEpsilon);

/// Does <candidate, normal> equal target, i.e. does candidate generate
/// target modulo the normal subgroup? The normal subgroup's certified chain
/// is the starting point, so only the quotient is searched.
bool generates_modulo(std::span<const Permutation> candidate, const Group& normal,
                      const Group& target, TestStrategy strategy, GenTestStats& stats, Rng& rng,
                      double epsilon = kDefaultEpsilon);

}  // namespace permgen
