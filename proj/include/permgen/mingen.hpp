#pragma once

// Smallest generating sets by lifting generators down a chief series.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permgen/bsgs.hpp"
#include "permgen/group.hpp"
#include "permgen/random.hpp"
#include "permgen/structure.hpp"

namespace permgen {

enum class SolveMode { Certified, Heuristic };

struct SolveOptions {
  std::uint64_t seed = 0;
  SolveMode mode = SolveMode::Certified;
  /// Largest |N|^d swept exhaustively. Beyond it Certified mode raises
  /// ExhaustiveCapExceeded and Heuristic mode samples instead.
  BigInt exhaustive_cap = 10'000'000;
  double rss_epsilon = kDefaultEpsilon;
  bool enable_fast_paths = true;
  unsigned quick_attempts = 8;
  bool orbit_reduce = true;
  SeriesOrdering ordering = SeriesOrdering::AbelianHigh;
};

struct SolveResult {
  std::vector<Permutation> gens;
  GenTestStats stats;
  /// False only when Heuristic mode had to append a generator without
  /// ruling out the smaller size.
  bool certified_minimal = true;
  /// "trivial", "cyclic", "p-group", "nilpotent", "quick" or "lifting".
  std::string method;
  std::size_t series_length = 0;
};

/// gens generate group modulo series.subgroups[k].
struct LiftState {
  Group group;
  ChiefSeries series;
  std::size_t k = 0;
  std::vector<Permutation> gens;
  GenTestStats stats;
  Rng rng;
  SolveOptions options;
  bool certified_minimal = true;

  std::size_t d() const noexcept { return gens.size(); }
  std::size_t u() const noexcept { return series.length(); }
};

/// Errors: ExhaustiveCapExceeded (Certified mode), RefinementFailed,
/// InternalInconsistency.
SolveResult smallest_generating_set(const Group& g, const SolveOptions& opts = {});

/// Generators of the top factor; returns the state at k = u - 1.
LiftState top_factor_generators(const Group& g, ChiefSeries series, const SolveOptions& opts,
                                Rng rng, GenTestStats stats = {});

/// Both lift from k to k - 1. state.k must equal k.
void lift_abelian(LiftState& state, std::size_t k);
void lift_nonabelian(LiftState& state, std::size_t k);

/// Searches all tuples (n_1..n_d) of coset representatives of N_{k-1} in
/// N_k for one with <g_i n_i> generating G modulo N_{k-1}. With
/// orbit_reduce, one tuple per orbit of N acting by simultaneous
/// conjugation is tested. Errors: CapExceeded when |N|^d exceeds the cap.
std::optional<std::vector<Permutation>> exhaustive_search(LiftState& state, std::size_t k,
                                                          bool orbit_reduce);

struct FastPath {
  std::vector<Permutation> gens;
  std::string method;
};

/// Cyclic, p-group and nilpotent groups exactly; otherwise a few random
/// subsets of the size of a lower bound for d(G).
std::optional<FastPath> fast_paths(const Group& g, const SolveOptions& opts, GenTestStats& stats,
                                   Rng& rng);

/// max over p of log_p |G : G'G^p|, the rank of the abelianization.
std::size_t abelianization_rank(const Group& g);

/// One test of gens against the whole group: RSS, confirmed by SS.
bool early_stop_check(LiftState& state);

}  // namespace permgen
