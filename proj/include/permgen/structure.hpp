#pragma once

// Normal structure: closures, derived and kernel series, chief series.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permgen/group.hpp"
#include "permgen/random.hpp"

namespace permgen {

/// Smallest normal subgroup of g containing the seeds.
/// Errors: SeedNotInGroup.
Group normal_closure(const Group& g, std::span<const Permutation> seeds);

/// <base, seeds>^g for a subgroup `base` normalized by g. When `bound` is
/// the order of a group known to contain the result, construction stops as
/// soon as that order is reached. Seeds are not checked.
Group normal_closure_over(const Group& g, const Group& base, std::span<const Permutation> seeds,
                          const std::optional<BigInt>& bound = std::nullopt);

Group derived_subgroup(const Group& g);
/// g = D_0 > D_1 > ... > D_s with D_s perfect.
std::vector<Group> derived_series(const Group& g);

/// Orbits on all points, each sorted, ordered by least point.
std::vector<std::vector<Point>> orbits(const Group& g);

/// Least block of imprimitivity of <gens> containing `seed`, within the
/// orbit of the seed.
std::vector<Point> minimal_block(std::span<const Permutation> gens, std::size_t degree,
                                 std::span<const Point> seed);

/// Block systems of the action on one orbit, from coarsest to finest,
/// excluding the two trivial ones. Consecutive systems refine each other.
/// Each system maps points of the orbit to block numbers.
std::vector<std::vector<std::uint32_t>> block_chain(const Group& g, const std::vector<Point>& orbit);

/// Kernels of the actions on the orbits, taken orbit by orbit, and within
/// each orbit on its block systems from coarsest to finest: g = K_0 > ... >
/// K_t = 1, strictly descending, all normal in g.
std::vector<Group> kernel_series(const Group& g);

/// Refines lower < upper, both normal in g with upper/lower elementary
/// abelian, into lower = M_0 < ... < M_r = upper with each step a minimal
/// normal subgroup of g/M_i. Returns M_1..M_r.
/// Errors: LayerNotNormal, LayerNotElementaryAbelian, RefinementFailed.
std::vector<Group> refine_abelian_layer(const Group& g, const Group& upper, const Group& lower,
                                        Rng& rng);

enum class SeriesOrdering { AbelianHigh, AsFound };

struct ChiefFactorInfo {
  BigInt order;
  bool abelian = false;
  /// For abelian factors: order = p^l.
  std::uint64_t p = 0;
  unsigned l = 0;
  std::size_t delta_prime = 1;
  std::size_t t_prime = 2;
};

struct ChiefSeries {
  /// N_0 = 1 < N_1 < ... < N_u = G.
  std::vector<Group> subgroups;
  /// factors[k - 1] describes N_k / N_{k-1}.
  std::vector<ChiefFactorInfo> factors;
  SeriesOrdering ordering = SeriesOrdering::AbelianHigh;

  std::size_t length() const noexcept { return factors.size(); }
  const ChiefFactorInfo& factor(std::size_t k) const;
};

/// Errors: RefinementFailed.
ChiefSeries chief_series(const Group& g, SeriesOrdering ordering, Rng& rng);
ChiefSeries chief_series(const Group& g, SeriesOrdering ordering = SeriesOrdering::AbelianHigh);

/// Number of factors N_j/N_{j-1}, k <= j <= u, with the order of the k-th.
/// Errors: IndexOutOfRange.
std::size_t delta_prime(const ChiefSeries& series, std::size_t k);

/// Least integer m >= 8/5 + log_{order} delta, decided exactly.
std::size_t t_prime(const BigInt& order, std::size_t delta);

}  // namespace permgen
