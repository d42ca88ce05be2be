#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permgen/bigint.hpp"
#include "permgen/permutation.hpp"
#include "permgen/random.hpp"

namespace permgen {

struct ChainOptions {
  /// Points that must open the base, in this order. The subgroup fixing the
  /// first m of them is then generated by stabilizer_generators(m).
  std::vector<Point> base_prefix;
  /// Upper bound on the group order known in advance. Construction stops as
  /// soon as the chain's order reaches it; the chain is then complete.
  std::optional<BigInt> target_order;
};

/// A base and strong generating set with one Schreier vector per level.
///
/// Invariant kept at every step of construction: level i carries generators
/// fixing base[0..i), and the product of the orbit lengths never exceeds the
/// order of the group generated by the strong generators. Hence order() is
/// always a lower bound, and exact once certified() holds.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree = 0);

  /// Deterministic Schreier-Sims. The result is certified.
  static StabilizerChain build_ss(std::span<const Permutation> gens, std::size_t degree,
                                  const ChainOptions& opts = {});

  /// Monte Carlo Schreier-Sims: sift random elements until
  /// ceil(log2(1/epsilon)) + 16 consecutive ones sift cleanly. The order is
  /// never over-reported; it is under-reported with probability <= epsilon.
  /// Certified only if the order reached opts.target_order.
  static StabilizerChain build_rss(std::span<const Permutation> gens, std::size_t degree,
                                   double epsilon, Rng& rng, const ChainOptions& opts = {});

  /// Deterministically adds `extra` to a copy of a certified chain.
  static StabilizerChain extend_ss(StabilizerChain start, std::span<const Permutation> extra,
                                   const std::optional<BigInt>& target_order = std::nullopt);

  /// Randomised counterpart of extend_ss: the start chain's group must be a
  /// subgroup of <group_gens>; random elements are drawn from <group_gens>.
  static StabilizerChain extend_rss(StabilizerChain start, std::span<const Permutation> extra,
                                    std::span<const Permutation> group_gens, double epsilon,
                                    Rng& rng,
                                    const std::optional<BigInt>& target_order = std::nullopt);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  bool certified() const noexcept { return certified_; }
  const std::vector<Point>& base() const noexcept { return base_; }
  BigInt order() const;

  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_orbit(std::size_t level, Point x) const { return levels_[level].label[x] != kNotInOrbit; }
  /// An element u of the level's group with base[level]^u = x.
  Permutation transversal(std::size_t level, Point x) const;

  struct Sift {
    Permutation residue;
    /// Level where sifting stopped; depth() if every level was passed.
    std::size_t level;
  };
  Sift sift(Permutation g, std::size_t from_level = 0) const;

  /// Exact membership; requires a certified chain.
  bool contains(const Permutation& g) const;
  /// One-sided membership for any chain: true means g is in the group.
  bool may_contain(const Permutation& g) const;

  /// Uniform over the group when certified: one draw per level.
  Permutation random_element(Rng& rng) const;

  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  /// Generators of the subgroup fixing base[0..level) pointwise.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;
  /// Chain of that subgroup, made of this chain's levels from `level` on.
  StabilizerChain tail(std::size_t level) const;

  /// Deterministically adds g (and completes the chain); requires a
  /// certified chain. Returns false when g was already a member.
  bool extend(const Permutation& g, const std::optional<BigInt>& target_order = std::nullopt);

  /// Canonical representative of the right coset (this group) * x: the
  /// element of the coset with lexicographically least images of the base.
  /// Requires a certified chain; x may lie in any overgroup.
  Permutation canonical_coset_rep(const Permutation& x) const;

 private:
  static constexpr std::int32_t kNotInOrbit = -1;
  static constexpr std::int32_t kRoot = -2;

  struct Level {
    Point base_point = 0;
    std::vector<std::uint32_t> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> label;
    // Per orbit position: how many of `gens` have had their Schreier
    // generator sifted. Orbits and generator lists only grow, so the
    // transversal element of a point never changes once assigned.
    std::vector<std::uint32_t> checked;
  };

  void push_level(Point base_point);
  void add_generator_to_level(std::size_t level, std::uint32_t gen);
  /// Adds a residue that fixes base[0..last) to levels first..last,
  /// creating the level `last` if needed.
  void add_strong(Permutation residue, std::size_t first, std::size_t last);
  /// Runs Schreier-Sims until every Schreier generator sifts, or the order
  /// reaches target.
  void complete(const std::optional<BigInt>& target);
  bool reached(const std::optional<BigInt>& target) const;
  /// Sifts g from level 0 and adds its residue, if any, to levels 0..drop.
  bool absorb(const Permutation& g);

  std::size_t degree_ = 0;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  bool certified_ = true;
};

}  // namespace permgen
