#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "permgen/group.hpp"

namespace permgen::detail {

/// One representative per coset of lower in upper (lower normal in upper),
/// canonical for lower's chain, the identity first, found breadth first
/// from upper's generators.
class Cosets {
 public:
  /// With `table`, products of representatives are precomputed when there
  /// are at most 2048 of them.
  Cosets(const Group& upper, const Group& lower, bool table = false);

  std::size_t size() const { return reps_.size(); }
  const Permutation& rep(std::size_t i) const { return reps_[i]; }
  /// Generators of upper outside lower.
  const std::vector<Permutation>& steps() const { return steps_; }

  /// Index of the coset containing x, an element of upper.
  std::uint32_t index(const Permutation& x) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

 private:
  void add(const Permutation& x);

  const StabilizerChain* chain_;
  std::vector<Permutation> steps_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_;
};

}  // namespace permgen::detail
