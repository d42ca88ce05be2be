#pragma once

#include <vector>

#include "permgen/group.hpp"
#include "permgen/random.hpp"

namespace permgen::detail {

/// A short list S with <lower, S> = upper, for lower <= upper.
std::vector<Permutation> generators_mod(const Group& upper, const Group& lower, Rng& rng);

/// Orbit and block-system kernels as point stabilizers in an enlarged
/// action: the original points plus one point per block of every block
/// system used.
class KernelPlan {
 public:
  explicit KernelPlan(const Group& g);

  /// x ∩ K_j for every recorded kernel K_j, starting with x itself and
  /// ending with the trivial group. x must be a subgroup of g.
  std::vector<Group> intersections(const Group& x) const;

 private:
  Permutation augment(const Permutation& x) const;

  std::size_t degree_ = 0;
  std::size_t augmented_ = 0;
  struct System {
    std::vector<std::uint32_t> block_of;  // per original point
    std::vector<Point> representative;    // per block
    std::size_t offset = 0;
  };
  std::vector<System> systems_;
  std::vector<Point> prefix_;
  std::vector<std::size_t> marks_;
};

}  // namespace permgen::detail
