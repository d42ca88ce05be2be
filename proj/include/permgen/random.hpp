#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "permgen/permutation.hpp"

namespace permgen {

/// The one RNG type used everywhere; always passed explicitly and seeded by
/// the caller.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound).
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

/// Random elements of <gens> by product replacement with an accumulator
/// (the "rattle" variant). Cheap per element, close to uniform after the
/// warm-up; used where only good mixing, not exact uniformity, is needed.
class ProductReplacement {
 public:
  ProductReplacement(std::span<const Permutation> gens, std::size_t degree, Rng& rng,
                     std::size_t slots = 10, std::size_t warmup = 50);

  Permutation next();

 private:
  Rng* rng_;
  std::vector<Permutation> slots_;
  Permutation accumulator_;
};

}  // namespace permgen
