#include "permgen/random.hpp"

namespace permgen {

ProductReplacement::ProductReplacement(std::span<const Permutation> gens, std::size_t degree,
                                       Rng& rng, std::size_t slots, std::size_t warmup)
    : rng_(&rng), accumulator_(degree) {
  std::vector<Permutation> nontrivial;
  for (const auto& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);
  if (nontrivial.empty()) return;
  const std::size_t count = std::max(slots, nontrivial.size() + 1);
  slots_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) slots_.push_back(nontrivial[i % nontrivial.size()]);
  for (std::size_t i = 0; i < warmup; ++i) next();
}

Permutation ProductReplacement::next() {
  if (slots_.empty()) return accumulator_;
  const std::size_t n = slots_.size();
  const std::size_t i = uniform_index(*rng_, n);
  std::size_t j = uniform_index(*rng_, n - 1);
  if (j >= i) ++j;
  const bool invert = uniform_index(*rng_, 2) == 1;
  const Permutation& other = invert ? slots_[j].inverse() : slots_[j];
  if (uniform_index(*rng_, 2) == 0)
    slots_[i] = slots_[i] * other;
  else
    slots_[i] = other * slots_[i];
  accumulator_ *= slots_[i];
  return accumulator_;
}

}  // namespace permgen
