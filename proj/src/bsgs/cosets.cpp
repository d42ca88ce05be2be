#include "cosets.hpp"

#include "permgen/errors.hpp"

namespace permgen::detail {

constexpr std::size_t kTableLimit = 2048;

Cosets::Cosets(const Group& upper, const Group& lower, bool table) : chain_(&lower.chain()) {
  const auto size = static_cast<std::size_t>(upper.order() / lower.order());
  add(Permutation(upper.degree()));
  for (const auto& x : upper.generators())
    if (!lower.contains(x)) steps_.push_back(x);
  for (std::size_t i = 0; i < reps_.size() && reps_.size() < size; ++i)
    for (const auto& s : steps_) add(reps_[i] * s);
  if (reps_.size() != size)
    throw Error(ErrorKind::InternalInconsistency, "coset enumeration came up short");
  if (table && size <= kTableLimit) {
    table_.resize(size * size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) table_[a * size + b] = index(reps_[a] * reps_[b]);
  }
}

std::uint32_t Cosets::index(const Permutation& x) const {
  return index_.at(chain_->canonical_coset_rep(x));
}

std::uint32_t Cosets::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[a * reps_.size() + b];
  return index(reps_[a] * reps_[b]);
}

void Cosets::add(const Permutation& x) {
  Permutation c = chain_->canonical_coset_rep(x);
  if (index_.emplace(c, static_cast<std::uint32_t>(reps_.size())).second)
    reps_.push_back(std::move(c));
}

}  // namespace permgen::detail
