#pragma once

#include <memory>
#include <string>
#include <vector>

#include "permgen/chain.hpp"
#include "permgen/permutation.hpp"

namespace permgen {

/// A permutation group given by generators, with a certified stabilizer
/// chain built on first use and shared between copies.
class Group {
 public:
  /// The trivial group on zero points.
  Group();
  /// Generators must all have the given degree (BadGenerators otherwise).
  Group(std::size_t degree, std::vector<Permutation> generators);
  /// Attaches a chain already known to be certified for <generators>.
  Group(std::size_t degree, std::vector<Permutation> generators, StabilizerChain chain);

  static Group trivial(std::size_t degree) { return Group(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabilizerChain& chain() const;
  const BigInt& order() const;
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool is_trivial() const { return order() == 1; }
  /// True when every generator of `sub` lies in this group.
  bool contains_group(const Group& sub) const;
  /// Conjugates of every generator of this group by every generator of
  /// `over` lie in this group.
  bool is_normalized_by(const Group& over) const;
  bool is_abelian() const;

 private:
  struct Cache;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// <a, b> on the same degree.
Group join(const Group& a, const Group& b);

}  // namespace permgen
