#include "permgen/group.hpp"

#include <mutex>

#include "permgen/errors.hpp"

namespace permgen {

struct Group::Cache {
  std::once_flag once;
  std::optional<StabilizerChain> chain;
  BigInt order;
};

Group::Group() : cache_(std::make_shared<Cache>()) {}

Group::Group(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorKind::BadGenerators, "generator of degree " + std::to_string(g.degree()) +
                                                " in a group of degree " + std::to_string(degree));
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
}

Group::Group(std::size_t degree, std::vector<Permutation> generators, StabilizerChain chain)
    : Group(degree, std::move(generators)) {
  if (!chain.certified() || chain.degree() != degree)
    throw Error(ErrorKind::InvalidArgument, "attached chain must be certified and of equal degree");
  std::call_once(cache_->once, [&] {
    cache_->order = chain.order();
    cache_->chain.emplace(std::move(chain));
  });
}

const StabilizerChain& Group::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain.emplace(StabilizerChain::build_ss(generators_, degree_));
    cache_->order = cache_->chain->order();
  });
  return *cache_->chain;
}

const BigInt& Group::order() const {
  chain();
  return cache_->order;
}

bool Group::contains_group(const Group& sub) const {
  for (const auto& g : sub.generators())
    if (!contains(g)) return false;
  return true;
}

bool Group::is_normalized_by(const Group& over) const {
  for (const auto& h : generators_)
    for (const auto& g : over.generators())
      if (!contains(conjugate(h, g))) return false;
  return true;
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

Group join(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "join of unequal degrees");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  if (a.generators().empty()) return b;
  if (b.generators().empty()) return a;
  auto chain = StabilizerChain::extend_ss(a.chain(), b.generators());
  return Group(a.degree(), std::move(gens), std::move(chain));
}

}  // namespace permgen
