#include "permgen/chain.hpp"

#include <cmath>

#include "permgen/errors.hpp"

namespace permgen {
namespace {

std::size_t clean_sifts_required(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorKind::InvalidArgument, "error bound must lie in (0,1)");
  return static_cast<std::size_t>(std::ceil(std::log2(1.0 / epsilon))) + 16;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

void StabilizerChain::push_level(Point base_point) {
  Level level;
  level.base_point = base_point;
  level.label.assign(degree_, kNotInOrbit);
  level.label[base_point] = kRoot;
  level.orbit.push_back(base_point);
  level.checked.push_back(0);
  levels_.push_back(std::move(level));
  base_.push_back(base_point);
}

void StabilizerChain::add_generator_to_level(std::size_t index, std::uint32_t gen) {
  Level& level = levels_[index];
  level.gens.push_back(gen);
  const Permutation& s = strong_[gen];
  const std::size_t old_size = level.orbit.size();
  for (std::size_t i = 0; i < old_size; ++i) {
    const Point y = s[level.orbit[i]];
    if (level.label[y] == kNotInOrbit) {
      level.label[y] = static_cast<std::int32_t>(gen);
      level.orbit.push_back(y);
    }
  }
  for (std::size_t i = old_size; i < level.orbit.size(); ++i) {
    const Point x = level.orbit[i];
    for (std::uint32_t g : level.gens) {
      const Point y = strong_[g][x];
      if (level.label[y] == kNotInOrbit) {
        level.label[y] = static_cast<std::int32_t>(g);
        level.orbit.push_back(y);
      }
    }
  }
  level.checked.resize(level.orbit.size(), 0);
}

void StabilizerChain::add_strong(Permutation residue, std::size_t first, std::size_t last) {
  if (last == levels_.size()) push_level(static_cast<Point>(residue.first_moved_point()));
  const auto id = static_cast<std::uint32_t>(strong_.size());
  strong_inv_.push_back(residue.inverse());
  strong_.push_back(std::move(residue));
  for (std::size_t l = first; l <= last; ++l) add_generator_to_level(l, id);
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool StabilizerChain::reached(const std::optional<BigInt>& target) const {
  return target && order() >= *target;
}

Permutation StabilizerChain::transversal(std::size_t level, Point x) const {
  const Level& lv = levels_[level];
  if (lv.label[x] == kNotInOrbit)
    throw Error(ErrorKind::InvalidArgument, "point not in the basic orbit");
  std::vector<std::uint32_t> path;
  while (lv.label[x] != kRoot) {
    const auto s = static_cast<std::uint32_t>(lv.label[x]);
    path.push_back(s);
    x = strong_inv_[s][x];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u *= strong_[*it];
  return u;
}

StabilizerChain::Sift StabilizerChain::sift(Permutation g, std::size_t from_level) const {
  if (g.degree() != degree_)
    throw Error(ErrorKind::DegreeMismatch, "element degree " + std::to_string(g.degree()) +
                                               ", chain degree " + std::to_string(degree_));
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Point x = g[lv.base_point];
    if (lv.label[x] == kNotInOrbit) return {std::move(g), l};
    while (lv.label[x] != kRoot) {
      const auto s = static_cast<std::uint32_t>(lv.label[x]);
      g *= strong_inv_[s];
      x = strong_inv_[s][x];
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (!certified_)
    throw Error(ErrorKind::InvalidArgument, "exact membership needs a certified chain");
  return may_contain(g);
}

bool StabilizerChain::may_contain(const Permutation& g) const {
  return sift(g).residue.is_identity();
}

Permutation StabilizerChain::random_element(Rng& rng) const {
  Permutation g(degree_);
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const auto& orb = levels_[l].orbit;
    const Point x = orb[uniform_index(rng, orb.size())];
    if (x != levels_[l].base_point) g = transversal(l, x) * g;
  }
  return g;
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size()) return out;
  for (std::uint32_t id : levels_[level].gens) out.push_back(strong_[id]);
  return out;
}

StabilizerChain StabilizerChain::tail(std::size_t level) const {
  StabilizerChain out(degree_);
  out.certified_ = certified_;
  std::vector<std::int64_t> remap(strong_.size(), -1);
  auto id_of = [&](std::uint32_t id) {
    if (remap[id] < 0) {
      remap[id] = static_cast<std::int64_t>(out.strong_.size());
      out.strong_.push_back(strong_[id]);
      out.strong_inv_.push_back(strong_inv_[id]);
    }
    return static_cast<std::uint32_t>(remap[id]);
  };
  for (std::size_t l = level; l < levels_.size(); ++l) {
    Level lv = levels_[l];
    for (auto& g : lv.gens) g = id_of(g);
    for (auto& x : lv.label)
      if (x >= 0) x = static_cast<std::int32_t>(id_of(static_cast<std::uint32_t>(x)));
    out.base_.push_back(lv.base_point);
    out.levels_.push_back(std::move(lv));
  }
  return out;
}

bool StabilizerChain::absorb(const Permutation& g) {
  Sift r = sift(g);
  if (r.residue.is_identity()) return false;
  add_strong(std::move(r.residue), 0, r.level);
  return true;
}

void StabilizerChain::complete(const std::optional<BigInt>& target) {
  if (reached(target)) return;
  std::size_t upto = levels_.size();
  while (upto > 0) {
    const std::size_t level = upto - 1;
    bool restarted = false;
    for (std::size_t pos = 0; pos < levels_[level].orbit.size() && !restarted; ++pos) {
      if (levels_[level].checked[pos] == levels_[level].gens.size()) continue;
      const Point x = levels_[level].orbit[pos];
      const Permutation u = transversal(level, x);
      while (levels_[level].checked[pos] < levels_[level].gens.size()) {
        const std::uint32_t s = levels_[level].gens[levels_[level].checked[pos]++];
        const Point y = strong_[s][x];
        if (levels_[level].label[y] == static_cast<std::int32_t>(s) && strong_inv_[s][y] == x)
          continue;
        Sift r = sift(u * strong_[s], level);
        if (r.residue.is_identity()) continue;
        const std::size_t drop = r.level;
        add_strong(std::move(r.residue), level + 1, drop);
        if (reached(target)) return;
        upto = drop + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --upto;
  }
}

StabilizerChain StabilizerChain::build_ss(std::span<const Permutation> gens, std::size_t degree,
                                          const ChainOptions& opts) {
  StabilizerChain chain(degree);
  for (Point b : opts.base_prefix) chain.push_level(b);
  for (const auto& g : gens) {
    chain.absorb(g);
    if (chain.reached(opts.target_order)) break;
  }
  chain.complete(opts.target_order);
  chain.certified_ = true;
  return chain;
}

StabilizerChain StabilizerChain::build_rss(std::span<const Permutation> gens, std::size_t degree,
                                           double epsilon, Rng& rng, const ChainOptions& opts) {
  StabilizerChain chain(degree);
  for (Point b : opts.base_prefix) chain.push_level(b);
  return extend_rss(std::move(chain), gens, gens, epsilon, rng, opts.target_order);
}

StabilizerChain StabilizerChain::extend_ss(StabilizerChain start,
                                           std::span<const Permutation> extra,
                                           const std::optional<BigInt>& target_order) {
  if (!start.certified_)
    throw Error(ErrorKind::InvalidArgument, "extend_ss needs a certified start chain");
  for (const auto& g : extra) {
    start.absorb(g);
    if (start.reached(target_order)) break;
  }
  start.complete(target_order);
  return start;
}

StabilizerChain StabilizerChain::extend_rss(StabilizerChain start,
                                            std::span<const Permutation> extra,
                                            std::span<const Permutation> group_gens,
                                            double epsilon, Rng& rng,
                                            const std::optional<BigInt>& target_order) {
  const std::size_t needed = clean_sifts_required(epsilon);
  for (const auto& g : extra) start.absorb(g);
  if (start.reached(target_order)) {
    start.certified_ = true;
    return start;
  }
  ProductReplacement random(group_gens, start.degree_, rng);
  std::size_t clean = 0;
  while (clean < needed) {
    if (start.absorb(random.next())) {
      clean = 0;
      if (start.reached(target_order)) {
        start.certified_ = true;
        return start;
      }
    } else {
      ++clean;
    }
  }
  start.certified_ = false;
  return start;
}

bool StabilizerChain::extend(const Permutation& g, const std::optional<BigInt>& target_order) {
  if (!certified_) throw Error(ErrorKind::InvalidArgument, "extend needs a certified chain");
  if (!absorb(g)) return false;
  complete(target_order);
  return true;
}

Permutation StabilizerChain::canonical_coset_rep(const Permutation& x) const {
  if (!certified_)
    throw Error(ErrorKind::InvalidArgument, "coset representatives need a certified chain");
  Permutation y = x;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const auto& orb = levels_[l].orbit;
    Point best = orb.front();
    for (Point g : orb)
      if (y[g] < y[best]) best = g;
    if (best != levels_[l].base_point) y = transversal(l, best) * y;
  }
  return y;
}

}  // namespace permgen
