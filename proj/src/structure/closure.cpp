#include <deque>

#include "internal.hpp"
#include "permgen/errors.hpp"
#include "permgen/structure.hpp"

namespace permgen {

Group normal_closure_over(const Group& g, const Group& base, std::span<const Permutation> seeds,
                          const std::optional<BigInt>& bound) {
  StabilizerChain chain = base.chain();
  std::vector<Permutation> gens = base.generators();
  std::deque<Permutation> pending(seeds.begin(), seeds.end());
  while (!pending.empty()) {
    if (bound && chain.order() >= *bound) break;
    Permutation x = std::move(pending.front());
    pending.pop_front();
    if (chain.contains(x)) continue;
    chain.extend(x, bound);
    for (const auto& h : g.generators()) pending.push_back(conjugate(x, h));
    gens.push_back(std::move(x));
  }
  return Group(base.degree(), std::move(gens), std::move(chain));
}

Group normal_closure(const Group& g, std::span<const Permutation> seeds) {
  for (const auto& s : seeds)
    if (s.degree() != g.degree() || !g.contains(s))
      throw Error(ErrorKind::SeedNotInGroup, "seed " + print_cycles(s) + " is not in the group");
  return normal_closure_over(g, Group::trivial(g.degree()), seeds, g.order());
}

Group derived_subgroup(const Group& g) {
  std::vector<Permutation> seeds;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  return normal_closure_over(g, Group::trivial(g.degree()), seeds, g.order());
}

std::vector<Group> derived_series(const Group& g) {
  Rng rng(0x5eed);
  std::vector<Group> series{g};
  while (!series.back().is_trivial()) {
    const Group& top = series.back();
    Group small(top.degree(), detail::generators_mod(top, Group::trivial(top.degree()), rng),
                top.chain());
    Group next = derived_subgroup(small);
    if (next.order() == top.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<std::vector<Point>> orbits(const Group& g) {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(g.degree(), 0);
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& h : g.generators()) {
        const Point y = h[orbit[i]];
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace detail {

std::vector<Permutation> generators_mod(const Group& upper, const Group& lower, Rng& rng) {
  const BigInt& target = upper.order();
  StabilizerChain chain = lower.chain();
  std::vector<Permutation> out;
  // Small given generating sets are kept as they are.
  if (upper.generators().size() <= 4) {
    for (const auto& x : upper.generators())
      if (chain.order() < target && chain.extend(x, target)) out.push_back(x);
    return out;
  }
  while (chain.order() < target) {
    Permutation x = upper.chain().random_element(rng);
    if (chain.extend(x, target)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail
}  // namespace permgen
