#include <algorithm>

#include "permgen/errors.hpp"
#include "permgen/mingen.hpp"

namespace permgen {
namespace {

BigInt prime_part(BigInt n, std::uint64_t p) {
  BigInt out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

// x^r with r the part of the order of x prime to p.
Permutation p_part(const Permutation& x, std::uint64_t p) {
  const BigInt ord = element_order(x);
  return power(x, static_cast<std::uint64_t>(ord / prime_part(ord, p)));
}

std::size_t log_p(BigInt n, std::uint64_t p) {
  std::size_t out = 0;
  for (; n > 1; n /= p) ++out;
  return out;
}

// A subset of the generators of p-group h independent modulo Phi(h).
std::vector<Permutation> burnside_basis(const Group& h, std::uint64_t p) {
  std::vector<Permutation> seeds;
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(power(gens[i], p));
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  }
  const Group frattini = normal_closure(h, seeds);
  StabilizerChain chain = frattini.chain();
  std::vector<Permutation> basis;
  for (const auto& x : gens) {
    if (chain.order() == h.order()) break;
    if (chain.contains(x)) continue;
    chain.extend(x, h.order());
    basis.push_back(x);
  }
  return basis;
}

}  // namespace

std::size_t abelianization_rank(const Group& g) {
  const Group derived = derived_subgroup(g);
  const BigInt index = g.order() / derived.order();
  std::size_t rank = 0;
  for (std::uint64_t p : prime_divisors(index)) {
    std::vector<Permutation> powers;
    for (const auto& x : g.generators()) powers.push_back(power(x, p));
    const Group below = normal_closure_over(g, derived, powers);
    rank = std::max(rank, log_p(g.order() / below.order(), p));
  }
  return rank;
}

std::optional<FastPath> fast_paths(const Group& g, const SolveOptions& opts, GenTestStats& stats,
                                   Rng& rng) {
  const std::size_t n = g.degree();
  std::vector<std::vector<Permutation>> bases;
  bool nilpotent = true;
  const auto primes = prime_divisors(g.order());
  for (std::uint64_t p : primes) {
    std::vector<Permutation> parts;
    for (const auto& x : g.generators()) {
      Permutation y = p_part(x, p);
      if (!y.is_identity()) parts.push_back(std::move(y));
    }
    Group sylow(n, std::move(parts));
    if (sylow.order() != prime_part(g.order(), p) || !sylow.is_normalized_by(g)) {
      nilpotent = false;
      break;
    }
    bases.push_back(burnside_basis(sylow, p));
  }

  if (nilpotent) {
    std::size_t d = 0;
    for (const auto& b : bases) d = std::max(d, b.size());
    FastPath out;
    for (std::size_t i = 0; i < d; ++i) {
      Permutation y(n);
      for (const auto& b : bases)
        if (i < b.size()) y *= b[i];
      out.gens.push_back(std::move(y));
    }
    out.method = d == 1 ? "cyclic" : primes.size() == 1 ? "p-group" : "nilpotent";
    return out;
  }

  const std::size_t ell = std::max<std::size_t>(2, abelianization_rank(g));
  for (unsigned attempt = 0; attempt < opts.quick_attempts; ++attempt) {
    std::vector<Permutation> candidate;
    for (std::size_t i = 0; i < ell; ++i) candidate.push_back(g.chain().random_element(rng));
    stats.random_elements += ell;
    if (generates(candidate, g, TestStrategy::RSS, stats, rng, opts.rss_epsilon))
      return FastPath{std::move(candidate), "quick"};
  }
  return std::nullopt;
}

}  // namespace permgen
