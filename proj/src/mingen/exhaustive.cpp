#include "../bsgs/cosets.hpp"
#include "permgen/errors.hpp"
#include "permgen/mingen.hpp"

namespace permgen {

using detail::Cosets;

std::optional<std::vector<Permutation>> exhaustive_search(LiftState& s, std::size_t k,
                                                          bool orbit_reduce) {
  if (k == 0 || k > s.u()) throw Error(ErrorKind::IndexOutOfRange, "no factor " + std::to_string(k));
  const Group& lower = s.series.subgroups[k - 1];
  const Group& upper = s.series.subgroups[k];
  const std::size_t d = s.d();
  BigInt total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= s.series.factor(k).order;
  if (total > s.options.exhaustive_cap)
    throw Error(ErrorKind::CapExceeded, "sweep of " + to_string(total) + " tuples");

  const Cosets cosets(upper, lower, orbit_reduce);
  const std::size_t n = cosets.size();
  const auto count = static_cast<std::size_t>(total);

  // conj[i][m]: the coset of (m^-1)^{g_i}.
  std::vector<std::vector<std::uint32_t>> conj(d);
  std::vector<std::uint32_t> movers;
  if (orbit_reduce) {
    for (const auto& x : cosets.steps()) movers.push_back(cosets.index(x));
    for (std::size_t i = 0; i < d; ++i) {
      const Permutation gi_inv = s.gens[i].inverse();
      conj[i].assign(n, 0);
      for (std::uint32_t m : movers) {
        conj[i][m] = cosets.index(gi_inv * cosets.rep(m).inverse() * s.gens[i]);
      }
    }
  }

  auto decode = [&](std::size_t code, std::vector<std::uint32_t>& digits) {
    for (std::size_t i = 0; i < d; ++i) {
      digits[i] = static_cast<std::uint32_t>(code % n);
      code /= n;
    }
  };
  auto encode = [&](const std::vector<std::uint32_t>& digits) {
    std::size_t code = 0;
    for (std::size_t i = d; i-- > 0;) code = code * n + digits[i];
    return code;
  };

  std::vector<bool> seen(orbit_reduce ? count : 0);
  std::vector<std::uint32_t> digits(d), image(d);
  std::vector<std::size_t> queue;
  for (std::size_t code = 0; code < count; ++code) {
    if (orbit_reduce) {
      if (seen[code]) continue;
      seen[code] = true;
      queue.assign(1, code);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        decode(queue[q], digits);
        for (std::uint32_t m : movers) {
          for (std::size_t i = 0; i < d; ++i)
            image[i] = cosets.mul(cosets.mul(conj[i][m], digits[i]), m);
          const std::size_t next = encode(image);
          if (!seen[next]) {
            seen[next] = true;
            queue.push_back(next);
          }
        }
      }
      s.stats.exhaustive_candidates += queue.size();
    } else {
      ++s.stats.exhaustive_candidates;
    }
    decode(code, digits);
    std::vector<Permutation> candidate, tuple;
    for (std::size_t i = 0; i < d; ++i) {
      tuple.push_back(cosets.rep(digits[i]));
      candidate.push_back(s.gens[i] * tuple.back());
    }
    ++s.stats.exhaustive_tests;
    if (generates_modulo(candidate, lower, s.group, TestStrategy::SS, s.stats, s.rng))
      return tuple;
  }
  return std::nullopt;
}

}  // namespace permgen
