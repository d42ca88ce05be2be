#include "permgen/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "../bsgs/cosets.hpp"
#include "permgen/errors.hpp"

namespace permgen {
namespace {

constexpr std::size_t kMinGenCap = 5000;
constexpr std::size_t kDensityCap = 400;
constexpr std::size_t kFactorCap = 10000;
constexpr std::size_t kSubgroupCap = 200000;

void require_small(const Group& g, std::size_t cap) {
  if (g.order() > cap)
    throw Error(ErrorKind::CapExceeded,
                "group of order " + to_string(g.order()) + " exceeds " + std::to_string(cap));
}

struct Indexed {
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;

  explicit Indexed(const Group& g, std::size_t cap) : elements(enumerate_elements(g, cap)) {
    for (std::size_t i = 0; i < elements.size(); ++i)
      index.emplace(elements[i], static_cast<std::uint32_t>(i));
  }

  // Least element of each conjugacy class, with the class size.
  std::vector<std::pair<std::uint32_t, std::size_t>> classes(const Group& g) const {
    std::vector<bool> seen(elements.size());
    std::vector<std::pair<std::uint32_t, std::size_t>> out;
    std::vector<Permutation> inv;
    for (const auto& h : g.generators()) inv.push_back(h.inverse());
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
      if (seen[i]) continue;
      seen[i] = true;
      std::vector<std::uint32_t> orbit{i};
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (std::size_t j = 0; j < inv.size(); ++j) {
          const auto y = index.at(inv[j] * elements[orbit[q]] * g.generators()[j]);
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      out.emplace_back(i, orbit.size());
    }
    return out;
  }
};

bool generate(const std::vector<Permutation>& gens, const Group& g) {
  return Group(g.degree(), gens).order() == g.order();
}

}  // namespace

std::vector<Permutation> enumerate_elements(const Group& g, std::size_t cap) {
  require_small(g, cap);
  const StabilizerChain& chain = g.chain();
  const std::size_t depth = chain.base().size();
  std::vector<Permutation> out;
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t level,
                                                                  const Permutation& below) {
    if (level == 0) {
      out.push_back(below);
      return;
    }
    for (Point x : chain.orbit(level - 1)) walk(level - 1, below * chain.transversal(level - 1, x));
  };
  walk(depth, Permutation(g.degree()));
  std::sort(out.begin(), out.end(), [&](const Permutation& a, const Permutation& b) {
    for (Point p : chain.base())
      if (a[p] != b[p]) return a[p] < b[p];
    return false;
  });
  return out;
}

std::size_t oracle_min_gen(const Group& g, std::size_t max_size) {
  require_small(g, kMinGenCap);
  if (g.is_trivial()) return 0;
  const Indexed all(g, kMinGenCap);
  const std::size_t n = all.elements.size();
  const std::size_t words = (n + 63) / 64;

  // times[x][i]: index of element i times element x, filled on demand.
  std::vector<std::vector<std::uint32_t>> times(n);
  auto column = [&](std::uint32_t x) -> const std::vector<std::uint32_t>& {
    if (times[x].empty()) {
      times[x].resize(n);
      for (std::size_t i = 0; i < n; ++i) times[x][i] = all.index.at(all.elements[i] * all.elements[x]);
    }
    return times[x];
  };
  std::vector<std::vector<std::uint32_t>> conj;
  for (const auto& h : g.generators()) {
    const Permutation hi = h.inverse();
    std::vector<std::uint32_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = all.index.at(hi * all.elements[i] * h);
    conj.push_back(std::move(c));
  }

  struct Sub {
    std::vector<std::uint64_t> bits;
    std::vector<std::uint32_t> elements;
    std::vector<std::uint32_t> gens;
  };
  auto closure = [&](std::vector<std::uint32_t> gens) {
    Sub k{std::vector<std::uint64_t>(words), {0}, std::move(gens)};
    k.bits[0] = 1;
    for (std::size_t q = 0; q < k.elements.size(); ++q)
      for (std::uint32_t x : k.gens) {
        const std::uint32_t y = column(x)[k.elements[q]];
        if (!(k.bits[y / 64] >> (y % 64) & 1)) {
          k.bits[y / 64] |= std::uint64_t{1} << (y % 64);
          k.elements.push_back(y);
        }
      }
    return k;
  };
  auto key = [](const std::vector<std::uint64_t>& bits) {
    return std::string(reinterpret_cast<const char*>(bits.data()), bits.size() * 8);
  };

  // Records the conjugacy class of k; false when it was already known.
  std::unordered_set<std::string> seen;
  auto record = [&](const Sub& k) {
    if (!seen.insert(key(k.bits)).second) return false;
    if (seen.size() > kSubgroupCap)
      throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(kSubgroupCap) +
                                              " subgroups to examine");
    std::vector<std::vector<std::uint32_t>> queue{k.elements};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& c : conj) {
        std::vector<std::uint64_t> bits(words);
        std::vector<std::uint32_t> image;
        for (std::uint32_t e : queue[q]) {
          bits[c[e] / 64] |= std::uint64_t{1} << (c[e] % 64);
          image.push_back(c[e]);
        }
        if (seen.insert(key(bits)).second) queue.push_back(std::move(image));
      }
    return true;
  };

  std::vector<Sub> level{closure({})};
  record(level[0]);
  for (std::size_t m = 1; m <= max_size; ++m) {
    std::vector<Sub> next;
    for (const Sub& h : level) {
      std::vector<std::uint64_t> covered = h.bits;
      for (std::uint32_t x = 0; x < n; ++x) {
        if (covered[x / 64] >> (x % 64) & 1) continue;
        // <h, x> = <h, yx> for y in h: skip the rest of the coset.
        for (std::uint32_t y : h.elements) {
          const std::uint32_t z = column(x)[y];
          covered[z / 64] |= std::uint64_t{1} << (z % 64);
        }
        auto gens = h.gens;
        gens.push_back(x);
        Sub k = closure(std::move(gens));
        if (k.elements.size() == n) return m;
        if (record(k)) next.push_back(std::move(k));
      }
    }
    level = std::move(next);
  }
  throw Error(ErrorKind::NotFoundWithin,
              "no generating set of size at most " + std::to_string(max_size));
}

bool verify_chief_series(const Group& g, const std::vector<Group>& subgroups) {
  if (subgroups.size() < 2 || !subgroups.front().is_trivial() ||
      subgroups.back().order() != g.order() || !g.contains_group(subgroups.back()))
    return false;
  for (std::size_t k = 1; k < subgroups.size(); ++k) {
    const Group& lower = subgroups[k - 1];
    const Group& upper = subgroups[k];
    if (!upper.is_normalized_by(g) || !upper.contains_group(lower) ||
        upper.order() <= lower.order())
      return false;
    if (upper.order() / lower.order() > kFactorCap)
      throw Error(ErrorKind::CapExceeded, "factor " + std::to_string(k) + " of order " +
                                              to_string(upper.order() / lower.order()));
    const detail::Cosets cosets(upper, lower);
    std::vector<bool> done(cosets.size());
    done[0] = true;
    for (std::uint32_t r = 1; r < cosets.size(); ++r) {
      if (done[r]) continue;
      const Permutation seed[] = {cosets.rep(r)};
      if (normal_closure_over(g, lower, seed, upper.order()).order() != upper.order())
        return false;
      // Conjugates of the representative have the same closure.
      std::vector<std::uint32_t> orbit{r};
      done[r] = true;
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (const auto& h : g.generators()) {
          const auto y = cosets.index(h.inverse() * cosets.rep(orbit[q]) * h);
          if (!done[y]) {
            done[y] = true;
            orbit.push_back(y);
          }
        }
    }
  }
  return true;
}

bool verify_chief_series(const Group& g, const ChiefSeries& series) {
  return verify_chief_series(g, series.subgroups);
}

Fraction generating_pair_density(const Group& g) {
  require_small(g, kDensityCap);
  const Indexed all(g, kDensityCap);
  const auto n = static_cast<std::int64_t>(all.elements.size());
  std::int64_t count = 0;
  for (auto [i, size] : all.classes(g)) {
    std::int64_t partners = 0;
    for (const auto& b : all.elements)
      if (generate({all.elements[i], b}, g)) ++partners;
    count += partners * static_cast<std::int64_t>(size);
  }
  return Fraction(count, n * n);
}

}  // namespace permgen
