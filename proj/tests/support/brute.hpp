#pragma once

// Test-only brute force, independent of stabilizer chains.

#include <deque>
#include <functional>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "permgen/permutation.hpp"
#include "permgen/random.hpp"

namespace permgen::testing {

inline std::vector<Permutation> brute_elements(const std::vector<Permutation>& gens,
                                               std::size_t degree, std::size_t cap = 1u << 20) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id(degree);
  seen.insert(id);
  queue.push_back(id);
  std::vector<Permutation> out{id};
  while (!queue.empty() && out.size() <= cap) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        out.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

inline std::size_t brute_order(const std::vector<Permutation>& gens, std::size_t degree) {
  return brute_elements(gens, degree).size();
}

inline Permutation random_permutation(std::size_t degree, Rng& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

inline Permutation perm(std::string_view cycles, std::size_t degree) {
  return parse_cycles(cycles, degree);
}

inline std::vector<Point> one_based(const Permutation& p) {
  std::vector<Point> out;
  for (Point x : p.images()) out.push_back(x + 1);
  return out;
}

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

inline ElementSet brute_set(const std::vector<Permutation>& gens, std::size_t degree) {
  auto all = brute_elements(gens, degree);
  return ElementSet(all.begin(), all.end());
}

/// Checks by enumeration that subgroups[0] = 1 < ... < subgroups.back() =
/// <g> are normal in <g> and each factor is minimal normal in the quotient.
inline bool brute_is_chief_series(const std::vector<std::vector<Permutation>>& subgroups,
                                  const std::vector<Permutation>& g, std::size_t degree) {
  const auto group = brute_elements(g, degree);
  std::vector<ElementSet> sets;
  for (const auto& gens : subgroups) sets.push_back(brute_set(gens, degree));
  if (sets.front().size() != 1 || sets.back().size() != group.size()) return false;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (const auto& x : subgroups[k])
      for (const auto& h : g)
        if (!sets[k].count(h.inverse() * x * h)) return false;
    if (k == 0) continue;
    if (sets[k].size() <= sets[k - 1].size()) return false;
    for (const auto& x : sets[k - 1])
      if (!sets[k].count(x)) return false;
    // Minimality: every element outside the lower member generates the
    // upper one together with the lower one, as a normal subgroup.
    ElementSet tested;
    for (const auto& x : sets[k]) {
      if (sets[k - 1].count(x) || tested.count(x)) continue;
      std::vector<Permutation> gens = subgroups[k - 1];
      ElementSet cls;
      for (const auto& h : group) cls.insert(h.inverse() * x * h);
      for (const auto& c : cls) {
        gens.push_back(c);
        tested.insert(c);
      }
      if (brute_order(gens, degree) != sets[k].size()) return false;
    }
  }
  return true;
}

/// Least m <= max_m such that some m elements generate <g>, by trying all
/// m-subsets of the elements; max_m + 1 when none does.
inline std::size_t brute_min_gens(const std::vector<Permutation>& g, std::size_t degree,
                                  std::size_t max_m = 3) {
  const auto all = brute_elements(g, degree);
  if (all.size() == 1) return 0;
  std::vector<std::size_t> pick;
  for (std::size_t m = 1; m <= max_m; ++m) {
    pick.assign(m, 0);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
      if (depth == m) {
        std::vector<Permutation> gens;
        for (auto i : pick) gens.push_back(all[i]);
        return brute_order(gens, degree) == all.size();
      }
      for (std::size_t i = from; i < all.size(); ++i) {
        pick[depth] = i;
        if (rec(depth + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(0, 1)) return m;
  }
  return max_m + 1;
}

}  // namespace permgen::testing
