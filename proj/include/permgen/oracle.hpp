#pragma once

// Brute-force ground truth for small groups.

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "permgen/group.hpp"
#include "permgen/structure.hpp"

namespace permgen {

using Fraction = boost::rational<std::int64_t>;

/// All elements, ordered lexicographically by their images of the base.
/// Errors: CapExceeded when |g| > cap.
std::vector<Permutation> enumerate_elements(const Group& g, std::size_t cap = 5000);

/// d(g) by brute force: subgroups generated by m elements are grown from
/// those generated by m - 1, adding one element per coset, and kept up to
/// conjugacy.
/// Errors: CapExceeded (|g| > 5000, or more than 200000 subgroups met),
/// NotFoundWithin (d(g) > max_size).
std::size_t oracle_min_gen(const Group& g, std::size_t max_size = 4);

/// Checks 1 = subgroups[0] < ... < subgroups.back() = g element by element:
/// each member is normal and every element of a factor outside the lower
/// member has the whole upper member as normal closure over the lower one.
/// Errors: CapExceeded when a factor has more than 10^4 elements.
bool verify_chief_series(const Group& g, const std::vector<Group>& subgroups);
bool verify_chief_series(const Group& g, const ChiefSeries& series);

/// Fraction of ordered pairs (a, b) with <a, b> = g.
/// Errors: CapExceeded when |g| > 400.
Fraction generating_pair_density(const Group& g);

}  // namespace permgen
