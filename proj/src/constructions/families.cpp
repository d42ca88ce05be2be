#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "permgen/constructions.hpp"
#include "permgen/errors.hpp"

namespace permgen {
namespace {

Permutation from_map(std::size_t degree, auto&& image) {
  std::vector<Point> images(degree);
  for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Point>(image(x));
  return Permutation::from_images(std::move(images));
}

// Cycle (first .. last) as 0-based points, fixing everything else.
Permutation range_cycle(std::size_t degree, std::size_t first, std::size_t last) {
  return from_map(degree, [&](std::size_t x) {
    if (x < first || x > last) return x;
    return x == last ? first : x + 1;
  });
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace

Group symmetric_group(std::size_t n) {
  require(n >= 1, "sym needs at least one point");
  if (n == 1) return Group::trivial(1);
  return Group(n, {range_cycle(n, 0, n - 1), range_cycle(n, 0, 1)});
}

Group alternating_group(std::size_t n) {
  require(n >= 1, "alt needs at least one point");
  if (n < 3) return Group::trivial(n);
  std::vector<Permutation> gens{range_cycle(n, 0, 2)};
  if (n > 3) gens.push_back(n % 2 == 1 ? range_cycle(n, 0, n - 1) : range_cycle(n, 1, n - 1));
  return Group(n, std::move(gens));
}

Group cyclic_group(std::size_t n) {
  require(n >= 1, "cyclic needs at least one point");
  return Group(n, {range_cycle(n, 0, n - 1)});
}

Group dihedral_group(std::size_t n) {
  require(n >= 1, "dihedral needs n >= 1");
  if (n == 1) return cyclic_group(2);
  if (n == 2) return Group(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  return Group(n, {range_cycle(n, 0, n - 1), from_map(n, [n](std::size_t x) { return (n - x) % n; })});
}

Group psl_3_2() {
  Group g(7, {parse_cycles("(1 2 4 3 6 7 5)", 7), parse_cycles("(1 3)(5 7)", 7)});
  if (g.order() != 168) throw Error(ErrorKind::InternalInconsistency, "L3(2) generators wrong");
  return g;
}

Group quaternion_group() {
  return Group(8, {parse_cycles("(1 2 5 6)(3 8 7 4)", 8), parse_cycles("(1 3 5 7)(2 4 6 8)", 8)});
}

Group direct_product(const std::vector<Group>& factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) gens.push_back(shift(g, offset, degree));
    offset += f.degree();
  }
  return Group(degree, std::move(gens));
}

Group direct_power(const Group& g, std::size_t k) {
  require(k >= 1, "direct_power needs k >= 1");
  return direct_product(std::vector<Group>(k, g));
}

Group wreath_product(const Group& g, const Group& h) {
  const std::size_t m = g.degree();
  const std::size_t k = h.degree();
  const std::size_t degree = m * k;
  std::vector<Permutation> gens;
  // One copy of the base generators per orbit of the top group suffices.
  std::vector<char> seen(k, 0);
  for (std::size_t b = 0; b < k; ++b) {
    if (seen[b]) continue;
    std::vector<std::size_t> queue{b};
    seen[b] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& t : h.generators())
        if (!seen[t[static_cast<Point>(queue[i])]]) {
          seen[t[static_cast<Point>(queue[i])]] = 1;
          queue.push_back(t[static_cast<Point>(queue[i])]);
        }
    for (const auto& x : g.generators()) gens.push_back(shift(x, b * m, degree));
  }
  for (const auto& t : h.generators())
    gens.push_back(from_map(degree, [&](std::size_t x) {
      return static_cast<std::size_t>(t[static_cast<Point>(x / m)]) * m + x % m;
    }));
  return Group(degree, std::move(gens));
}

Group crown_inversion(std::size_t p, std::size_t k) {
  require(p >= 2 && k >= 1, "crown_inversion needs p >= 2 and k >= 1");
  const std::size_t degree = p * k;
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < k; ++j) gens.push_back(range_cycle(degree, j * p, j * p + p - 1));
  gens.push_back(from_map(degree, [p](std::size_t x) {
    const std::size_t base = x - x % p;
    return base + (p - x % p) % p;
  }));
  return Group(degree, std::move(gens));
}

Group parse_group_text(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(line_start, end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      line = line.substr(first);
      line = line.substr(0, line.find_last_not_of(" \t\r") + 1);
      if (!degree) {
        std::istringstream in{std::string(line)};
        std::string word;
        std::size_t n = 0;
        std::string rest;
        if (!(in >> word >> n) || word != "degree" || (in >> rest))
          throw ParseError(ErrorKind::SyntaxError, line_start + first,
                           "expected 'degree n' as the first line");
        degree = n;
      } else {
        try {
          gens.push_back(parse_cycles(line, *degree));
        } catch (const ParseError& e) {
          throw ParseError(e.kind(), line_start + first + e.position(), "bad generator");
        }
      }
    }
    line_start = end + 1;
  }
  if (!degree) throw ParseError(ErrorKind::SyntaxError, 0, "missing 'degree n' line");
  return Group(*degree, std::move(gens));
}

Group read_group_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_group_text(text.str());
}

}  // namespace permgen
