#include <numeric>

#include "internal.hpp"
#include "permgen/structure.hpp"

namespace permgen {
namespace {

constexpr std::uint32_t kNoBlock = ~std::uint32_t{0};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  std::vector<std::uint32_t> parent;
};

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Block system generated by the images of `block`, numbered by discovery.
std::vector<std::uint32_t> system_of(const Group& g, const std::vector<Point>& block) {
  std::vector<std::uint32_t> block_of(g.degree(), kNoBlock);
  std::vector<std::vector<Point>> blocks{block};
  for (Point x : block) block_of[x] = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const auto& h : g.generators()) {
      const Point first = h[blocks[b].front()];
      if (block_of[first] != kNoBlock) continue;
      std::vector<Point> image;
      for (Point x : blocks[b]) {
        image.push_back(h[x]);
        block_of[h[x]] = static_cast<std::uint32_t>(blocks.size());
      }
      blocks.push_back(std::move(image));
    }
  return block_of;
}

}  // namespace

std::vector<Point> minimal_block(std::span<const Permutation> gens, std::size_t degree,
                                 std::span<const Point> seed) {
  UnionFind uf(degree);
  std::vector<std::pair<Point, Point>> queue;
  for (std::size_t i = 1; i < seed.size(); ++i) {
    const auto a = uf.find(seed[0]), b = uf.find(seed[i]);
    if (a == b) continue;
    uf.parent[b] = a;
    queue.emplace_back(seed[0], seed[i]);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [x, y] = queue[i];
    for (const auto& h : gens) {
      const auto a = uf.find(h[x]), b = uf.find(h[y]);
      if (a == b) continue;
      uf.parent[b] = a;
      queue.emplace_back(h[x], h[y]);
    }
  }
  std::vector<Point> out;
  const auto root = uf.find(seed[0]);
  for (Point x = 0; x < degree; ++x)
    if (uf.find(x) == root) out.push_back(x);
  return out;
}

std::vector<std::vector<std::uint32_t>> block_chain(const Group& g,
                                                    const std::vector<Point>& orbit) {
  std::vector<std::vector<std::uint32_t>> systems;
  if (is_prime(orbit.size()) || orbit.size() < 4) return systems;
  std::vector<Point> delta{orbit.front()};
  while (delta.size() < orbit.size()) {
    std::vector<char> inside(g.degree(), 0);
    for (Point x : delta) inside[x] = 1;
    std::vector<Point> best = orbit;
    for (Point gamma : orbit) {
      if (inside[gamma]) continue;
      std::vector<Point> seed = delta;
      seed.push_back(gamma);
      auto b = minimal_block(g.generators(), g.degree(), seed);
      if (b.size() < best.size()) best = std::move(b);
      if (best.size() == 2 * delta.size()) break;
    }
    if (best.size() == orbit.size()) break;
    systems.push_back(system_of(g, best));
    delta = std::move(best);
  }
  std::reverse(systems.begin(), systems.end());
  return systems;
}

std::vector<Group> kernel_series(const Group& g) {
  return detail::KernelPlan(g).intersections(g);
}

namespace detail {

KernelPlan::KernelPlan(const Group& g) : degree_(g.degree()), augmented_(g.degree()) {
  for (const auto& orbit : orbits(g)) {
    if (orbit.size() == 1) continue;
    for (auto& block_of : block_chain(g, orbit)) {
      System s;
      s.offset = augmented_;
      for (Point x : orbit) {
        const auto b = block_of[x];
        if (b >= s.representative.size()) s.representative.resize(b + 1);
        s.representative[b] = x;
      }
      for (std::size_t b = 0; b < s.representative.size(); ++b)
        prefix_.push_back(static_cast<Point>(s.offset + b));
      augmented_ += s.representative.size();
      s.block_of = std::move(block_of);
      systems_.push_back(std::move(s));
      marks_.push_back(prefix_.size());
    }
    prefix_.insert(prefix_.end(), orbit.begin(), orbit.end());
    marks_.push_back(prefix_.size());
  }
}

Permutation KernelPlan::augment(const Permutation& x) const {
  std::vector<Point> images(augmented_);
  for (Point p = 0; p < degree_; ++p) images[p] = x[p];
  for (const auto& s : systems_)
    for (std::size_t b = 0; b < s.representative.size(); ++b)
      images[s.offset + b] = static_cast<Point>(s.offset + s.block_of[x[s.representative[b]]]);
  return Permutation::from_images_unchecked(std::move(images));
}

std::vector<Group> KernelPlan::intersections(const Group& x) const {
  std::vector<Group> out{x};
  auto push = [&](Group h) {
    if (h.order() < out.back().order()) out.push_back(std::move(h));
  };
  if (x.is_trivial()) return out;
  std::vector<Permutation> gens;
  for (const auto& h : x.generators()) gens.push_back(augment(h));
  ChainOptions opts;
  opts.base_prefix = prefix_;
  opts.target_order = x.order();
  const auto chain = StabilizerChain::build_ss(gens, augmented_, opts);
  for (std::size_t mark : marks_) {
    StabilizerChain tail = chain.tail(mark);
    if (augmented_ == degree_) {
      std::vector<Permutation> strong = tail.strong_generators();
      push(Group(degree_, std::move(strong), std::move(tail)));
      continue;
    }
    std::vector<Permutation> restricted;
    for (const auto& s : tail.strong_generators()) restricted.push_back(restrict_prefix(s, degree_));
    ChainOptions sub;
    for (Point b : tail.base())
      if (b < degree_) sub.base_prefix.push_back(b);
    sub.target_order = tail.order();
    auto rebuilt = StabilizerChain::build_ss(restricted, degree_, sub);
    push(Group(degree_, std::move(restricted), std::move(rebuilt)));
  }
  return out;
}

}  // namespace detail
}  // namespace permgen
