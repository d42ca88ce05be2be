#include <numeric>
#include <unordered_map>

#include "fp_module.hpp"
#include "internal.hpp"
#include "permgen/errors.hpp"
#include "permgen/structure.hpp"

namespace permgen {
namespace {

constexpr std::size_t kExhaustiveLayerLimit = 10000;
constexpr std::size_t kFewGenerators = 8;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned log_exact(BigInt n, std::uint64_t p) {
  unsigned l = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++l;
  }
  if (n != 1) throw Error(ErrorKind::InternalInconsistency, "layer order is not a prime power");
  return l;
}

struct Layer {
  Group top;
  bool abelian = false;
  std::uint64_t p = 0;
  unsigned l = 0;
};

class Refiner {
 public:
  Refiner(const Group& g, Rng& rng) : g_(g), rng_(rng), degree_(g.degree()) {}

  std::vector<Layer> layers;

  void refine(const Group& lower, const Group& upper) {
    if (upper.order() == lower.order()) return;
    const auto gens = detail::generators_mod(upper, lower, rng_);
    std::vector<Permutation> comms;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
    Group c = normal_closure_over(Group(degree_, gens), lower, comms, upper.order());
    if (c.order() == upper.order()) return perfect(lower, upper, gens);
    if (c.order() > lower.order()) refine(lower, c);
    abelian(c, upper, gens);
  }

  // upper/lower abelian, generated modulo lower by gens.
  void abelian(const Group& lower, const Group& upper, const std::vector<Permutation>& gens) {
    if (upper.order() == lower.order()) return;
    const BigInt index = upper.order() / lower.order();
    const std::uint64_t p = prime_divisors(index).front();
    std::vector<Permutation> powers;
    for (const auto& x : gens) powers.push_back(power(x, p));
    StabilizerChain chain = lower.chain();
    std::vector<Permutation> kept = lower.generators();
    for (const auto& y : powers)
      if (chain.extend(y)) kept.push_back(y);
    if (chain.order() > lower.order()) {
      Group middle(degree_, std::move(kept), std::move(chain));
      abelian(lower, middle, powers);
      return elementary(middle, upper, gens, p);
    }
    elementary(lower, upper, gens, p);
  }

  // upper/lower elementary abelian of exponent p.
  void elementary(const Group& lower, const Group& upper, const std::vector<Permutation>& gens,
                  std::uint64_t p) {
    const unsigned l = log_exact(upper.order() / lower.order(), p);
    if (l == 0) return;
    if (l == 1) {
      layers.push_back({upper, true, p, 1});
      return;
    }
    // Basis e_1..e_l with chains lower = L_0 < L_1 < ... < L_l = upper.
    std::vector<Permutation> basis;
    std::vector<StabilizerChain> chains{lower.chain()};
    for (const auto& x : gens) {
      if (basis.size() == l) break;
      if (chains.back().contains(x)) continue;
      StabilizerChain next = chains.back();
      next.extend(x);
      chains.push_back(std::move(next));
      basis.push_back(x);
    }
    if (basis.size() != l)
      throw Error(ErrorKind::InternalInconsistency, "layer generators do not span the layer");
    std::vector<Permutation> inverses;
    for (const auto& e : basis) inverses.push_back(e.inverse());

    auto coordinates = [&](Permutation y) {
      detail::Vec c(l, 0);
      for (std::size_t i = l; i-- > 0;) {
        std::uint64_t k = 0;
        while (!chains[i].contains(y)) {
          if (++k == p) throw Error(ErrorKind::LayerNotElementaryAbelian, "layer has exponent above p");
          y *= inverses[i];
        }
        c[i] = static_cast<std::uint32_t>(k);
      }
      return c;
    };

    const detail::PrimeField field(p);
    std::vector<detail::Mat> action;
    for (const auto& h : g_.generators()) {
      detail::Mat m;
      for (const auto& e : basis) m.push_back(coordinates(conjugate(e, h)));
      action.push_back(std::move(m));
    }
    const detail::Mat sub = detail::minimal_submodule(field, action, l, rng_);
    if (sub.size() == l) {
      layers.push_back({upper, true, p, l});
      return;
    }
    StabilizerChain chain = lower.chain();
    std::vector<Permutation> kept = lower.generators();
    BigInt target = lower.order();
    for (std::size_t i = 0; i < sub.size(); ++i) target *= p;
    for (const auto& v : sub) {
      Permutation x(degree_);
      for (std::size_t i = 0; i < l; ++i)
        if (v[i] != 0) x *= power(basis[i], v[i]);
      if (chain.extend(x, target)) kept.push_back(std::move(x));
    }
    Group minimal(degree_, std::move(kept), std::move(chain));
    layers.push_back({minimal, true, p, static_cast<unsigned>(sub.size())});
    elementary(minimal, upper, gens, p);
  }

  // upper/lower perfect: find a proper normal subgroup in between, or prove
  // there is none.
  void perfect(const Group& lower, const Group& upper, const std::vector<Permutation>& gens) {
    const BigInt index = upper.order() / lower.order();
    auto split = [&](const Permutation& x) {
      const Permutation seeds[] = {x};
      Group n = normal_closure_over(g_, lower, seeds, upper.order());
      if (n.order() == upper.order()) return false;
      refine(lower, n);
      refine(n, upper);
      return true;
    };

    if (index <= kExhaustiveLayerLimit) {
      const auto& lc = lower.chain();
      std::vector<Permutation> reps{lc.canonical_coset_rep(Permutation(degree_))};
      std::unordered_map<Permutation, std::size_t, PermutationHash> index_of{{reps[0], 0}};
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (const auto& s : gens) {
          Permutation y = lc.canonical_coset_rep(reps[i] * s);
          if (index_of.emplace(y, reps.size()).second) reps.push_back(std::move(y));
        }
      if (reps.size() != index)
        throw Error(ErrorKind::InternalInconsistency, "coset enumeration of a layer is incomplete");
      // Classes under conjugation by the layer itself, and by g when g has
      // few generators. Any partition finer than the g-classes will do.
      std::vector<Permutation> conjugators = gens;
      if (g_.generators().size() <= kFewGenerators)
        conjugators.insert(conjugators.end(), g_.generators().begin(), g_.generators().end());
      std::vector<std::size_t> parent(reps.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (const auto& h : conjugators) {
          const std::size_t j = index_of.at(lc.canonical_coset_rep(conjugate(reps[i], h)));
          const std::size_t a = find(i), b = find(j);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      // Every nontrivial normal subgroup has an element of prime order.
      for (std::size_t i = 1; i < reps.size(); ++i) {
        if (find(i) != i) continue;
        std::uint64_t k = 1;
        for (Permutation y = reps[i]; !lc.contains(y); y *= reps[i]) ++k;
        if (is_prime(k) && split(reps[i])) return;
      }
      layers.push_back({upper, false, 0, 0});
      return;
    }

    const auto budget = 64 * static_cast<std::uint64_t>(std::ceil(log_big(upper.order()) / std::log(2.0)));
    for (std::uint64_t t = 0; t < budget; ++t) {
      Permutation x = upper.chain().random_element(rng_);
      if (!lower.contains(x) && split(x)) return;
    }
    throw Error(ErrorKind::RefinementFailed,
                "could not certify a non-abelian layer of order " + to_string(index) +
                    " as minimal normal");
  }

 private:
  const Group& g_;
  Rng& rng_;
  std::size_t degree_;
};

Group join_normal(const Group& a, const Group& b) {
  if (b.order() == 1) return a;
  if (a.contains_group(b)) return a;
  return join(a, b);
}

std::vector<Group> seed_series(const Group& g, SeriesOrdering ordering) {
  const detail::KernelPlan plan(g);
  std::vector<Group> members;
  if (ordering == SeriesOrdering::AbelianHigh) {
    const auto derived = derived_series(g);
    for (std::size_t i = 0; i + 1 < derived.size(); ++i)
      for (const auto& x : plan.intersections(derived[i]))
        members.push_back(join_normal(derived[i + 1], x));
    for (const auto& x : plan.intersections(derived.back())) members.push_back(x);
  } else {
    const auto kernels = plan.intersections(g);
    for (std::size_t j = 0; j + 1 < kernels.size(); ++j)
      for (const auto& y : derived_series(kernels[j]))
        members.push_back(join_normal(kernels[j + 1], y));
    members.push_back(kernels.back());
  }
  std::vector<Group> out;
  for (auto& m : members)
    if (out.empty() || m.order() < out.back().order()) out.push_back(std::move(m));
  if (!out.back().is_trivial()) out.push_back(Group::trivial(g.degree()));
  std::reverse(out.begin(), out.end());
  return out;
}

ChiefSeries assemble(const Group& g, std::vector<Layer> layers, SeriesOrdering ordering) {
  ChiefSeries series;
  series.ordering = ordering;
  series.subgroups.push_back(Group::trivial(g.degree()));
  for (auto& layer : layers) {
    ChiefFactorInfo info;
    info.order = layer.top.order() / series.subgroups.back().order();
    info.abelian = layer.abelian;
    info.p = layer.p;
    info.l = layer.l;
    series.factors.push_back(std::move(info));
    series.subgroups.push_back(std::move(layer.top));
  }
  // The top member is g itself, with g's own generators.
  if (!series.factors.empty()) series.subgroups.back() = g;
  for (std::size_t k = 1; k <= series.length(); ++k) {
    auto& f = series.factors[k - 1];
    f.delta_prime = delta_prime(series, k);
    f.t_prime = t_prime(f.order, f.delta_prime);
  }
  return series;
}

}  // namespace

const ChiefFactorInfo& ChiefSeries::factor(std::size_t k) const {
  if (k < 1 || k > factors.size())
    throw Error(ErrorKind::IndexOutOfRange, "no chief factor " + std::to_string(k));
  return factors[k - 1];
}

std::vector<Group> refine_abelian_layer(const Group& g, const Group& upper, const Group& lower,
                                        Rng& rng) {
  if (!upper.contains_group(lower))
    throw Error(ErrorKind::LayerNotNormal, "lower subgroup is not contained in the upper one");
  if (!upper.is_normalized_by(g) || !lower.is_normalized_by(g))
    throw Error(ErrorKind::LayerNotNormal, "layer bounds are not normal");
  if (upper.order() == lower.order())
    throw Error(ErrorKind::LayerNotElementaryAbelian, "layer is trivial");
  const BigInt index = upper.order() / lower.order();
  std::uint64_t p = 0;
  unsigned l = 0;
  if (!prime_power(index, p, l))
    throw Error(ErrorKind::LayerNotElementaryAbelian, "layer order is not a prime power");
  const auto& gens = upper.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!lower.contains(power(gens[i], p)))
      throw Error(ErrorKind::LayerNotElementaryAbelian, "layer has exponent above p");
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!lower.contains(commutator(gens[i], gens[j])))
        throw Error(ErrorKind::LayerNotElementaryAbelian, "layer is not abelian");
  }
  Refiner r(g, rng);
  r.elementary(lower, upper, detail::generators_mod(upper, lower, rng), p);
  std::vector<Group> out;
  for (auto& layer : r.layers) out.push_back(std::move(layer.top));
  return out;
}

ChiefSeries chief_series(const Group& g, SeriesOrdering ordering, Rng& rng) {
  const auto seeded = seed_series(g, ordering);
  Refiner r(g, rng);
  for (std::size_t i = 0; i + 1 < seeded.size(); ++i) r.refine(seeded[i], seeded[i + 1]);
  return assemble(g, std::move(r.layers), ordering);
}

ChiefSeries chief_series(const Group& g, SeriesOrdering ordering) {
  Rng rng(0);
  return chief_series(g, ordering, rng);
}

std::size_t delta_prime(const ChiefSeries& series, std::size_t k) {
  const BigInt& order = series.factor(k).order;
  std::size_t count = 0;
  for (std::size_t j = k; j <= series.length(); ++j)
    if (series.factors[j - 1].order == order) ++count;
  return count;
}

std::size_t t_prime(const BigInt& order, std::size_t delta) {
  if (order < 2 || delta < 1)
    throw Error(ErrorKind::InvalidArgument, "t' needs a factor order >= 2 and delta >= 1");
  // m >= 8/5 + log_N(delta)  <=>  N^(5m - 8) >= delta^5.
  BigInt d5 = 1;
  for (int i = 0; i < 5; ++i) d5 *= delta;
  std::size_t m = 2;
  BigInt lhs = order * order;  // N^(5*2 - 8)
  const BigInt step = order * order * order * order * order;
  while (lhs < d5) {
    lhs *= step;
    ++m;
  }
  return m;
}

}  // namespace permgen
