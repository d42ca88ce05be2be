#include <cmath>

#include "permgen/errors.hpp"
#include "permgen/mingen.hpp"

namespace permgen {
namespace {

const Group& lower_of(const LiftState& s, std::size_t k) { return s.series.subgroups[k - 1]; }
const Group& upper_of(const LiftState& s, std::size_t k) { return s.series.subgroups[k]; }

bool test_mod(LiftState& s, std::size_t k, const std::vector<Permutation>& candidate,
              TestStrategy strategy) {
  return generates_modulo(candidate, lower_of(s, k), s.group, strategy, s.stats, s.rng,
                          s.options.rss_epsilon);
}

Permutation random_in(LiftState& s, const Group& h) {
  ++s.stats.random_elements;
  return h.chain().random_element(s.rng);
}

std::vector<Permutation> lifted(LiftState& s, std::size_t k) {
  std::vector<Permutation> out;
  for (const auto& g : s.gens) out.push_back(g * random_in(s, upper_of(s, k)));
  return out;
}

class FactorLog {
 public:
  FactorLog(LiftState& s, std::size_t k) : s_(s), ss_(s.stats.ss_tests), rss_(s.stats.rss_tests) {
    rec_.factor = k;
    rec_.order = s.series.factor(k).order;
    rec_.abelian = s.series.factor(k).abelian;
  }
  void finish(std::string branch, std::uint64_t trials) {
    rec_.branch = std::move(branch);
    rec_.trials = trials;
    rec_.d_after = s_.d();
    rec_.ss_tests = s_.stats.ss_tests - ss_;
    rec_.rss_tests = s_.stats.rss_tests - rss_;
    s_.stats.per_factor.push_back(std::move(rec_));
  }

 private:
  LiftState& s_;
  std::uint64_t ss_, rss_;
  FactorRecord rec_;
};

void check_bound(const LiftState& s) {
  if (s.d() + s.k > s.u() + 1)
    throw Error(ErrorKind::InternalInconsistency,
                "more generators than the series allows at factor " + std::to_string(s.k + 1));
}

void require_at(const LiftState& s, std::size_t k) {
  if (k == 0 || k > s.u() || s.k != k)
    throw Error(ErrorKind::IndexOutOfRange, "lifting step at factor " + std::to_string(k) +
                                                " but the state is at " + std::to_string(s.k));
}

// Random tuples until one generates; returns the trial count.
template <class Draw>
std::uint64_t sample_until(LiftState& s, std::size_t k, Draw draw) {
  for (std::uint64_t trials = 1;; ++trials) {
    auto candidate = draw();
    if (test_mod(s, k, candidate, TestStrategy::RSS)) {
      s.gens = std::move(candidate);
      s.stats.sampling_trials.push_back(trials);
      return trials;
    }
  }
}

}  // namespace

LiftState top_factor_generators(const Group& g, ChiefSeries series, const SolveOptions& opts,
                                Rng rng, GenTestStats stats) {
  if (series.length() == 0)
    throw Error(ErrorKind::InvalidArgument, "the trivial group has no top factor");
  LiftState s{g, std::move(series), 0, {}, std::move(stats), std::move(rng), opts, true};
  const std::size_t u = s.u();
  s.k = u;
  FactorLog log(s, u);
  if (s.series.factor(u).abelian) {
    const Group& below = lower_of(s, u);
    for (const auto& x : g.generators())
      if (!below.contains(x)) {
        s.gens = {x};
        break;
      }
    s.k = u - 1;
    log.finish("top-abelian", 0);
    return s;
  }
  std::uint64_t trials = sample_until(s, u, [&] {
    return std::vector<Permutation>{random_in(s, g), random_in(s, g)};
  });
  s.k = u - 1;
  log.finish("top-nonabelian", trials);
  return s;
}

void lift_abelian(LiftState& s, std::size_t k) {
  require_at(s, k);
  const Group& lower = lower_of(s, k);
  const Group& upper = upper_of(s, k);
  FactorLog log(s, k);
  const std::uint64_t ss_before = s.stats.ss_tests;

  std::vector<Permutation> basis;
  StabilizerChain chain = lower.chain();
  for (const auto& x : upper.generators()) {
    if (chain.order() == upper.order()) break;
    if (chain.contains(x)) continue;
    chain.extend(x, upper.order());
    basis.push_back(x);
  }

  auto done = [&](std::string branch) {
    s.stats.abelian_ss_tests += s.stats.ss_tests - ss_before;
    s.k = k - 1;
    check_bound(s);
    log.finish(std::move(branch), 0);
  };

  if (test_mod(s, k, s.gens, TestStrategy::SS)) return done("abelian-unchanged");
  for (std::size_t i = 0; i < s.d(); ++i)
    for (const auto& e : basis) {
      auto candidate = s.gens;
      candidate[i] = candidate[i] * e;
      if (test_mod(s, k, candidate, TestStrategy::SS)) {
        s.gens = std::move(candidate);
        return done("abelian-case1");
      }
    }
  auto candidate = s.gens;
  candidate.push_back(basis.front());
  if (!test_mod(s, k, candidate, TestStrategy::SS))
    throw Error(ErrorKind::InternalInconsistency,
                "abelian factor " + std::to_string(k) + " admits no lift");
  s.gens = std::move(candidate);
  done("abelian-case2");
}

void lift_nonabelian(LiftState& s, std::size_t k) {
  require_at(s, k);
  const Group& upper = upper_of(s, k);
  const ChiefFactorInfo& info = s.series.factor(k);
  const std::size_t d = s.d();
  FactorLog log(s, k);
  auto finish = [&](std::string branch, std::uint64_t trials) {
    s.k = k - 1;
    check_bound(s);
    log.finish(std::move(branch), trials);
  };
  auto case2 = [&] {
    auto c = lifted(s, k);
    c.push_back(random_in(s, upper));
    return c;
  };

  if (d == 1) {
    std::uint64_t trials = sample_until(s, k, case2);
    return finish("d1-pairs", trials);
  }
  if (info.t_prime <= d) {
    std::uint64_t trials = sample_until(s, k, [&] { return lifted(s, k); });
    return finish("case1-sampling", trials);
  }

  const double budget_real = 90.0 * static_cast<double>(d) *
                             static_cast<double>(info.delta_prime) * log_big(info.order) / 53.0;
  const auto budget = static_cast<std::uint64_t>(std::ceil(budget_real));
  for (std::uint64_t trial = 1; trial <= budget; ++trial) {
    auto candidate = lifted(s, k);
    if (test_mod(s, k, candidate, TestStrategy::RSS)) {
      s.gens = std::move(candidate);
      s.stats.sampling_trials.push_back(trial);
      return finish("budget-sampling", trial);
    }
  }

  BigInt sweep = 1;
  for (std::size_t i = 0; i < d; ++i) sweep *= info.order;
  if (sweep > s.options.exhaustive_cap) {
    if (s.options.mode == SolveMode::Certified)
      throw Error(ErrorKind::ExhaustiveCapExceeded,
                  "factor " + std::to_string(k) + " needs a sweep of " + to_string(sweep) +
                      " tuples, cap " + to_string(s.options.exhaustive_cap));
    for (std::uint64_t trials = 1;; ++trials) {
      auto candidate = lifted(s, k);
      if (test_mod(s, k, candidate, TestStrategy::RSS)) {
        s.gens = std::move(candidate);
        s.stats.sampling_trials.push_back(trials);
        return finish("heuristic-case1", budget + trials);
      }
      candidate = case2();
      if (test_mod(s, k, candidate, TestStrategy::RSS)) {
        s.gens = std::move(candidate);
        s.stats.sampling_trials.push_back(trials);
        s.certified_minimal = false;
        return finish("heuristic-case2", budget + trials);
      }
    }
  }

  if (auto found = exhaustive_search(s, k, s.options.orbit_reduce)) {
    for (std::size_t i = 0; i < d; ++i) s.gens[i] = s.gens[i] * (*found)[i];
    return finish("exhaustive", budget);
  }
  std::uint64_t trials = sample_until(s, k, case2);
  finish("case2-sampling", trials);
}

bool early_stop_check(LiftState& s) {
  ++s.stats.early_stop_tests;
  if (!generates(s.gens, s.group, TestStrategy::RSS, s.stats, s.rng, s.options.rss_epsilon))
    return false;
  return generates(s.gens, s.group, TestStrategy::SS, s.stats, s.rng);
}

SolveResult smallest_generating_set(const Group& g, const SolveOptions& opts) {
  if (opts.exhaustive_cap < 1)
    throw Error(ErrorKind::InvalidArgument, "exhaustive cap must be at least 1");
  SolveResult result;
  if (g.is_trivial()) {
    result.method = "trivial";
    return result;
  }
  Rng rng(opts.seed);
  GenTestStats stats;
  if (opts.enable_fast_paths) {
    if (auto fast = fast_paths(g, opts, stats, rng)) {
      if (!generates(fast->gens, g, TestStrategy::SS, stats, rng))
        throw Error(ErrorKind::InternalInconsistency, "fast path result does not generate");
      result.gens = std::move(fast->gens);
      result.method = std::move(fast->method);
      result.stats = std::move(stats);
      return result;
    }
  }

  ChiefSeries series = chief_series(g, opts.ordering, rng);
  result.series_length = series.length();
  LiftState s = top_factor_generators(g, std::move(series), opts, std::move(rng), std::move(stats));
  while (s.k > 0) {
    if (early_stop_check(s)) break;
    if (s.series.factor(s.k).abelian)
      lift_abelian(s, s.k);
    else
      lift_nonabelian(s, s.k);
  }
  if (!generates(s.gens, g, TestStrategy::SS, s.stats, s.rng))
    throw Error(ErrorKind::InternalInconsistency, "final generating set does not generate");
  result.gens = std::move(s.gens);
  result.stats = std::move(s.stats);
  result.certified_minimal = s.certified_minimal;
  result.method = "lifting";
  return result;
}

}  // namespace permgen
