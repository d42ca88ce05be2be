#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permgen/cli.hpp"
#include "permgen/constructions.hpp"
#include "permgen/errors.hpp"
#include "permgen/mingen.hpp"
#include "permgen/oracle.hpp"

namespace permgen {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitCap = 2;
constexpr int kExitOracle = 3;
constexpr std::size_t kOracleLimit = 5000;

struct Flags {
  std::string spec;
  std::uint64_t seed = 0;
  std::string mode = "certified";
  bool no_fast_paths = false;
  bool oracle_check = false;
  bool stats = false;
  bool json = false;
  std::string ordering = "abelian-high";
  std::string suite = "paper-table";
  std::size_t max_degree = 100;
  std::size_t runs = 1;
};

SolveOptions solve_options(const Flags& f) {
  SolveOptions o;
  o.seed = f.seed;
  o.mode = f.mode == "heuristic" ? SolveMode::Heuristic : SolveMode::Certified;
  o.enable_fast_paths = !f.no_fast_paths;
  if (const char* cap = std::getenv("PERMGEN_EXHAUSTIVE_CAP")) {
    try {
      o.exhaustive_cap = BigInt(cap);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "PERMGEN_EXHAUSTIVE_CAP is not an integer");
    }
    if (o.exhaustive_cap < 1)
      throw Error(ErrorKind::InvalidArgument, "PERMGEN_EXHAUSTIVE_CAP must be at least 1");
  }
  return o;
}

std::string list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

Json stats_json(const GenTestStats& s) {
  Json factors = Json::array();
  for (const auto& f : s.per_factor)
    factors.push_back({{"factor", f.factor},
                       {"order", to_string(f.order)},
                       {"abelian", f.abelian},
                       {"branch", f.branch},
                       {"trials", f.trials},
                       {"d_after", f.d_after},
                       {"ss_tests", f.ss_tests},
                       {"rss_tests", f.rss_tests}});
  return {{"ss_tests", s.ss_tests},
          {"rss_tests", s.rss_tests},
          {"random_elements", s.random_elements},
          {"early_stop_tests", s.early_stop_tests},
          {"abelian_ss_tests", s.abelian_ss_tests},
          {"exhaustive_candidates", s.exhaustive_candidates},
          {"exhaustive_tests", s.exhaustive_tests},
          {"sampling_trials", s.sampling_trials},
          {"per_factor", factors}};
}

int cmd_mingen(const Flags& f, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = parse_spec(f.spec);
  const Group g = elaborate(spec);
  const SolveOptions opts = solve_options(f);
  const SolveResult r = smallest_generating_set(g, opts);

  std::optional<std::size_t> oracle_d;
  if (f.oracle_check) {
    if (g.order() > kOracleLimit) {
      err << "oracle check skipped: |G| = " << to_string(g.order()) << " exceeds "
          << kOracleLimit << "\n";
    } else {
      try {
        oracle_d = oracle_min_gen(g, r.gens.size());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) throw;
        err << "oracle check skipped: " << e.what() << "\n";
      }
    }
  }

  std::vector<std::string> gens;
  for (const auto& x : r.gens) gens.push_back(print_cycles(x));
  if (f.json) {
    Json j = {{"group", print_spec(spec)},
              {"degree", g.degree()},
              {"order", to_string(g.order())},
              {"d", r.gens.size()},
              {"gens", gens},
              {"stats", stats_json(r.stats)},
              {"mode", f.mode},
              {"seed", f.seed},
              {"certified_minimal", r.certified_minimal},
              {"method", r.method}};
    if (f.oracle_check) j["oracle_d"] = oracle_d ? Json(*oracle_d) : Json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << "group: " << print_spec(spec) << "\n"
        << "degree: " << g.degree() << "\n"
        << "order: " << to_string(g.order()) << "\n"
        << "d = " << r.gens.size() << (r.certified_minimal ? "" : " (size not certified minimal)")
        << "\n";
    for (const auto& s : gens) out << "  " << s << "\n";
    if (oracle_d) out << "oracle d = " << *oracle_d << "\n";
    if (f.stats) {
      const auto& s = r.stats;
      out << "method: " << r.method << "\n"
          << "ss_tests: " << s.ss_tests << "\nrss_tests: " << s.rss_tests
          << "\nrandom_elements: " << s.random_elements
          << "\nearly_stop_tests: " << s.early_stop_tests
          << "\nabelian_ss_tests: " << s.abelian_ss_tests
          << "\nexhaustive_tests: " << s.exhaustive_tests << " of " << s.exhaustive_candidates
          << " candidates\n";
      for (const auto& p : s.per_factor)
        out << "  factor " << p.factor << ": order " << to_string(p.order)
            << (p.abelian ? " abelian" : " non-abelian") << ", " << p.branch << ", trials "
            << p.trials << ", d " << p.d_after << ", ss " << p.ss_tests << ", rss "
            << p.rss_tests << "\n";
    }
  }
  if (oracle_d && *oracle_d != r.gens.size()) {
    err << "oracle mismatch: solver found " << r.gens.size() << ", oracle " << *oracle_d << "\n";
    return kExitOracle;
  }
  return 0;
}

int cmd_chief(const Flags& f, std::ostream& out) {
  const GroupSpec spec = parse_spec(f.spec);
  const Group g = elaborate(spec);
  Rng rng(f.seed);
  const auto ordering =
      f.ordering == "as-found" ? SeriesOrdering::AsFound : SeriesOrdering::AbelianHigh;
  const ChiefSeries series = chief_series(g, ordering, rng);
  if (f.json) {
    Json factors = Json::array();
    for (std::size_t k = 1; k <= series.length(); ++k) {
      const auto& info = series.factor(k);
      factors.push_back({{"k", k},
                         {"order", to_string(info.order)},
                         {"abelian", info.abelian},
                         {"p", info.p},
                         {"l", info.l},
                         {"delta_prime", info.delta_prime},
                         {"t_prime", info.t_prime}});
    }
    out << Json{{"group", print_spec(spec)},
                {"degree", g.degree()},
                {"order", to_string(g.order())},
                {"ordering", f.ordering},
                {"factors", factors}}
               .dump()
        << "\n";
    return 0;
  }
  std::vector<std::string> orders, kinds, deltas, ts;
  for (const auto& info : series.factors) {
    orders.push_back(to_string(info.order));
    kinds.push_back(info.abelian ? "abelian" : "non-abelian");
    deltas.push_back(std::to_string(info.delta_prime));
    ts.push_back(std::to_string(info.t_prime));
  }
  out << "group: " << print_spec(spec) << "\n"
      << "factors: " << list(orders) << "\n"
      << "kinds: " << list(kinds) << "\n"
      << "delta': " << list(deltas) << "\n"
      << "t': " << list(ts) << "\n";
  return 0;
}

int cmd_order(const Flags& f, std::ostream& out) {
  const GroupSpec spec = parse_spec(f.spec);
  const Group g = elaborate(spec);
  if (f.json)
    out << Json{{"group", print_spec(spec)}, {"degree", g.degree()}, {"order", to_string(g.order())}}
               .dump()
        << "\n";
  else
    out << to_string(g.order()) << "\n";
  return 0;
}

int cmd_bench(const Flags& f, std::ostream& out) {
  if (f.runs == 0) throw Error(ErrorKind::InvalidArgument, "--runs must be at least 1");
  const auto rows = bench_suite(f.suite, f.max_degree);
  std::vector<std::pair<std::size_t, double>> points;
  if (!f.json) out << "group      degree    d  expected  seconds     tests\n";
  for (const auto& row : rows) {
    const Group g = elaborate(row.spec);
    std::vector<std::size_t> ds;
    double total_seconds = 0, total_tests = 0;
    for (std::size_t run = 0; run < f.runs; ++run) {
      Flags per = f;
      per.seed = f.seed + run;
      const auto start = std::chrono::steady_clock::now();
      const SolveResult r = smallest_generating_set(g, solve_options(per));
      total_seconds +=
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      total_tests += static_cast<double>(r.stats.total_tests());
      ds.push_back(r.gens.size());
    }
    const bool consistent = std::all_of(ds.begin(), ds.end(), [&](auto d) { return d == ds[0]; });
    const bool match = consistent && (!row.expected_d || *row.expected_d == ds[0]);
    const double runs = static_cast<double>(f.runs);
    points.emplace_back(row.degree, total_tests / runs);
    if (f.json) {
      out << Json{{"suite", f.suite},
                  {"group", row.name},
                  {"spec", row.spec},
                  {"degree", row.degree},
                  {"d", ds},
                  {"expected_d", row.expected_d ? Json(*row.expected_d) : Json(nullptr)},
                  {"match", match},
                  {"runs", f.runs},
                  {"seconds", total_seconds / runs},
                  {"tests", total_tests / runs}}
                 .dump()
          << "\n";
    } else {
      std::ostringstream line;
      line << std::left << std::setw(10) << row.name << std::right << std::setw(7) << row.degree
           << std::setw(5) << ds[0] << (consistent ? " " : "*") << std::setw(9)
           << (row.expected_d ? std::to_string(*row.expected_d) : "-") << std::setw(9)
           << seconds(total_seconds / runs) << std::setw(10) << std::setprecision(1) << std::fixed
           << total_tests / runs << (match ? "" : "  MISMATCH");
      out << line.str() << "\n";
    }
  }
  if (f.suite == "scaling" && !points.empty()) {
    const bool usable = std::all_of(points.begin(), points.end(),
                                    [](const auto& p) { return p.first > 1; });
    if (usable) {
      const ScalingFit fit = fit_scaling(points);
      if (f.json)
        out << Json{{"suite", f.suite}, {"fitted_C", fit.fitted}, {"envelope_C", fit.envelope}}
                   .dump()
            << "\n";
      else
        out << "tests <= C n^2 ln n: fitted C = " << fit.fitted
            << ", envelope C = " << fit.envelope << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation groups and smallest generating sets", "permgen"};
  app.require_subcommand(1);
  Flags f;
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", f.seed, "Random seed"); };
  auto add_solver = [&](CLI::App* c) {
    c->add_option("--mode", f.mode, "certified or heuristic")
        ->check(CLI::IsMember({"certified", "heuristic"}));
    c->add_flag("--no-fast-paths", f.no_fast_paths, "Always lift down a chief series");
    c->add_flag("--json", f.json, "One JSON object per line");
  };

  auto* mingen = app.add_subcommand("mingen", "Smallest generating set");
  mingen->add_option("spec", f.spec, "Group spec")->required();
  add_seed(mingen);
  add_solver(mingen);
  mingen->add_flag("--oracle-check", f.oracle_check, "Compare with brute force on small groups");
  mingen->add_flag("--stats", f.stats, "Print counters and per-factor branches");

  auto* chief = app.add_subcommand("chief", "Chief series factors, bottom up");
  chief->add_option("spec", f.spec, "Group spec")->required();
  add_seed(chief);
  chief->add_option("--ordering", f.ordering, "abelian-high or as-found")
      ->check(CLI::IsMember({"abelian-high", "as-found"}));
  chief->add_flag("--json", f.json, "One JSON object per line");

  auto* order = app.add_subcommand("order", "Group order");
  order->add_option("spec", f.spec, "Group spec")->required();
  order->add_flag("--json", f.json, "One JSON object per line");

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--suite", f.suite, "paper-table or scaling")
      ->check(CLI::IsMember({"paper-table", "scaling"}));
  bench->add_option("--max-degree", f.max_degree, "Skip groups of larger degree");
  bench->add_option("--runs", f.runs, "Seeds per group: seed, seed + 1, ...");
  add_seed(bench);
  add_solver(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitFailure;
  }

  try {
    if (mingen->parsed()) return cmd_mingen(f, out, err);
    if (chief->parsed()) return cmd_chief(f, out);
    if (order->parsed()) return cmd_order(f, out);
    return cmd_bench(f, out);
  } catch (const Error& e) {
    err << "permgen: " << e.what() << "\n";
    return e.kind() == ErrorKind::ExhaustiveCapExceeded ? kExitCap : kExitFailure;
  }
}

}  // namespace permgen
