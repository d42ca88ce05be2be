#include <algorithm>
#include <cmath>

#include "permgen/cli.hpp"
#include "permgen/errors.hpp"

namespace permgen {

std::vector<BenchRow> bench_suite(const std::string& suite, std::size_t max_degree) {
  std::vector<BenchRow> rows;
  if (suite == "paper-table") {
    auto power = [](const char* name, const char* atom, std::size_t atom_degree, std::size_t k,
                    std::size_t d) {
      return BenchRow{std::string(name) + "^" + std::to_string(k),
                      "direct_power(" + std::string(atom) + "," + std::to_string(k) + ")",
                      atom_degree * k, d};
    };
    auto crown = [](std::size_t k, std::size_t d) {
      return BenchRow{"3^" + std::to_string(k) + ":2",
                      "crown_inversion(3," + std::to_string(k) + ")", 3 * k, d};
    };
    rows = {power("A5", "alt(5)", 5, 19, 2),     power("A5", "alt(5)", 5, 20, 3),
            power("A5", "alt(5)", 5, 100, 3),    power("L3(2)", "psl_3_2", 7, 57, 2),
            power("L3(2)", "psl_3_2", 7, 58, 3), power("L3(2)", "psl_3_2", 7, 100, 3),
            power("A6", "alt(6)", 6, 53, 2),     power("A6", "alt(6)", 6, 54, 3),
            power("A6", "alt(6)", 6, 100, 3),    crown(30, 31),
            crown(50, 51),                       crown(100, 101)};
  } else if (suite == "scaling") {
    for (std::size_t k = 1; 5 * k <= max_degree; ++k) {
      std::optional<std::size_t> d;
      if (k <= 19) d = 2;
      if (k == 20) d = 3;
      rows.push_back(BenchRow{"A5^" + std::to_string(k),
                              "direct_power(alt(5)," + std::to_string(k) + ")", 5 * k, d});
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  }
  std::erase_if(rows, [&](const BenchRow& r) { return r.degree > max_degree; });
  return rows;
}

ScalingFit fit_scaling(const std::vector<std::pair<std::size_t, double>>& points) {
  ScalingFit fit;
  double num = 0, den = 0;
  for (auto [degree, tests] : points) {
    if (degree < 2) throw Error(ErrorKind::InvalidArgument, "degree must exceed 1");
    const double n = static_cast<double>(degree);
    const double x = n * n * std::log(n);
    num += tests * x;
    den += x * x;
    fit.envelope = std::max(fit.envelope, tests / x);
  }
  if (den > 0) fit.fitted = num / den;
  return fit;
}

}  // namespace permgen
