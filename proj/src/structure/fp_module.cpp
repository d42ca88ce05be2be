#include "fp_module.hpp"

#include <optional>

#include "permgen/errors.hpp"

namespace permgen::detail {
namespace {

constexpr std::uint64_t kLineEnumerationLimit = 10000;
constexpr std::uint64_t kKernelLineLimit = 1000;
constexpr int kRandomSpins = 8;
constexpr int kNortonAttempts = 200;

// Number of lines in F_p^k, capped just above `limit`.
std::uint64_t line_count(std::uint64_t p, std::size_t k, std::uint64_t limit) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += power;
    if (total > limit) return limit + 1;
    power *= p;
    if (power > limit) power = limit + 1;
  }
  return total;
}

// Calls fn on one nonzero vector of each line of the span of `basis`, until
// fn returns true.
template <class Fn>
bool for_each_line(const PrimeField& f, const Mat& basis, std::size_t dim, Fn&& fn) {
  const std::size_t k = basis.size();
  for (std::size_t lead = 0; lead < k; ++lead) {
    // Coefficient 1 at `lead`, zero before, anything after.
    std::vector<std::uint32_t> c(k - lead - 1, 0);
    while (true) {
      Vec v = basis[lead];
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0)
          for (std::size_t x = 0; x < dim; ++x)
            v[x] = f.add(v[x], f.mul(c[j], basis[lead + 1 + j][x]));
      if (fn(v)) return true;
      std::size_t j = 0;
      while (j < c.size() && ++c[j] == f.p()) c[j++] = 0;
      if (j == c.size()) break;
    }
  }
  return false;
}

Vec random_vector(const PrimeField& f, std::size_t dim, Rng& rng) {
  Vec v(dim);
  bool zero = true;
  while (zero) {
    for (auto& x : v) {
      x = static_cast<std::uint32_t>(uniform_index(rng, f.p()));
      zero = zero && x == 0;
    }
  }
  return v;
}

// Action on a submodule, in the coordinates of its echelon basis.
std::vector<Mat> restrict_action(const PrimeField& f, const std::vector<Mat>& action,
                                 const Subspace& sub) {
  std::vector<Mat> out;
  for (const auto& a : action) {
    Mat m;
    for (const auto& row : sub.rows()) m.push_back(sub.coordinates(times(f, row, a)));
    out.push_back(std::move(m));
  }
  return out;
}

Mat to_ambient(const PrimeField& f, const Mat& inner, const Subspace& sub) {
  Mat out;
  for (const auto& c : inner) {
    Vec v(sub.dim(), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0)
        for (std::size_t x = 0; x < v.size(); ++x)
          v[x] = f.add(v[x], f.mul(c[i], sub.rows()[i][x]));
    out.push_back(std::move(v));
  }
  return out;
}

Mat identity(std::size_t dim) {
  Mat m(dim, Vec(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

Mat descend(const PrimeField& f, const std::vector<Mat>& action, const Subspace& sub, Rng& rng) {
  return to_ambient(f, minimal_submodule(f, restrict_action(f, action, sub), sub.rank(), rng),
                    sub);
}

}  // namespace

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint32_t c = v[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t x = 0; x < dim_; ++x) v[x] = f_.sub(v[x], f_.mul(c, rows_[i][x]));
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const std::uint32_t scale = f_.inv(v[pivot]);
  for (auto& x : v) x = f_.mul(x, scale);
  for (auto& row : rows_) {
    const std::uint32_t c = row[pivot];
    if (c == 0) continue;
    for (std::size_t x = 0; x < dim_; ++x) row[x] = f_.sub(row[x], f_.mul(c, v[x]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool Subspace::contains(Vec v) const {
  v = reduce(std::move(v));
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec times(const PrimeField& f, const Vec& v, const Mat& a) {
  Vec out(a.empty() ? 0 : a[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[i], a[i][j]));
  return out;
}

Mat multiply(const PrimeField& f, const Mat& a, const Mat& b) {
  Mat out;
  for (const auto& row : a) out.push_back(times(f, row, b));
  return out;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Mat left_nullspace(const PrimeField& f, const Mat& a) {
  // Row reduce [a | I]; rows whose left part vanishes give the kernel.
  const std::size_t n = a.size();
  const std::size_t m = n == 0 ? 0 : a[0].size();
  Mat aug(n, Vec(m + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = a[i][j];
    aug[i][m + i] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(aug[piv], aug[row]);
    const std::uint32_t s = f.inv(aug[row][col]);
    for (auto& x : aug[row]) x = f.mul(x, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      const std::uint32_t c = aug[i][col];
      for (std::size_t x = 0; x < m + n; ++x) aug[i][x] = f.sub(aug[i][x], f.mul(c, aug[row][x]));
    }
    ++row;
  }
  Mat out;
  for (std::size_t i = row; i < n; ++i) out.emplace_back(aug[i].begin() + m, aug[i].end());
  return out;
}

Subspace spin(const PrimeField& f, const std::vector<Mat>& action, const Vec& v) {
  Subspace s(f, v.size());
  if (!s.insert(v)) return s;
  Mat queue{v};
  for (std::size_t i = 0; i < queue.size() && s.rank() < s.dim(); ++i)
    for (const auto& a : action) {
      Vec w = times(f, queue[i], a);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  return s;
}

Mat minimal_submodule(const PrimeField& f, const std::vector<Mat>& action, std::size_t dim,
                      Rng& rng) {
  if (dim <= 1) return identity(dim);

  if (line_count(f.p(), dim, kLineEnumerationLimit) <= kLineEnumerationLimit) {
    std::optional<Subspace> best;
    for_each_line(f, identity(dim), dim, [&](const Vec& v) {
      Subspace s = spin(f, action, v);
      if (!best || s.rank() < best->rank()) best.emplace(std::move(s));
      return best->rank() == 1;
    });
    return best->rows();
  }

  for (int i = 0; i < kRandomSpins; ++i) {
    Subspace s = spin(f, action, random_vector(f, dim, rng));
    if (s.rank() < dim) return descend(f, action, s, rng);
  }

  // Norton's test on singular algebra elements with few kernel lines.
  std::vector<Mat> pool = action;
  std::vector<Mat> dual;
  for (const auto& a : action) dual.push_back(transpose(a));
  for (int attempt = 0; attempt < kNortonAttempts; ++attempt) {
    const Mat& x = pool[uniform_index(rng, pool.size())];
    const Mat& y = pool[uniform_index(rng, pool.size())];
    Mat z = multiply(f, x, y);
    const Mat& w = pool[uniform_index(rng, pool.size())];
    const auto c = static_cast<std::uint32_t>(uniform_index(rng, f.p()));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) z[i][j] = f.add(z[i][j], f.mul(c, w[i][j]));
    pool.push_back(z);

    for (std::uint64_t lambda = 0; lambda < f.p(); ++lambda) {
      Mat theta = z;
      for (std::size_t i = 0; i < dim; ++i)
        theta[i][i] = f.sub(theta[i][i], static_cast<std::uint32_t>(lambda));
      Mat kernel = left_nullspace(f, theta);
      if (kernel.empty() || line_count(f.p(), kernel.size(), kKernelLineLimit) > kKernelLineLimit)
        continue;
      std::optional<Subspace> proper;
      for_each_line(f, kernel, dim, [&](const Vec& v) {
        Subspace s = spin(f, action, v);
        if (s.rank() < dim) proper.emplace(std::move(s));
        return proper.has_value();
      });
      if (proper) return descend(f, action, *proper, rng);
      Mat cokernel = left_nullspace(f, transpose(theta));
      Subspace t = spin(f, dual, cokernel.front());
      if (t.rank() == dim) return identity(dim);
      // The annihilator of a proper dual submodule is a proper submodule.
      Subspace ann(f, dim);
      for (auto& v : left_nullspace(f, transpose(t.rows()))) ann.insert(std::move(v));
      return descend(f, action, ann, rng);
    }
  }
  throw Error(ErrorKind::RefinementFailed,
              "could not decide irreducibility of a module of dimension " + std::to_string(dim) +
                  " over F_" + std::to_string(f.p()));
}

}  // namespace permgen::detail
