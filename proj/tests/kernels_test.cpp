#include <gtest/gtest.h>

#include <numeric>

#include "permgen/kernels.hpp"
#include "support/brute.hpp"

namespace permgen {
namespace {

using kernels::KernelTable;

std::vector<const KernelTable*> vector_tables() {
  std::vector<const KernelTable*> out;
  if (const KernelTable* t = kernels::avx2::table()) out.push_back(t);
  return out;
}

std::vector<Point> random_images(std::size_t n, Rng& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

TEST(Kernels, ActiveTableIsKnown) {
  const auto name = kernels::active().name;
  EXPECT_TRUE(name == "scalar" || name == "avx2") << name;
}

TEST(Kernels, VectorVariantsMatchScalarOnCompose) {
  const auto& ref = kernels::scalar::table();
  Rng rng(1);
  for (const KernelTable* t : vector_tables()) {
    for (std::size_t n = 0; n <= 300; ++n) {
      const auto a = random_images(n, rng);
      const auto b = random_images(n, rng);
      const auto c = random_images(n, rng);
      std::vector<Point> want(n), got(n);
      ref.compose(want.data(), a.data(), b.data(), n);
      t->compose(got.data(), a.data(), b.data(), n);
      ASSERT_EQ(want, got) << t->name << " n=" << n;
      ref.compose3(want.data(), a.data(), c.data(), b.data(), n);
      t->compose3(got.data(), a.data(), c.data(), b.data(), n);
      ASSERT_EQ(want, got) << t->name << " compose3 n=" << n;
      ref.invert(want.data(), a.data(), n);
      t->invert(got.data(), a.data(), n);
      ASSERT_EQ(want, got) << t->name << " invert n=" << n;
    }
  }
}

TEST(Kernels, VectorVariantsMatchScalarOnScans) {
  const auto& ref = kernels::scalar::table();
  Rng rng(2);
  for (const KernelTable* t : vector_tables()) {
    for (std::size_t n = 0; n <= 130; ++n) {
      std::vector<Point> id(n);
      std::iota(id.begin(), id.end(), Point{0});
      ASSERT_EQ(t->first_moved(id.data(), n), n);
      ASSERT_EQ(t->first_diff(id.data(), id.data(), n), n);
      // A single transposition at every position, including vector tails.
      for (std::size_t i = 0; i + 1 < n; ++i) {
        auto p = id;
        std::swap(p[i], p[n - 1]);
        ASSERT_EQ(t->first_moved(p.data(), n), ref.first_moved(p.data(), n));
        ASSERT_EQ(t->first_diff(p.data(), id.data(), n), ref.first_diff(p.data(), id.data(), n));
      }
      const auto a = random_images(n, rng);
      ASSERT_EQ(t->first_moved(a.data(), n), ref.first_moved(a.data(), n));
    }
  }
}

TEST(Kernels, InPlaceComposeMatches) {
  Rng rng(3);
  for (const KernelTable* t : vector_tables()) {
    for (std::size_t n : {1u, 7u, 8u, 9u, 64u, 101u}) {
      auto a = random_images(n, rng);
      const auto b = random_images(n, rng);
      std::vector<Point> want(n);
      kernels::scalar::compose(want.data(), a.data(), b.data(), n);
      t->compose(a.data(), a.data(), b.data(), n);
      EXPECT_EQ(a, want);
    }
  }
}

TEST(Kernels, PermutationResultsIndependentOfTable) {
  const KernelTable& saved = kernels::active();
  Rng rng(4);
  std::vector<Permutation> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(testing::random_permutation(97, rng));
  kernels::set_active(kernels::scalar::table());
  std::vector<Permutation> scalar_products;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) scalar_products.push_back(xs[i] * xs[i + 1]);
  kernels::set_active(saved);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) EXPECT_EQ(xs[i] * xs[i + 1], scalar_products[i]);
}

}  // namespace
}  // namespace permgen
