#pragma once

// Inner loops over permutation image tables.
//
// Every kernel has a portable scalar reference in kernels::scalar and, where
// the instruction set helps, a vectorised variant selected once at startup.
// The variants must agree bit-for-bit with the scalar reference; the
// equivalence tests in tests/kernels_test.cpp pin that down.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace permgen::kernels {

using Point = std::uint32_t;

/// out[i] = b[a[i]]: apply a, then b.
using ComposeFn = void (*)(Point* out, const Point* a, const Point* b, std::size_t n);
/// out[i] = b[c[a[i]]]: apply a, then c, then b.
using Compose3Fn = void (*)(Point* out, const Point* a, const Point* c, const Point* b,
                            std::size_t n);
/// Index of the first i with a[i] != i, or n.
using FirstMovedFn = std::size_t (*)(const Point* a, std::size_t n);
/// Index of the first i with a[i] != b[i], or n.
using FirstDiffFn = std::size_t (*)(const Point* a, const Point* b, std::size_t n);
/// out[a[i]] = i.
using InvertFn = void (*)(Point* out, const Point* a, std::size_t n);

struct KernelTable {
  std::string_view name;
  ComposeFn compose;
  Compose3Fn compose3;
  FirstMovedFn first_moved;
  FirstDiffFn first_diff;
  InvertFn invert;
};

namespace scalar {
void compose(Point* out, const Point* a, const Point* b, std::size_t n);
void compose3(Point* out, const Point* a, const Point* c, const Point* b, std::size_t n);
std::size_t first_moved(const Point* a, std::size_t n);
std::size_t first_diff(const Point* a, const Point* b, std::size_t n);
void invert(Point* out, const Point* a, std::size_t n);
const KernelTable& table();
}  // namespace scalar

namespace avx2 {
/// Null when the build or the CPU lacks AVX2.
const KernelTable* table();
}  // namespace avx2

/// The table used by Permutation. Chosen on first use: AVX2 when both the
/// build and the CPU support it, unless PERMGEN_SIMD=scalar is set.
const KernelTable& active();

/// Overrides the active table; intended for tests and benchmarks.
void set_active(const KernelTable& table);

}  // namespace permgen::kernels
