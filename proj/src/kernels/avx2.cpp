// Built with -mavx2; nothing in here runs unless the dispatcher has checked
// the CPU first.

#include "permgen/kernels.hpp"

#if defined(PERMGEN_HAVE_AVX2)

#include <immintrin.h>

namespace permgen::kernels::avx2 {
namespace {

constexpr std::size_t kLanes = 8;

inline __m256i load(const Point* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Point* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

inline __m256i gather(const Point* base, __m256i idx) {
  return _mm256_i32gather_epi32(reinterpret_cast<const int*>(base), idx, 4);
}

void compose(Point* out, const Point* a, const Point* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out + i, gather(b, load(a + i)));
  for (; i < n; ++i) out[i] = b[a[i]];
}

void compose3(Point* out, const Point* a, const Point* c, const Point* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out + i, gather(b, gather(c, load(a + i))));
  for (; i < n; ++i) out[i] = b[c[a[i]]];
}

std::size_t first_moved(const Point* a, std::size_t n) {
  __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(static_cast<int>(kLanes));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i eq = _mm256_cmpeq_epi32(load(a + i), idx);
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
    if (mask != 0xFFu) return i + static_cast<std::size_t>(__builtin_ctz(~mask));
    idx = _mm256_add_epi32(idx, step);
  }
  for (; i < n; ++i)
    if (a[i] != i) return i;
  return n;
}

std::size_t first_diff(const Point* a, const Point* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i eq = _mm256_cmpeq_epi32(load(a + i), load(b + i));
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
    if (mask != 0xFFu) return i + static_cast<std::size_t>(__builtin_ctz(~mask));
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

}  // namespace

const KernelTable* table() {
  // AVX2 has no scatter, so inversion stays scalar.
  static const KernelTable t{"avx2", &compose, &compose3, &first_moved, &first_diff,
                             &scalar::invert};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &t : nullptr;
}

}  // namespace permgen::kernels::avx2

#else

namespace permgen::kernels::avx2 {
const KernelTable* table() { return nullptr; }
}  // namespace permgen::kernels::avx2

#endif
