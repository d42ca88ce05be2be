#include "permgen/kernels.hpp"

namespace permgen::kernels::scalar {

void compose(Point* out, const Point* a, const Point* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

void compose3(Point* out, const Point* a, const Point* c, const Point* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[c[a[i]]];
}

std::size_t first_moved(const Point* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != i) return i;
  return n;
}

std::size_t first_diff(const Point* a, const Point* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

void invert(Point* out, const Point* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[a[i]] = static_cast<Point>(i);
}

const KernelTable& table() {
  static const KernelTable t{"scalar", &compose, &compose3, &first_moved, &first_diff, &invert};
  return t;
}

}  // namespace permgen::kernels::scalar
