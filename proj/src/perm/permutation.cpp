#include "permgen/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "permgen/errors.hpp"
#include "permgen/kernels.hpp"

namespace permgen {
namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorKind::DegreeMismatch, "degrees " + std::to_string(a.degree()) + " and " +
                                               std::to_string(b.degree()));
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<char> seen(images.size(), 0);
  for (Point x : images) {
    if (x >= images.size())
      throw Error(ErrorKind::PointOutOfRange, "image " + std::to_string(x + 1) + " exceeds degree " +
                                                  std::to_string(images.size()));
    if (seen[x]) throw Error(ErrorKind::BadGenerators, "image table is not a bijection");
    seen[x] = 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept { return first_moved_point() == degree(); }

std::size_t Permutation::first_moved_point() const noexcept {
  return kernels::active().first_moved(images_.data(), images_.size());
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  kernels::active().invert(out.data(), images_.data(), images_.size());
  return Permutation(std::move(out));
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  require_same_degree(*this, rhs);
  if (this == &rhs) return *this = *this * rhs;
  // out[i] depends only on a[i] and rhs, so writing over a is safe.
  kernels::active().compose(images_.data(), images_.data(), rhs.images_.data(), images_.size());
  return *this;
}

Point Permutation::preimage(Point x) const noexcept {
  return static_cast<Point>(std::find(images_.begin(), images_.end(), x) - images_.begin());
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  std::vector<Point> out(a.degree());
  kernels::active().compose(out.data(), a.images_.data(), b.images_.data(), a.degree());
  return Permutation(std::move(out));
}

bool operator==(const Permutation& a, const Permutation& b) noexcept {
  return a.degree() == b.degree() &&
         kernels::active().first_diff(a.images_.data(), b.images_.data(), a.degree()) == a.degree();
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const std::size_t i = kernels::active().first_diff(a.images_.data(), b.images_.data(), a.degree());
  if (i == a.degree()) return std::strong_ordering::equal;
  return a.images_[i] <=> b.images_[i];
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

Permutation compose3(const Permutation& a, const Permutation& c, const Permutation& b) {
  require_same_degree(a, b);
  require_same_degree(a, c);
  std::vector<Point> out(a.degree());
  kernels::active().compose3(out.data(), a.images().data(), c.images().data(), b.images().data(),
                             a.degree());
  return Permutation::from_images_unchecked(std::move(out));
}

Permutation inverse(const Permutation& a) { return a.inverse(); }

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose3(g.inverse(), x, g);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose3(a.inverse(), b.inverse(), a) * b;
}

Permutation power(const Permutation& a, std::uint64_t e) {
  Permutation result(a.degree());
  Permutation base = a;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

BigInt element_order(const Permutation& a) {
  BigInt order = 1;
  for (const auto& c : cycles(a)) {
    const BigInt len = c.size();
    order = order / boost::multiprecision::gcd(order, len) * len;
  }
  return order;
}

std::vector<std::vector<Point>> cycles(const Permutation& a) {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(a.degree(), 0);
  for (Point x = 0; x < a.degree(); ++x) {
    if (seen[x] || a[x] == x) continue;
    std::vector<Point> c;
    for (Point y = x; !seen[y]; y = a[y]) {
      seen[y] = 1;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Permutation extend(const Permutation& a, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::copy(a.images().begin(), a.images().end(), images.begin());
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation shift(const Permutation& a, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (Point x = 0; x < a.degree(); ++x)
    images[x + offset] = static_cast<Point>(a[x] + offset);
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation restrict_prefix(const Permutation& a, std::size_t degree) {
  return Permutation::from_images_unchecked(
      std::vector<Point>(a.images().begin(), a.images().begin() + static_cast<long>(degree)));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace permgen
