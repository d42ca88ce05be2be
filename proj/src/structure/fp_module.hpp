#pragma once

// Matrix modules over a prime field. Vectors are rows; a module is given by
// one matrix per group generator acting on the right.

#include <cstdint>
#include <vector>

#include "permgen/random.hpp"

namespace permgen::detail {

using Vec = std::vector<std::uint32_t>;
using Mat = std::vector<Vec>;

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((a + std::uint64_t{b}) % p_);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((a + p_ - b) % p_);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint64_t p_;
};

/// Row space kept in reduced echelon form, so the coordinates of a member
/// are its entries in the pivot columns.
class Subspace {
 public:
  Subspace(const PrimeField& f, std::size_t dim) : f_(f), dim_(dim) {}

  /// Adds v; false if it was already in the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const Mat& rows() const noexcept { return rows_; }
  Vec coordinates(const Vec& v) const;

 private:
  Vec reduce(Vec v) const;

  PrimeField f_;
  std::size_t dim_;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

Vec times(const PrimeField& f, const Vec& v, const Mat& a);
Mat multiply(const PrimeField& f, const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
/// Basis of {v : v a = 0}.
Mat left_nullspace(const PrimeField& f, const Mat& a);

/// Smallest submodule containing v.
Subspace spin(const PrimeField& f, const std::vector<Mat>& action, const Vec& v);

/// Basis (as rows in the module's coordinates) of a minimal nonzero
/// submodule. Throws RefinementFailed when irreducibility can be neither
/// proved nor refuted within the search limits.
Mat minimal_submodule(const PrimeField& f, const std::vector<Mat>& action, std::size_t dim,
                      Rng& rng);

}  // namespace permgen::detail
