#include <cmath>

#include "permgen/bigint.hpp"
#include "permgen/errors.hpp"

namespace permgen {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::RepeatedPointInCycle: return "RepeatedPointInCycle";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SeedNotInGroup: return "SeedNotInGroup";
    case ErrorKind::LayerNotElementaryAbelian: return "LayerNotElementaryAbelian";
    case ErrorKind::LayerNotNormal: return "LayerNotNormal";
    case ErrorKind::RefinementFailed: return "RefinementFailed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ExhaustiveCapExceeded: return "ExhaustiveCapExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotFoundWithin: return "NotFoundWithin";
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::BadGenerators: return "BadGenerators";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

double log_big(const BigInt& value) {
  if (value <= 0) throw Error(ErrorKind::InvalidArgument, "log of non-positive integer");
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 60) return std::log(static_cast<double>(value.convert_to<std::uint64_t>()));
  const std::size_t drop = bits - 60;
  const BigInt top = value >> drop;
  return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(drop) * std::log(2.0);
}

std::vector<std::uint64_t> prime_divisors(BigInt value) {
  std::vector<std::uint64_t> primes;
  if (value <= 1) return primes;
  for (std::uint64_t p = 2; p <= 1000000 && value > 1; ++p) {
    if (value % p != 0) continue;
    primes.push_back(p);
    while (value % p == 0) value /= p;
  }
  if (value != 1)
    throw Error(ErrorKind::InvalidArgument, "cofactor " + value.str() + " has a prime above 10^6");
  return primes;
}

bool prime_power(const BigInt& value, std::uint64_t& p, unsigned& l) {
  if (value < 2) return false;
  BigInt v = value;
  for (std::uint64_t q = 2; q <= 1000000; ++q) {
    if (v % q != 0) continue;
    unsigned e = 0;
    while (v % q == 0) {
      v /= q;
      ++e;
    }
    if (v != 1) return false;
    p = q;
    l = e;
    return true;
  }
  return false;
}

}  // namespace permgen
