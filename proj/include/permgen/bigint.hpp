#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace permgen {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Natural logarithm of a positive big integer, accurate to double precision.
double log_big(const BigInt& value);

/// Returns true and sets (p, l) when value = p^l for a prime p and l >= 1.
bool prime_power(const BigInt& value, std::uint64_t& p, unsigned& l);

/// Prime factors of value, ascending, without multiplicity. Orders of
/// subgroups of Sym(n) divide n!, so trial division up to 10^6 is complete
/// for every degree we support; a larger cofactor raises InvalidArgument.
std::vector<std::uint64_t> prime_divisors(BigInt value);

}  // namespace permgen
