#pragma once

#include <cstdint>

#include "frob3/error.hpp"
#include "frob3/exactnum/big_rational.hpp"

namespace frob3 {

/// σ_k(n) = Σ_{d | n} d^k, exact.
inline BigInt divisor_sum(unsigned k, std::uint64_t n) {
  if (k < 1 || n < 1) raise(Errc::InvalidArgument, "divisor_sum needs k >= 1 and n >= 1");
  BigInt s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += boost::multiprecision::pow(BigInt(d), k);
    std::uint64_t e = n / d;
    if (e != d) s += boost::multiprecision::pow(BigInt(e), k);
  }
  return s;
}

}  // namespace frob3
