#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sylprob/rational.hpp"

namespace sylprob {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization of a small integer, as prime -> exponent.
inline std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  if (n > 1) ++out[n];
  return out;
}

/// i-th odd prime, 1-based: 3, 5, 7, 11, 13, ...
inline std::uint64_t nth_odd_prime(unsigned i) {
  std::uint64_t p = 3;
  for (unsigned seen = 1; seen < i;) {
    p += 2;
    if (is_prime(p)) ++seen;
  }
  return p;
}

/// p-adic valuation and p-part of n.
inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    ++v;
    n /= p;
  }
  return v;
}

inline BigInt p_part(const BigInt& n, std::uint64_t p) {
  BigInt m = n, part = 1;
  while (m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

}  // namespace sylprob
