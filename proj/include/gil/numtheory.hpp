#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gil {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Exponent of p in n (n > 0).
inline int valuation(std::uint64_t n, std::uint64_t p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace gil
