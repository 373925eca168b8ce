#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/error.hpp"

namespace posetlab {

/// (prime, exponent) pairs with strictly increasing primes.
using Factorization = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Smallest prime strictly greater than n.
inline std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

/// Trial-division factorization; factorize(1) is empty.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw error(errc::invalid_input, "cannot factorize 0");
  Factorization out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    std::uint32_t k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// All positive divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (std::uint32_t e = 1; e <= k; ++e) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int mobius_of_factorization(const Factorization& f) {
  int sign = 1;
  for (const auto& [p, k] : f) {
    if (k >= 2) return 0;
    if (k == 1) sign = -sign;
  }
  return sign;
}

/// Number-theoretic Möbius function: (-1)^k for a product of k distinct
/// primes, 0 when n has a square factor.
inline int classical_mobius(std::uint64_t n) {
  if (n < 1) throw error(errc::invalid_input, "classical_mobius requires n >= 1");
  return mobius_of_factorization(factorize(n));
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw error(errc::overflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

}  // namespace posetlab
