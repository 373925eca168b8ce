#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library's order, Möbius, or transform code.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/scalar.hpp"

namespace oracle {

/// Möbius function for 1..n by a linear sieve; index 0 unused.
inline std::vector<int> mobius_sieve(std::size_t n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<std::size_t> primes;
  if (n >= 1) mu[1] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (auto p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

/// Squarefree test by checking every square d^2 <= n.
inline bool squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline bool prime_by_scan(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Gaussian rational with numerators and denominators in [-bound, bound].
inline posetlab::Scalar random_scalar(std::mt19937_64& rng, long bound = 100, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  while (true) {
    posetlab::Scalar s(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    if (!nonzero || !s.is_zero()) return s;
  }
}

/// Random finite poset on n labelled elements "e0".."e{n-1}" whose covers
/// only go from lower to higher labels, with every element above e0.
struct RandomPoset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::vector<bool>> leq;  // closure by Floyd-Warshall
};

inline RandomPoset random_poset(std::mt19937_64& rng, std::size_t n) {
  RandomPoset out;
  for (std::size_t k = 0; k < n; ++k) out.elements.push_back("e" + std::to_string(k));
  std::bernoulli_distribution edge(0.3);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t j = 1; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, j - 1);
    const std::size_t forced = pick(rng);
    for (std::size_t i = 0; i < j; ++i) {
      if (i == forced || edge(rng)) {
        rel[i][j] = true;
        out.covers.emplace_back(out.elements[i], out.elements[j]);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
      }
    }
  }
  out.leq = std::move(rel);
  return out;
}

}  // namespace oracle
