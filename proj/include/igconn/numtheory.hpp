#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace igconn {

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

// Prime factorization with primes in increasing order; empty for n <= 1.
std::vector<PrimePower> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Sum of the exponents in the factorization of n (0 for n = 1).
int order_length(std::uint64_t n);

// If n = p^k for a prime p and k >= 1, returns (p, k).
std::pair<std::uint64_t, int> prime_power_decomposition(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, int exp);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace igconn
