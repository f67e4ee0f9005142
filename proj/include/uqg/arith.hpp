#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace uqg {

bool is_prime(uint64_t n);

// Distinct prime divisors in increasing order.
std::vector<uint64_t> prime_factors(uint64_t n);

// Returns (p, n) with q = p^n, or nothing when q is not a prime power.
std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q);

uint64_t ipow(uint64_t base, uint32_t exp);

inline uint64_t gcd(uint64_t a, uint64_t b) { return std::gcd(a, b); }
inline uint64_t lcm(uint64_t a, uint64_t b) { return a / std::gcd(a, b) * b; }

uint64_t euler_phi(uint64_t n);

std::vector<uint64_t> divisors(uint64_t n);

}  // namespace uqg
