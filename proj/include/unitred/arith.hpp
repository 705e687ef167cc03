#ifndef UNITRED_ARITH_HPP
#define UNITRED_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace unitred {

using u64 = std::uint64_t;

// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<u64> divisors(u64 n);

bool is_prime(u64 n);
u64 euler_phi(u64 n);
int moebius(u64 n);
u64 ipow(u64 base, unsigned exponent);

// Multiplicative order of a modulo m; gcd(a, m) must be 1. ord mod 1 is 1.
u64 multiplicative_order(u64 a, u64 m);

// p-adic valuation of n.
unsigned valuation(u64 n, u64 p);

// If n = p^k with k >= 1, returns (p, k); otherwise (0, 0).
std::pair<u64, unsigned> prime_power(u64 n);

bool is_canonical_conductor(u64 n);

}  // namespace unitred

#endif
