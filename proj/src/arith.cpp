#include "unitred/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unitred {

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

u64 euler_phi(u64 n) {
    u64 phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

int moebius(u64 n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

u64 ipow(u64 base, unsigned exponent) {
    u64 r = 1;
    while (exponent--) r *= base;
    return r;
}

u64 multiplicative_order(u64 a, u64 m) {
    if (m == 1) return 1;
    if (std::gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
    u64 x = a % m;
    u64 k = 1;
    while (x != 1) {
        x = static_cast<u64>((static_cast<unsigned __int128>(x) * a) % m);
        ++k;
    }
    return k;
}

unsigned valuation(u64 n, u64 p) {
    unsigned v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::pair<u64, unsigned> prime_power(u64 n) {
    const auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return f.front();
}

bool is_canonical_conductor(u64 n) { return n >= 1 && n % 4 != 2; }

}  // namespace unitred
