#include "unitred/poly.hpp"

#include <map>
#include <stdexcept>

namespace unitred {

namespace {

// Exact division of integer polynomials; the divisor is monic.
IntPoly exact_div_monic(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("exact_div_monic: degree underflow");
    IntPoly q(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Int c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("exact_div_monic: non-zero remainder");
    return q;
}

IntPoly mul_int(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

IntPoly cyclotomic_polynomial(u64 n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n = 0");
    std::map<u64, IntPoly> phi;
    for (u64 d : divisors(n)) {
        IntPoly xd(d + 1);
        xd[0] = -1;
        xd[d] = 1;
        IntPoly prod{1};
        for (const auto& [e, pe] : phi)
            if (d % e == 0) prod = mul_int(prod, pe);
        phi[d] = exact_div_monic(std::move(xd), prod);
    }
    return phi.at(n);
}

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const RatPoly& p) { return static_cast<long>(p.size()) - 1; }

RatPoly to_rat_poly(const IntPoly& p) { return RatPoly(p.begin(), p.end()); }

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.empty()) throw std::domain_error("divmod: division by the zero polynomial");
    RatPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {RatPoly{}, r};
    RatPoly q(r.size() - b.size() + 1);
    const Rat& lead = b.back();
    for (std::size_t i = r.size(); i-- >= b.size();) {
        if (r[i] == 0) continue;
        const Rat c = r[i] / lead;
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    }
    trim(q);
    trim(r);
    return {q, r};
}

std::pair<RatPoly, RatPoly> half_xgcd(const RatPoly& a, const RatPoly& b) {
    // Invariant: s0*a = r0 and s1*a = r1 modulo b.
    RatPoly r0 = a, r1 = b, s0{Rat(1)}, s1{};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (!r0.empty()) {
        const Rat lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : s0) c /= lead;
    }
    return {r0, s0};
}

Rat resultant(const RatPoly& f_in, const RatPoly& g_in) {
    RatPoly f = f_in, g = g_in;
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) return 0;
    Rat acc = 1;
    while (true) {
        const long m = degree(f), n = degree(g);
        if (n == 0) return acc * pow(g[0], static_cast<unsigned long>(m));
        if (m == 0) return acc * pow(f[0], static_cast<unsigned long>(n));
        // Res(f, g) = (-1)^{mn} Res(g, f) and Res(g, f) = lc(g)^{m-k} Res(g, f mod g).
        RatPoly r = divmod(f, g).second;
        if (r.empty()) return 0;
        const long k = degree(r);
        if ((m * n) % 2 != 0) acc = -acc;
        acc *= pow(g.back(), static_cast<unsigned long>(m - k));
        f = std::move(g);
        g = std::move(r);
    }
}

}  // namespace unitred
