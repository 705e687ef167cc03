// Independent reference computations used by the tests.
#ifndef UNITRED_TESTS_ORACLES_HPP
#define UNITRED_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "unitred/field.hpp"
#include "unitred/lattice.hpp"
#include "unitred/linalg.hpp"
#include "unitred/poly.hpp"

namespace oracle {

using namespace unitred;

// Sum of all Galois conjugates; must be a rational constant.
inline Rat conjugate_sum_trace(const CycloElement& a) {
    CycloElement s = CycloElement::zero(a.field_ptr());
    for (u64 k : a.field().galois_units()) s += galois_apply(a, k);
    if (!s.is_rational()) throw std::logic_error("conjugate sum is not rational");
    return s[0];
}

inline Rat conjugate_product_norm(const CycloElement& a) {
    CycloElement s = CycloElement::from_rational(a.field_ptr(), 1);
    for (u64 k : a.field().galois_units()) s *= galois_apply(a, k);
    if (!s.is_rational()) throw std::logic_error("conjugate product is not rational");
    return s[0];
}

// Values of a under the embeddings zeta -> exp(2 pi i k / N).
inline std::vector<std::complex<long double>> embeddings(const CycloElement& a) {
    const u64 n = a.field().conductor();
    std::vector<std::complex<long double>> out;
    for (u64 k : a.field().galois_units()) {
        std::complex<long double> v = 0;
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
            const long double ang = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k * i % n) / static_cast<long double>(n);
            v += static_cast<long double>(a[i].get_d()) * std::polar(1.0L, ang);
        }
        out.push_back(v);
    }
    return out;
}

// Sylvester-matrix resultant.
inline Rat sylvester_resultant(const RatPoly& f, const RatPoly& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1, d = m + n;
    RatMatrix s(d, d);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = g[n - i];
    return determinant(s);
}

// All sign-canonical v != 0 with v^T G v <= bound, by scanning the box
// |v_i| <= sqrt(bound * (G^-1)_ii).
inline std::vector<LatticeVector> brute_force_below(const IntMatrix& g, const Int& bound) {
    const std::size_t n = g.rows();
    const RatMatrix gr = to_rat_matrix(g);
    std::vector<long> radius(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n);
        e[i] = 1;
        const auto col = solve(gr, e);
        const Rat r2 = Rat(bound) * (*col)[i];
        long r = 0;
        while (Rat((r + 1) * (r + 1)) <= r2) ++r;
        radius[i] = r;
    }
    std::vector<LatticeVector> out;
    std::vector<long> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = -radius[i];
    for (;;) {
        std::vector<Int> z(v.begin(), v.end());
        const bool nonzero = std::any_of(z.begin(), z.end(), [](const Int& x) { return x != 0; });
        auto first = std::find_if(z.begin(), z.end(), [](const Int& x) { return x != 0; });
        if (nonzero && *first > 0) {
            Int value = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) value += z[i] * g(i, j) * z[j];
            if (value <= bound) out.push_back({z, value});
        }
        std::size_t k = 0;
        while (k < n && v[k] == radius[k]) v[k] = -radius[k], ++k;
        if (k == n) break;
        ++v[k];
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

    CycloElement integral(const FieldPtr& f, long lo = -3, long hi = 3) {
        std::vector<Rat> c(f->degree());
        for (auto& x : c) x = uniform(lo, hi);
        return CycloElement(f, std::move(c));
    }
    CycloElement nonzero_integral(const FieldPtr& f, long lo = -3, long hi = 3) {
        for (;;) {
            CycloElement x = integral(f, lo, hi);
            if (!x.is_zero()) return x;
        }
    }
    CycloElement rational(const FieldPtr& f) {
        std::vector<Rat> c(f->degree());
        for (auto& x : c) {
            x = Rat(uniform(-6, 6), uniform(1, 5));
            x.canonicalize();
        }
        return CycloElement(f, std::move(c));
    }
    // x x* + y y* with x != 0: totally positive.
    CycloElement totally_positive(const FieldPtr& f, long range = 1) {
        const CycloElement x = nonzero_integral(f, -range, range);
        const CycloElement y = integral(f, -range, range);
        return x * conj(x) + y * conj(y);
    }
    std::vector<Rat> rational_vector(std::size_t n) {
        std::vector<Rat> v(n);
        for (auto& x : v) {
            x = Rat(uniform(-9, 9), uniform(1, 4));
            x.canonicalize();
        }
        return v;
    }
};

}  // namespace oracle

#endif
