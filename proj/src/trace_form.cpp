#include "unitred/trace_form.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "unitred/errors.hpp"

namespace unitred {

std::pair<Int, IntMatrix> integer_scale(const RatMatrix& g) {
    Int s = 1;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const auto r = g.row(i);
        const Int l = lcm_of_denominators(r);
        mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), l.get_mpz_t());
    }
    IntMatrix m(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            const Rat v = g(i, j) * s;
            m(i, j) = v.get_num();
        }
    return {s, m};
}

GramMatrix GramMatrix::from_entries(RatMatrix entries, u64 conductor, Basis basis) {
    GramMatrix g;
    g.conductor = conductor;
    g.basis = basis;
    auto [s, m] = integer_scale(entries);
    g.entries = std::move(entries);
    g.scale = std::move(s);
    g.scaled = std::move(m);
    return g;
}

GramMatrix GramMatrix::from_integers(const IntMatrix& entries) { return from_entries(to_rat_matrix(entries)); }

GramMatrix gram(const CycloElement& a) {
    const FieldContext& f = a.field();
    const std::size_t n = f.degree();
    const auto c = a.coeffs();

    // t[k + n - 1] = Tr(a zeta^k) for -(n-1) <= k <= n-1, from cached monomial traces.
    std::vector<Rat> t(2 * n - 1);
#pragma omp parallel for schedule(static) if (n >= 16)
    for (long k = -static_cast<long>(n) + 1; k < static_cast<long>(n); ++k) {
        Rat acc = 0;
        for (std::size_t l = 0; l < n; ++l)
            if (c[l] != 0) acc += c[l] * f.monomial_trace(static_cast<long long>(l) + k);
        t[static_cast<std::size_t>(k + static_cast<long>(n) - 1)] = acc;
    }

    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& fwd = t[i - j + n - 1];
            const Rat& bwd = t[j - i + n - 1];
            g(i, j) = fwd == bwd ? fwd : Rat((fwd + bwd) / 2);
        }
    return GramMatrix::from_entries(std::move(g), f.conductor(), Basis::Power);
}

Rat form_value(const GramMatrix& g, std::span<const Int> z) {
    if (z.size() != g.dim()) throw InvalidInput("form_value: vector length does not match the form dimension");
    return quadratic_value(g.entries, z);
}

bool is_totally_positive(const CycloElement& a) {
    if (a.is_zero()) throw SingularForm("trace form of the zero element is singular");
    // Tr(a x x*) = sum_i sigma_i(a) |sigma_i(x)|^2 is definite exactly when a is totally positive.
    return ldl(gram(a).entries).positive_definite();
}

bool totally_positive_by_embeddings(const CycloElement& a) {
    const FieldContext& f = a.field();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(f.conductor());
    for (u64 k : f.galois_units()) {
        std::complex<double> v = 0;
        const auto c = a.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            v += c[i].get_d() * std::polar(1.0, step * static_cast<double>(k * i));
        if (v.real() <= 1e-9 || std::abs(v.imag()) > 1e-6 * (1.0 + std::abs(v.real()))) return false;
    }
    return true;
}

}  // namespace unitred
