#include <doctest.h>

#include "oracles.hpp"
#include "unitred/discrepancy.hpp"
#include "unitred/errors.hpp"
#include "unitred/minima.hpp"
#include "unitred/trace_form.hpp"

using namespace unitred;

namespace {

CycloElement one(u64 n) { return CycloElement::from_rational(make_field(n), 1); }

}  // namespace

TEST_CASE("gram of 1") {
    const GramMatrix g8 = gram(one(8));
    RatMatrix four = RatMatrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) four(i, i) = 4;
    CHECK(g8.entries == four);
    CHECK(g8.scale == 1);
    CHECK(g8.conductor == 8);
    CHECK(g8.basis == Basis::Power);
    CHECK(determinant(gram(one(5)).entries) == 125);
    const GramMatrix g5 = gram(one(5));
    CHECK(g5.entries(0, 0) == 4);
    CHECK(g5.entries(0, 1) == -1);
}

TEST_CASE("integer scaling") {
    RatMatrix m(2, 2);
    m(0, 0) = Rat(1, 2);
    m(0, 1) = m(1, 0) = Rat(1, 3);
    m(1, 1) = 1;
    const auto [scale, scaled] = integer_scale(m);
    CHECK(scale == 6);
    CHECK(scaled(0, 0) == 3);
    CHECK(scaled(0, 1) == 2);
    CHECK(scaled(1, 1) == 6);
    const GramMatrix g = GramMatrix::from_entries(m);
    CHECK(g.scale == 6);
    CHECK(g.scaled == scaled);
    const GramMatrix w = gram(witness_2power(4));
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) CHECK(Rat(w.scaled(i, j)) == w.entries(i, j) * w.scale);
}

TEST_CASE("form value is the trace") {
    oracle::Rng rng(41);
    int cases = 0;
    for (u64 n : {5, 8, 12, 9, 7}) {
        const FieldPtr f = make_field(n);
        for (int t = 0; t < 40; ++t, ++cases) {
            const CycloElement a = t % 2 ? rng.totally_positive(f) : rng.rational(f);
            const CycloElement x = rng.integral(f);
            std::vector<Int> z;
            for (const auto& c : x.coeffs()) z.push_back(c.get_num());
            CHECK(form_value(gram(a), z) == trace(a * x * conj(x)));
        }
    }
    CHECK(cases == 200);
}

TEST_CASE("determinant is |Delta| Nm(a)") {
    oracle::Rng rng(42);
    for (u64 n : {5, 8, 12}) {
        const FieldPtr f = make_field(n);
        for (int t = 0; t < 50; ++t) {
            const CycloElement a = rng.totally_positive(f);
            CHECK(determinant(gram(a).entries) == Rat(f->discriminant_abs()) * norm(a));
        }
    }
}

TEST_CASE("total positivity") {
    CHECK(is_totally_positive(one(7)));
    CHECK_FALSE(is_totally_positive(one(7) * Rat(-1)));
    CHECK(is_totally_positive(witness_2power(3)));
    CHECK(is_totally_positive(witness_ppower(5, 1)));
    // 2 + zeta + zeta^-1 over K_5 is totally positive; 1 + zeta + zeta^-1 is not.
    const FieldPtr f = make_field(5);
    const CycloElement t = CycloElement::zeta_power(f, 1) + CycloElement::zeta_power(f, 4);
    CHECK(is_totally_positive(one(5) * Rat(2) + t));
    CHECK_FALSE(is_totally_positive(one(5) + t));
    CHECK_THROWS_AS(is_totally_positive(CycloElement::zero(f)), SingularForm);

    oracle::Rng rng(43);
    for (u64 n : {5, 8, 12, 7}) {
        const FieldPtr fn = make_field(n);
        for (int k = 0; k < 30; ++k) {
            // Real elements from random x + x*, sometimes shifted to positive.
            const CycloElement x = rng.integral(fn, -2, 2);
            const CycloElement a = x + conj(x) + one(n) * Rat(rng.uniform(0, 6));
            if (a.is_zero()) continue;
            CHECK(is_totally_positive(a) == totally_positive_by_embeddings(a));
        }
        for (int k = 0; k < 10; ++k) {
            const CycloElement a = rng.totally_positive(fn);
            CHECK(is_totally_positive(a));
            CHECK(totally_positive_by_embeddings(a));
        }
    }
}

TEST_CASE("boundary form over K_8") {
    const MinimaReport r = shortest(trace_lattice(witness_2power(3)));
    CHECK(r.mu == 4);
    CHECK(trace(witness_2power(3)) == 4);
}
