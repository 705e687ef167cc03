#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "unitred/errors.hpp"
#include "unitred/reducibility.hpp"
#include "unitred/unit_search.hpp"

using namespace unitred;

namespace {

std::vector<u64> primes_between(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 p = lo; p <= hi; ++p) {
        bool prime = p > 1;
        for (u64 d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
        if (prime) out.push_back(p);
    }
    return out;
}

// Known Hermite constants in floating point: gamma_n for n = 1..8.
double hermite_float(unsigned n) {
    static const double g[] = {1.0, std::sqrt(4.0 / 3.0), std::cbrt(2.0), std::sqrt(2.0),
                               std::pow(8.0, 0.2), std::pow(64.0 / 3.0, 1.0 / 6.0), std::pow(64.0, 1.0 / 7.0), 2.0};
    return g[n - 1];
}

}  // namespace

TEST_CASE("Hermite powers") {
    const Rat expected[] = {1, Rat(4, 3), 2, 4, 8, Rat(64, 3), 64, 256};
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(hermite_pow(n) == expected[n - 1]);
        CHECK(std::abs(std::pow(hermite_float(n), n) - hermite_pow(n).get_d()) < 1e-9);
    }
    CHECK_THROWS_AS(hermite_pow(9), InvalidInput);
    CHECK_THROWS_AS(hermite_pow(0), InvalidInput);
}

TEST_CASE("criterion") {
    const auto c8 = strong_criterion(8);
    CHECK(c8.outcome == CriterionOutcome::Equal);
    CHECK(c8.lhs == 1024);
    CHECK(c8.rhs == 1024);
    const auto c9 = strong_criterion(9);
    CHECK(c9.outcome == CriterionOutcome::Equal);
    CHECK(c9.lhs == 419904);
    CHECK(c9.rhs == 419904);
    CHECK(c9.degree == 6);
    CHECK(strong_criterion(15).outcome == CriterionOutcome::Strict);
    CHECK(strong_criterion(7).lhs == Rat(1075648, 3));
    CHECK_THROWS_AS(strong_criterion(11), InvalidInput);
    CHECK_THROWS_AS(strong_criterion(6), InvalidInput);

    // gamma_n |Delta|^(1/n) against n eta^(2/n) in floating point away from equality.
    for (u64 n : {3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24}) {
        const auto c = strong_criterion(n);
        const unsigned d = c.degree;
        CHECK(c.discriminant_abs == conductor_discriminant(n));
        CHECK(c.eta.value == eta(n).value);
        CHECK(c.lhs == hermite_pow(d) * c.discriminant_abs);
        CHECK(c.rhs == Rat(pow(Int(d), d) * Int(c.eta.value) * Int(c.eta.value)));
        const double l = hermite_float(d) * std::pow(c.discriminant_abs.get_d(), 1.0 / d);
        const double r = d * std::pow(static_cast<double>(c.eta.value), 2.0 / d);
        if (c.outcome == CriterionOutcome::Strict) CHECK(l < r * (1 - 1e-12));
        if (c.outcome == CriterionOutcome::Fail) CHECK(l > r * (1 + 1e-12));
        if (c.outcome == CriterionOutcome::Equal) CHECK(std::abs(l - r) < 1e-9 * r);
    }
}

TEST_CASE("boundary forms") {
    const auto b8 = boundary_analysis(8);
    CHECK(b8.minima.mu == 4);
    CHECK(b8.trace_a == 4);
    CHECK(b8.norm_x == 2);
    CHECK(b8.has_unit_minimum);
    CHECK(b8.has_x_minimum);
    CHECK(b8.weakly);
    const auto b9 = boundary_analysis(9);
    CHECK(b9.minima.mu == 6);
    CHECK(b9.norm_x == 3);
    CHECK(b9.x == std::vector<Rat>{1, 1, 0, 1, 0, 0});
    CHECK(b9.has_unit_minimum);
    CHECK(b9.has_x_minimum);
    CHECK(b9.weakly);
    bool saw_x = false;
    for (const auto& e : b9.minima.minima) {
        REQUIRE(e.norm);
        CHECK((abs(*e.norm) == 1 || abs(*e.norm) == 3));
        saw_x = saw_x || e.coeffs == std::vector<Int>{1, 1, 0, 1, 0, 0};
    }
    CHECK(saw_x);
    CHECK_THROWS_AS(boundary_analysis(5), InvalidInput);
}

TEST_CASE("forbidden divisors") {
    const auto d16 = not_ur_by_divisor(16);
    REQUIRE(d16);
    CHECK(d16->divisor == 16);
    CHECK(d16->prime == 2);
    CHECK(d16->exponent == 4);
    const auto d39 = not_ur_by_divisor(39);
    REQUIRE(d39);
    CHECK(d39->divisor == 13);
    CHECK(d39->exponent == 1);
    CHECK(not_ur_by_divisor(75)->divisor == 25);
    CHECK_FALSE(not_ur_by_divisor(15));
    CHECK_FALSE(not_ur_by_divisor(11));
    CHECK_FALSE(not_ur_by_divisor(72));
    CHECK(not_ur_by_divisor(144)->divisor == 16);
}

TEST_CASE("classification") {
    for (u64 n : {1, 3, 4, 5, 7, 12, 15}) CHECK_MESSAGE(classify(n).verdict == Verdict::StronglyUR, n);
    for (u64 n : {8, 9}) CHECK_MESSAGE(classify(n).verdict == Verdict::WeaklyUR, n);
    for (u64 n : {16, 27, 25, 49, 121}) CHECK_MESSAGE(classify(n).verdict == Verdict::NotUR, n);
    for (u64 p : primes_between(13, 97)) CHECK_MESSAGE(classify(p).verdict == Verdict::NotUR, p);
    for (u64 n : {11, 20, 21, 24}) CHECK_MESSAGE(classify(n).verdict == Verdict::Unknown, n);
    CHECK_THROWS_AS(classify(6), InvalidInput);

    const auto c8 = classify(8);
    CHECK(c8.criterion_lhs == Rat(1024));
    CHECK(c8.criterion_rhs == Rat(1024));
    CHECK(std::holds_alternative<CriterionResult>(c8.evidence.front()));
    CHECK(std::any_of(c8.evidence.begin(), c8.evidence.end(),
                      [](const Evidence& e) { return std::holds_alternative<BoundaryAnalysis>(e); }));
    const auto c16 = classify(16);
    REQUIRE(c16.evidence.size() == 1);
    CHECK(std::get<DivisorCitation>(c16.evidence[0]).divisor == 16);
    CHECK(to_string(Verdict::WeaklyUR) == "WeaklyUR");
}

TEST_CASE("NotUR propagates to multiples") {
    std::vector<u64> canon;
    for (u64 n = 3; n <= 120; ++n)
        if (is_canonical_conductor(n)) canon.push_back(n);
    for (u64 n : canon) {
        if (classify(n).verdict != Verdict::NotUR) continue;
        for (u64 m : canon)
            if (m % n == 0) CHECK_MESSAGE(classify(m).verdict == Verdict::NotUR, n, " | ", m);
    }
    // Unit reducible conductors have no forbidden divisor.
    for (u64 n : canon) {
        const Verdict v = classify(n).verdict;
        if (v == Verdict::StronglyUR || v == Verdict::WeaklyUR) CHECK_FALSE(not_ur_by_divisor(n));
    }
}

TEST_CASE("strict criterion fields: random forms have unit minima") {
    oracle::Rng rng(71);
    for (u64 n : {5, 7, 12, 15}) {
        REQUIRE(strong_criterion(n).outcome == CriterionOutcome::Strict);
        const FieldPtr f = make_field(n);
        for (int t = 0; t < 25; ++t) {
            const CycloElement a = rng.totally_positive(f);
            const TraceLattice l = trace_lattice(a);
            const MinimaReport m = shortest(l);
            CHECK(mu_star(l).mu_star == m.mu);
            for (const auto& e : m.minima) CHECK(has_unit_norm(e));
        }
    }
}
