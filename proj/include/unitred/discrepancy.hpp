#ifndef UNITRED_DISCREPANCY_HPP
#define UNITRED_DISCREPANCY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unitred/field.hpp"
#include "unitred/minima.hpp"

namespace unitred {

/// ((1 + zeta)(1 + zeta^-1))^-1 over K_{2^n}, n >= 3.
CycloElement witness_2power(unsigned n);

/// ((1 - zeta)(1 - zeta^-1))^-1 over K_{p^n}, p an odd prime, n >= 1.
CycloElement witness_ppower(u64 p, unsigned n);

/// 2^{n-3} for N = 2^n (n >= 3), p^{n-1}(p+1)/12 for N = p^n odd.
Rat witness_closed_form(u64 conductor);

struct DiscrepancyCertificate {
    u64 conductor = 0;
    u64 prime = 0;
    unsigned exponent = 0;
    std::vector<Rat> witness;
    Rat trace_a;
    Rat mu_a;
    Rat mu_star;
    Rat ratio;
    Rat closed_form;
    Rat expected_mu;                  // 2^{n-1} at 1 + zeta, p^{n-1}(p-1) at 1 - zeta
    std::vector<Int> expected_minimizer;
    std::vector<MinimaEntry> minima;
    std::vector<MinimaEntry> reduced_evidence;  // every vector with value < trace_a
    bool reduced = false;
    bool minimizer_attained = false;
    bool closed_form_matches = false;
    std::uint64_t nodes = 0;

    /// The closed form is only claimed to be attained when it is >= 1.
    bool tight() const { return closed_form >= 1; }
    bool verified() const { return reduced && minimizer_attained && closed_form_matches; }
};

/// Single exhaustive enumeration below Tr(a): yields mu(a), its minimal
/// vectors and the non-unit evidence. Throws BudgetExceeded.
DiscrepancyCertificate verify_witness(u64 conductor, const EnumBudget& budget = {});

/// Tr(x x*) for x = sum z_i zeta^i.
Rat rho(u64 conductor, std::span<const Rat> z);

/// 2^{n-1} sum z_i^2 for N = 2^n; p^{n-1} sum_i Q(z_i, z_{i+p^{n-1}}, ...) for N = p^n.
Rat rho_closed_form(u64 conductor, std::span<const Rat> z);

/// (p-1) sum m_i^2 - 2 sum_{i<j} m_i m_j, for m of length p-1.
Int q_eval(u64 p, std::span<const Int> m);
Rat q_eval(u64 p, std::span<const Rat> m);

/// Integer matrix of the form Q.
IntMatrix q_matrix(u64 p);

struct L75Report {
    u64 p = 0;
    long box = 0;
    std::uint64_t permutations = 0;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::uint64_t equality_points = 0;  // (r, m) with m != 0 and equality
    Rat min_excess;                     // min over (r, m) of Q(w - m) - Q(w)
    Rat boundary_margin;                // same minimum restricted to max|m_i| = box
    bool min_at_zero = false;

    bool pass() const { return violations == 0 && min_at_zero; }
};

/// Q(w - m) >= Q(w) for w = (r(p-1), ..., r(1))/p over every permutation r
/// and every integer m with |m_i| <= box. Parallel over permutations.
L75Report l75_scan(u64 p, long box);
L75Report l75_scan_serial(u64 p, long box);

struct Eq4Result {
    Rat lhs;
    Rat rhs;
    bool pass = false;
};

/// Tr_{K_M}(lift(a) y y*) against p^k sum_i Tr_{K_N}(a x_i x_i*), where
/// y = sum_i lift(x_i) zeta_M^i and M/N = p^k with p | N.
Eq4Result eq4_check(const CycloElement& a, const CycloElement& y);

struct Eq4Suite {
    u64 base = 0;
    u64 top = 0;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    unsigned passed = 0;
    std::vector<Eq4Result> results;
};

/// Seeded random rational a and integral y; a is not required to be positive.
Eq4Suite eq4_random_suite(u64 base, u64 top, unsigned trials, std::uint64_t seed);

/// rel_trace(zeta_M^k, N) against 0 / p^k zeta_N^{k/p^k}, for k in 0..M-1.
struct KroneckerReport {
    u64 base = 0;
    u64 top = 0;
    unsigned checked = 0;
    unsigned passed = 0;
};
KroneckerReport kronecker_check(u64 base, u64 top);

struct DeltaBound {
    u64 conductor = 0;
    Rat bound;
    u64 divisor = 0;  // 0 when the trivial bound 1 applies
    u64 prime = 0;
    unsigned exponent = 0;
    std::string formula;
    bool desk_verifiable = false;  // phi(divisor) <= 20
};

DeltaBound delta_lower_bound(u64 conductor);

}  // namespace unitred

#endif
