#ifndef UNITRED_UNIT_SEARCH_HPP
#define UNITRED_UNIT_SEARCH_HPP

#include <vector>

#include "unitred/minima.hpp"

namespace unitred {

/// x integral with |Nm(x)| = 1. Throws InvalidInput for non-integral x.
bool is_unit(const CycloElement& x);

struct UnitMinimumReport {
    Rat mu_star;
    std::vector<MinimaEntry> attaining_units;
    Rat searched_bound;
    std::uint64_t nodes = 0;
};

/// mu*(a) by exhaustive enumeration below bound_factor * Tr(a). Since the
/// element 1 is a unit with form value Tr(a), the unit minimum is among the
/// enumerated vectors whenever bound_factor >= 1.
UnitMinimumReport mu_star(const TraceLattice& lattice, const EnumBudget& budget = {}, const Rat& bound_factor = 1);
UnitMinimumReport mu_star(const CycloElement& a, const EnumBudget& budget = {});

/// Every lattice vector with form value strictly below Tr(a), with norms.
/// a is reduced iff none of them is a unit.
struct ReducednessCertificate {
    bool reduced = false;
    Rat trace;
    Rat mu_star;
    std::vector<MinimaEntry> below_trace;
    std::uint64_t nodes = 0;
};

ReducednessCertificate is_reduced(const TraceLattice& lattice, const EnumBudget& budget = {});
ReducednessCertificate is_reduced(const CycloElement& a, const EnumBudget& budget = {});

/// Least |Nm| of a non-zero non-unit integer of Q(zeta_N), as min_p p^{f_p}
/// with f_p the order of p modulo the prime-to-p part of N. This is the least
/// prime-ideal norm; it equals eta when those prime ideals are principal,
/// which holds for every conductor with phi(N) <= 20.
struct EtaCertificate {
    u64 conductor = 0;
    u64 value = 0;
    u64 prime = 0;
    u64 residue_degree = 0;
};

EtaCertificate eta(u64 conductor);

}  // namespace unitred

#endif
