#ifndef UNITRED_MINIMA_HPP
#define UNITRED_MINIMA_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "unitred/lattice.hpp"
#include "unitred/trace_form.hpp"

namespace unitred {

using NormFunction = std::function<Rat(std::span<const Int>)>;

/// A trace form together with the field norm of the element whose
/// coordinates are a given lattice vector. `norm` may be empty for forms
/// not attached to a field. Coordinate vector e_0 is the element 1.
struct TraceLattice {
    GramMatrix gram;
    NormFunction norm;
};

TraceLattice trace_lattice(const CycloElement& a);

struct MinimaEntry {
    std::vector<Int> coeffs;
    Rat value;
    std::optional<Rat> norm;
};

struct MinimaReport {
    Rat mu;
    std::vector<MinimaEntry> minima;
    Rat exhaustive_bound;
    std::uint64_t nodes_visited = 0;
};

/// Converts integer-scaled enumeration output back to form values and, when
/// the lattice carries a norm, annotates each vector (evaluated in parallel).
std::vector<MinimaEntry> annotate(const TraceLattice& lattice, std::span<const LatticeVector> vectors);

MinimaReport shortest(const TraceLattice& lattice, const EnumBudget& budget = {});
MinimaReport shortest(const GramMatrix& gram, const EnumBudget& budget = {});

bool has_unit_norm(const MinimaEntry& e);

}  // namespace unitred

#endif
