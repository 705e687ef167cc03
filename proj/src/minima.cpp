#include "unitred/minima.hpp"

#include <cmath>

namespace unitred {

TraceLattice trace_lattice(const CycloElement& a) {
    FieldPtr field = a.field_ptr();
    return {gram(a), [field](std::span<const Int> z) { return norm(CycloElement::from_integers(field, z)); }};
}

std::vector<MinimaEntry> annotate(const TraceLattice& lattice, std::span<const LatticeVector> vectors) {
    std::vector<MinimaEntry> out(vectors.size());
    const long count = static_cast<long>(vectors.size());
#pragma omp parallel for schedule(dynamic, 8) if (count > 64)
    for (long k = 0; k < count; ++k) {
        const auto& v = vectors[static_cast<std::size_t>(k)];
        auto& e = out[static_cast<std::size_t>(k)];
        e.coeffs = v.coeffs;
        e.value = Rat(v.value, lattice.gram.scale);
        e.value.canonicalize();
        if (lattice.norm) e.norm = lattice.norm(v.coeffs);
    }
    return out;
}

MinimaReport shortest(const TraceLattice& lattice, const EnumBudget& budget) {
    const ShortestResult s = shortest_vectors(lattice.gram.scaled, budget);
    MinimaReport r;
    r.mu = Rat(s.min_value, lattice.gram.scale);
    r.mu.canonicalize();
    r.minima = annotate(lattice, s.minima);
    r.exhaustive_bound = Rat(s.searched_bound, lattice.gram.scale);
    r.exhaustive_bound.canonicalize();
    r.nodes_visited = s.nodes;
    return r;
}

MinimaReport shortest(const GramMatrix& gram, const EnumBudget& budget) { return shortest(TraceLattice{gram, {}}, budget); }

bool has_unit_norm(const MinimaEntry& e) { return e.norm && abs(*e.norm) == 1; }

}  // namespace unitred
