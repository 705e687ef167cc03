#include "unitred/unit_search.hpp"

#include <algorithm>

#include "unitred/errors.hpp"

namespace unitred {

bool is_unit(const CycloElement& x) {
    if (!x.is_integral()) throw InvalidInput("is_unit: element is not integral");
    return abs(norm(x)) == 1;
}

namespace {

void require_positive_definite(const TraceLattice& lattice) {
    if (!lattice.norm) throw InvalidInput("unit search needs a lattice with a field norm");
    if (!ldl(lattice.gram.entries).positive_definite())
        throw InvalidInput("element is not totally positive (trace form not positive definite)");
}

Rat scaled_bound(const TraceLattice& lattice, const Rat& bound) { return bound * lattice.gram.scale; }

}  // namespace

UnitMinimumReport mu_star(const TraceLattice& lattice, const EnumBudget& budget, const Rat& bound_factor) {
    require_positive_definite(lattice);
    if (bound_factor < 1) throw InvalidInput("mu_star: bound factor must be at least 1");
    const Rat trace_a = lattice.gram.entries(0, 0);
    const Rat bound = trace_a * bound_factor;
    const EnumerationResult e = enumerate_below(lattice.gram.scaled, scaled_bound(lattice, bound), budget);

    UnitMinimumReport r;
    r.searched_bound = bound;
    r.nodes = e.nodes;
    // Vectors are sorted by value; the first value level holding a unit is mu*.
    auto it = e.vectors.begin();
    while (it != e.vectors.end()) {
        auto level_end = std::find_if(it, e.vectors.end(), [&](const LatticeVector& v) { return v.value != it->value; });
        auto entries = annotate(lattice, std::span<const LatticeVector>(&*it, static_cast<std::size_t>(level_end - it)));
        for (auto& entry : entries)
            if (has_unit_norm(entry)) r.attaining_units.push_back(std::move(entry));
        if (!r.attaining_units.empty()) {
            r.mu_star = r.attaining_units.front().value;
            return r;
        }
        it = level_end;
    }
    throw std::logic_error("mu_star: the unit 1 was not found below Tr(a)");
}

UnitMinimumReport mu_star(const CycloElement& a, const EnumBudget& budget) { return mu_star(trace_lattice(a), budget); }

ReducednessCertificate is_reduced(const TraceLattice& lattice, const EnumBudget& budget) {
    require_positive_definite(lattice);
    ReducednessCertificate c;
    c.trace = lattice.gram.entries(0, 0);
    const EnumerationResult e = enumerate_below(lattice.gram.scaled, scaled_bound(lattice, c.trace), budget);
    c.nodes = e.nodes;

    const Int trace_scaled = Rat(c.trace * lattice.gram.scale).get_num();
    auto end = std::find_if(e.vectors.begin(), e.vectors.end(), [&](const LatticeVector& v) { return v.value >= trace_scaled; });
    c.below_trace = annotate(lattice, std::span<const LatticeVector>(e.vectors.data(), static_cast<std::size_t>(end - e.vectors.begin())));

    c.reduced = std::none_of(c.below_trace.begin(), c.below_trace.end(), has_unit_norm);
    c.mu_star = c.trace;
    for (const auto& entry : c.below_trace)
        if (has_unit_norm(entry)) {
            c.mu_star = entry.value;
            break;
        }
    return c;
}

ReducednessCertificate is_reduced(const CycloElement& a, const EnumBudget& budget) { return is_reduced(trace_lattice(a), budget); }

EtaCertificate eta(u64 conductor) {
    if (!is_canonical_conductor(conductor) || conductor < 3)
        throw InvalidInput("eta: needs a canonical conductor N >= 3");
    EtaCertificate best{conductor, 0, 0, 0};
    for (u64 p = 2; best.value == 0 || p < best.value; ++p) {
        if (!is_prime(p)) continue;
        u64 rest = conductor;
        while (rest % p == 0) rest /= p;
        const u64 f = multiplicative_order(p % rest == 0 ? 1 : p % rest, rest);
        // p^f overflows only far beyond any candidate that could win.
        if (f > 63) continue;
        unsigned __int128 value = 1;
        for (u64 i = 0; i < f && value <= (static_cast<unsigned __int128>(1) << 64); ++i) value *= p;
        if (value >= (static_cast<unsigned __int128>(1) << 64)) continue;
        if (best.value == 0 || static_cast<u64>(value) < best.value) best = {conductor, static_cast<u64>(value), p, f};
    }
    return best;
}

}  // namespace unitred
