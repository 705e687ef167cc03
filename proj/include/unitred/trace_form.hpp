#ifndef UNITRED_TRACE_FORM_HPP
#define UNITRED_TRACE_FORM_HPP

#include <span>
#include <utility>

#include "unitred/field.hpp"
#include "unitred/linalg.hpp"

namespace unitred {

enum class Basis { Power, Theta };

/// Exact symmetric matrix of a rational quadratic form together with its
/// integer companion `scaled = scale * entries` used by the lattice code.
struct GramMatrix {
    u64 conductor = 0;  // 0 when the form is not attached to a field
    Basis basis = Basis::Power;
    RatMatrix entries;
    Int scale = 1;
    IntMatrix scaled;

    std::size_t dim() const noexcept { return entries.rows(); }

    static GramMatrix from_entries(RatMatrix entries, u64 conductor = 0, Basis basis = Basis::Power);
    static GramMatrix from_integers(const IntMatrix& entries);
};

/// scale = lcm of the entry denominators, matrix = scale * g.
std::pair<Int, IntMatrix> integer_scale(const RatMatrix& g);

/// Gram matrix of x -> Tr(a x x*) on the power basis:
/// entry (i, j) = Tr(a zeta^{i-j}), symmetrised when a is not real.
GramMatrix gram(const CycloElement& a);

Rat form_value(const GramMatrix& g, std::span<const Int> z);

/// Exact LDL decision; throws SingularForm for a = 0.
bool is_totally_positive(const CycloElement& a);

/// Complex-embedding sign check in double precision. Diagnostic only.
bool totally_positive_by_embeddings(const CycloElement& a);

}  // namespace unitred

#endif
