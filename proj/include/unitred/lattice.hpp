#ifndef UNITRED_LATTICE_HPP
#define UNITRED_LATTICE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "unitred/linalg.hpp"
#include "unitred/rational.hpp"

namespace unitred {

struct LllResult {
    IntMatrix transform;  // rows are the reduced basis in input coordinates; unimodular
    IntMatrix reduced;    // transform * gram * transform^T
};

/// Exact LLL on a positive definite integer Gram matrix.
LllResult lll_reduce(const IntMatrix& gram, const Rat& delta = Rat(99, 100));

/// Size condition |mu_ij| <= 1/2 and Lovasz condition at `delta`, checked exactly.
bool is_lll_reduced(const IntMatrix& gram, const Rat& delta = Rat(99, 100));

struct EnumBudget {
    std::uint64_t max_nodes = 10'000'000;
    std::uint64_t max_results = 1'000'000;
};

/// A non-zero lattice vector in input coordinates, sign-canonical (first
/// non-zero coordinate positive), with its integer form value.
struct LatticeVector {
    std::vector<Int> coeffs;
    Int value;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

/// Orders by value, then lexicographically by coordinates.
bool canonical_less(const LatticeVector& a, const LatticeVector& b);

/// Flips the sign so that the first non-zero coordinate is positive.
void make_sign_canonical(std::vector<Int>& v);

struct EnumerationResult {
    std::vector<LatticeVector> vectors;  // sorted with canonical_less
    std::uint64_t nodes = 0;
};

/// LLL-reduced basis plus the exact LDL of its Gram matrix, reused across
/// enumerations of the same form.
struct PreparedLattice {
    IntMatrix transform;
    IntMatrix reduced;
    RatMatrix lower;
    std::vector<Rat> pivots;

    std::size_t dim() const noexcept { return reduced.rows(); }
};

PreparedLattice prepare_lattice(const IntMatrix& gram);

/// Every v != 0 with v^T G v <= bound, one per +-pair. Fincke-Pohst with exact
/// interval bounds; the subtrees below a breadth-first frontier are searched
/// in parallel and merged in canonical order, so the output does not depend
/// on the schedule. Throws BudgetExceeded rather than truncating.
EnumerationResult enumerate_below(const PreparedLattice& lattice, const Rat& bound, const EnumBudget& budget = {});
EnumerationResult enumerate_below(const IntMatrix& gram, const Rat& bound, const EnumBudget& budget = {});

/// Single-threaded depth-first reference for the same enumeration.
EnumerationResult enumerate_below_serial(const PreparedLattice& lattice, const Rat& bound, const EnumBudget& budget = {});
EnumerationResult enumerate_below_serial(const IntMatrix& gram, const Rat& bound, const EnumBudget& budget = {});

struct ShortestResult {
    Int min_value;
    std::vector<LatticeVector> minima;
    Int searched_bound;  // enumeration below this was exhaustive
    std::uint64_t nodes = 0;
};

/// Minimum and complete set of minimal vectors (up to sign). The bound of the
/// single exhaustive pass is the smallest diagonal entry of the LLL-reduced form.
ShortestResult shortest_vectors(const IntMatrix& gram, const EnumBudget& budget = {});

}  // namespace unitred

#endif
