#ifndef UNITRED_FIELD_HPP
#define UNITRED_FIELD_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "unitred/arith.hpp"
#include "unitred/poly.hpp"
#include "unitred/rational.hpp"

namespace unitred {

/// Precomputed data for Q(zeta_N). Immutable after construction and shared
/// between elements, so concurrent readers need no synchronisation.
///
/// The power basis 1, zeta, ..., zeta^{n-1} (n = phi(N)) is an integral basis,
/// so an element is integral exactly when its coordinates are integers.
class FieldContext {
   public:
    /// Rejects N = 0 and N = 2 (mod 4); for the latter use N/2.
    static std::shared_ptr<const FieldContext> make(u64 conductor);

    u64 conductor() const noexcept { return conductor_; }
    std::size_t degree() const noexcept { return degree_; }
    const IntPoly& cyclo_poly() const noexcept { return cyclo_poly_; }
    const Int& discriminant_abs() const noexcept { return discriminant_abs_; }
    const std::vector<u64>& galois_units() const noexcept { return galois_units_; }

    /// Power-basis coordinates of zeta^k (k taken mod N).
    std::span<const Int> monomial(long long k) const;

    /// Tr(zeta^k) from the Moebius closed form.
    const Int& monomial_trace(long long k) const;

   private:
    FieldContext() = default;
    u64 index(long long k) const;

    u64 conductor_ = 1;
    std::size_t degree_ = 1;
    IntPoly cyclo_poly_;
    Int discriminant_abs_;
    std::vector<u64> galois_units_;
    std::vector<std::vector<Int>> monomials_;
    std::vector<Int> monomial_traces_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

inline FieldPtr make_field(u64 conductor) { return FieldContext::make(conductor); }

/// |Delta| = N^phi(N) / prod_{p | N} p^{phi(N)/(p-1)}.
Int conductor_discriminant(u64 conductor);

/// Element of Q(zeta_N) in power-basis coordinates.
class CycloElement {
   public:
    CycloElement(FieldPtr field, std::vector<Rat> coeffs);

    static CycloElement zero(FieldPtr field);
    static CycloElement from_rational(FieldPtr field, const Rat& value);
    static CycloElement zeta_power(FieldPtr field, long long k);
    static CycloElement from_integers(FieldPtr field, std::span<const Int> coeffs);

    const FieldContext& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::span<const Rat> coeffs() const noexcept { return coeffs_; }
    const Rat& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool is_integral() const;
    bool is_rational() const;

    CycloElement operator-() const;
    CycloElement& operator+=(const CycloElement& rhs);
    CycloElement& operator-=(const CycloElement& rhs);
    CycloElement& operator*=(const CycloElement& rhs);
    CycloElement& operator*=(const Rat& rhs);

    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
    friend CycloElement operator*(CycloElement a, const Rat& q) { return a *= q; }
    friend CycloElement operator*(const Rat& q, CycloElement a) { return a *= q; }
    friend bool operator==(const CycloElement& a, const CycloElement& b);

   private:
    void require_same_field(const CycloElement& rhs, const char* op) const;

    FieldPtr field_;
    std::vector<Rat> coeffs_;
};

/// zeta -> zeta^k. Requires gcd(k, N) = 1.
CycloElement galois_apply(const CycloElement& a, u64 k);
CycloElement conj(const CycloElement& a);

Rat trace(const CycloElement& a);
/// Res(Phi_N, A) where A is the coordinate polynomial of a.
Rat norm(const CycloElement& a);
CycloElement inverse(const CycloElement& a);

/// Image under zeta_N -> zeta_M^{M/N}. Requires N | M.
CycloElement lift(const CycloElement& a, const FieldPtr& target);

/// Components x_0, ..., x_{d-1} in K_N (d = [K_M : K_N]) with
/// y = sum_i lift(x_i) * zeta_M^i. The powers of zeta_M form a relative
/// integral basis, so the x_i are integral exactly when y is.
std::vector<CycloElement> decompose(const CycloElement& y, const FieldPtr& base);
CycloElement recompose(std::span<const CycloElement> parts, const FieldPtr& top);

/// y as an element of K_N; throws InvalidInput when y is not in the subfield.
CycloElement descend(const CycloElement& y, const FieldPtr& base);

/// Tr_{K_M/K_N}(y): sum over automorphisms zeta_M -> zeta_M^t, t = 1 (mod N).
CycloElement rel_trace(const CycloElement& y, const FieldPtr& base);

/// "c0,c1,...,c_{n-1}" with exact rationals; whitespace ignored.
CycloElement parse_element(const FieldPtr& field, std::string_view text);
std::string format_coeffs(std::span<const Rat> coeffs);

}  // namespace unitred

#endif
