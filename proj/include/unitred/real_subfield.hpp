#ifndef UNITRED_REAL_SUBFIELD_HPP
#define UNITRED_REAL_SUBFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unitred/field.hpp"
#include "unitred/minima.hpp"
#include "unitred/reducibility.hpp"
#include "unitred/trace_form.hpp"

namespace unitred {

/// K_N^+ = Q(theta), theta = zeta_N + zeta_N^-1, with integral basis
/// 1, theta, ..., theta^{m-1} (m = phi(N)/2, or 1 for N in {1, 3, 4}).
class RealFieldContext {
   public:
    static std::shared_ptr<const RealFieldContext> make(u64 conductor);

    u64 conductor() const noexcept { return cyclo_->conductor(); }
    std::size_t degree() const noexcept { return degree_; }
    const FieldPtr& cyclotomic() const noexcept { return cyclo_; }
    /// Monic, low-to-high, degree m.
    const IntPoly& min_poly() const noexcept { return min_poly_; }
    /// Row j: power-basis coordinates of theta^j in K_N.
    const RatMatrix& embedding() const noexcept { return embedding_; }
    /// Tr_{K+/Q}(theta^k) for 0 <= k <= 2m - 2.
    const std::vector<Rat>& power_traces() const noexcept { return power_traces_; }

   private:
    RealFieldContext() = default;
    FieldPtr cyclo_;
    std::size_t degree_ = 1;
    IntPoly min_poly_;
    RatMatrix embedding_;
    std::vector<Rat> power_traces_;
};

using RealFieldPtr = std::shared_ptr<const RealFieldContext>;
inline RealFieldPtr make_real_field(u64 conductor) { return RealFieldContext::make(conductor); }

class RealElement {
   public:
    RealElement(RealFieldPtr field, std::vector<Rat> coeffs);
    static RealElement from_rational(RealFieldPtr field, const Rat& value);
    static RealElement theta(RealFieldPtr field);
    static RealElement from_integers(RealFieldPtr field, std::span<const Int> coeffs);

    const RealFieldContext& field() const noexcept { return *field_; }
    const RealFieldPtr& field_ptr() const noexcept { return field_; }
    std::span<const Rat> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;

    RealElement operator-() const;
    RealElement& operator+=(const RealElement& rhs);
    RealElement& operator-=(const RealElement& rhs);
    RealElement& operator*=(const RealElement& rhs);
    RealElement& operator*=(const Rat& rhs);
    friend RealElement operator+(RealElement a, const RealElement& b) { return a += b; }
    friend RealElement operator-(RealElement a, const RealElement& b) { return a -= b; }
    friend RealElement operator*(RealElement a, const RealElement& b) { return a *= b; }
    friend RealElement operator*(RealElement a, const Rat& q) { return a *= q; }
    friend bool operator==(const RealElement& a, const RealElement& b);

   private:
    void require_same_field(const RealElement& rhs, const char* op) const;
    RealFieldPtr field_;
    std::vector<Rat> coeffs_;
};

CycloElement embed(const RealElement& x);
/// Requires conj(y) = y; throws InvalidInput otherwise.
RealElement project(const CycloElement& y, const RealFieldPtr& field);
Rat real_trace(const RealElement& x);
Rat real_norm(const RealElement& x);
RealElement real_inverse(const RealElement& x);

/// Hankel matrix Tr_{K+}(a theta^{i+j}).
GramMatrix real_gram(const RealElement& a);
TraceLattice real_trace_lattice(const RealElement& a);

enum class RealWitnessReading { Inverse, Literal };
std::string to_string(RealWitnessReading r);

/// (2 + theta)^-1 over K_{2^n}^+, n >= 4.
RealElement real_witness_2power(unsigned n);
/// (2 - theta)^-1 by default; 2 - theta under the literal reading.
RealElement real_witness_ppower(u64 p, unsigned n, RealWitnessReading reading = RealWitnessReading::Inverse);

struct RealDiscrepancyCertificate {
    u64 conductor = 0;
    u64 prime = 0;
    unsigned exponent = 0;
    RealWitnessReading reading = RealWitnessReading::Inverse;
    std::vector<Rat> witness;
    Rat trace_a;
    Rat mu_star;
    bool reduced = false;
    std::vector<MinimaEntry> reduced_evidence;
    std::optional<Rat> mu_upper;  // Tr(a (2 +- theta)^2), inverse reading only
    Rat mu_a;                     // exact, from the same enumeration
    std::vector<MinimaEntry> minima;
    std::optional<Rat> bound;     // mu_star / mu_upper
    Rat ratio;                    // mu_star / mu_a
    Rat closed_form_stated;       // 2^{n-4}, or p^{n-1}(p^2-1)/(24(p-2))
    Rat closed_form_exact;        // same bound with the computed Tr(2 - theta)
    std::uint64_t nodes = 0;

    bool agrees_with_stated() const { return bound && *bound == closed_form_stated; }
    bool verified() const { return reduced && bound && *bound == closed_form_exact; }
};

RealDiscrepancyCertificate verify_real_witness(u64 conductor, const EnumBudget& budget = {},
                                               RealWitnessReading reading = RealWitnessReading::Inverse);

struct MuRelations {
    Rat mu_star_real;
    Rat mu_star_lifted;
    Rat mu_real;
    Rat mu_lifted;
    bool mu_star_halves = false;   // mu*(a) = mu*(a')/2
    bool mu_bounded = false;       // mu(a') / 2 <= mu(a)
    bool pass() const { return mu_star_halves && mu_bounded; }
};

MuRelations real_mu_relations_check(const RealElement& a, const EnumBudget& budget = {});

/// Forbidden divisors of the real subfield: 2^5, 3^3, 5^2, 7^2, 11^2, 13^2,
/// 17^2, 19^2, then the least prime p >= 23.
std::optional<DivisorCitation> real_not_ur_by_divisor(u64 conductor);

Certificate classify_real(u64 conductor, const EnumBudget& budget = {});

/// "c0,c1,..." in theta powers.
RealElement parse_real_element(const RealFieldPtr& field, std::string_view text);

}  // namespace unitred

#endif
