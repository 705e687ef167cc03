#ifndef UNITRED_POLY_HPP
#define UNITRED_POLY_HPP

#include <utility>
#include <vector>

#include "unitred/arith.hpp"
#include "unitred/rational.hpp"

namespace unitred {

// Dense univariate polynomials, coefficient i multiplies x^i. The zero
// polynomial is the empty vector; non-zero polynomials carry no leading zeros.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

// Phi_n, computed as (x^n - 1) / prod_{d | n, d < n} Phi_d by exact division.
IntPoly cyclotomic_polynomial(u64 n);

void trim(RatPoly& p);
void trim(IntPoly& p);
long degree(const RatPoly& p);

RatPoly to_rat_poly(const IntPoly& p);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);

// Euclidean division a = q*b + r with deg r < deg b. b must be non-zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Returns (g, s) with s*a = g (mod b), g = gcd(a, b) made monic.
std::pair<RatPoly, RatPoly> half_xgcd(const RatPoly& a, const RatPoly& b);

// Res(f, g) = lc(f)^deg(g) * prod_{f(alpha)=0} g(alpha).
Rat resultant(const RatPoly& f, const RatPoly& g);

}  // namespace unitred

#endif
