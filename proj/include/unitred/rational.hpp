#ifndef UNITRED_RATIONAL_HPP
#define UNITRED_RATIONAL_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unitred {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q", "p" or "-p/q" (surrounding whitespace ignored). Throws InvalidInput.
Rat parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

Int floor(const Rat& v);
Int ceil(const Rat& v);
// Nearest integer, ties rounded toward +infinity.
Int round_nearest(const Rat& v);

bool is_integer(const Rat& v);
Int lcm_of_denominators(std::span<const Rat> values);

Rat pow(const Rat& base, unsigned long exponent);
Int pow(const Int& base, unsigned long exponent);

std::vector<Rat> to_rationals(std::span<const Int> values);

}  // namespace unitred

#endif
