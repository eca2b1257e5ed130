#ifndef GEOPROVE_RATIONAL_HPP
#define GEOPROVE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace geo {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or "p" with optional sign. Returns nullopt on malformed input
// or zero denominator.
std::optional<Rat> parse_rational(std::string_view text);

// Canonical text form, "p/q" or "p" when q == 1.
std::string rational_to_string(const Rat& q);

// Exact integer square root test: returns r with r*r == n when n is a
// perfect square, nullopt otherwise (or when n < 0).
std::optional<Int> exact_sqrt(const Int& n);

// Exact rational square root (numerator and denominator both squares).
std::optional<Rat> exact_sqrt(const Rat& q);

// Reduces q into [0, 1) by subtracting the integer floor. Used for
// direction arithmetic in units of pi.
Rat mod_one(const Rat& q);

}  // namespace geo

#endif
