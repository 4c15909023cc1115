#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hkdisc {

using Int = mpz_class;
/// mpq_class arithmetic keeps values canonical: reduced, positive
/// denominator, zero stored as 0/1.
using Rat = mpq_class;

Int pow(const Int& base, unsigned long exp);
/// Integer power of a rational; negative exponents invert (base must be
/// nonzero then).
Rat pow(const Rat& base, long exp);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
/// Floor division for signed integers.
Int floor_div(const Int& a, const Int& b);

/// Narrow to a machine exponent; throws DomainError when out of range.
long to_long(const Int& value, const char* what);

/// Parse "a" or "a/b" into a canonical rational; throws ParseError.
Rat parse_rat(const std::string& text);
std::string to_string(const Int& value);
std::string to_string(const Rat& value);

} // namespace hkdisc
