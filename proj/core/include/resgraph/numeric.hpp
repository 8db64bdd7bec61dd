#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace resgraph {

/// Arbitrary-precision integer. All lattice arithmetic is exact.
using Int = mpz_class;

/// Exact rational, always kept in canonical form (lowest terms, q > 0).
using Rat = mpq_class;

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline bool is_even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

/// Exact quotient a / b; caller guarantees divisibility.
Int div_exact(const Int& a, const Int& b);

bool fits_long(const Int& x);

/// Narrow to long, throwing DomainError when the value does not fit.
long to_long(const Int& x);

std::string to_string(const Int& x);

/// Serialize as "p/q" in lowest terms with q > 0; the denominator is
/// always written, so integers come out as "p/1".
std::string format_rational(const Rat& r);

/// Accepts "p" or "p/q" with optional leading minus; throws ParseError.
Rat parse_rational(std::string_view text);

/// Decimal integer with optional leading minus; throws ParseError.
Int parse_integer(std::string_view text);

}  // namespace resgraph
