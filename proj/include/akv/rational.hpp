#ifndef AKV_RATIONAL_HPP
#define AKV_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace akv {

// Exact rational scalar. Everything in the formal ring is computed with these;
// no floating point enters the symbolic side.
using Rational = mpq_class;

// n/d in canonical (reduced, positive-denominator) form. d must be nonzero.
Rational rat(long n, long d = 1);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p" and "p/q" with optional leading sign. Throws akv::Error on junk.
Rational parse_rational(const std::string& s);

// Exact square root when r is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace akv

#endif
