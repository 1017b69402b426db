#ifndef MOPOLY_RATIONAL_HPP
#define MOPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mopoly {

// Exact arbitrary-precision scalars. mpq_class arithmetic always yields the
// canonical form: positive denominator, gcd(numerator, denominator) == 1.
// No floating point appears anywhere in a decision path.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den in canonical form; den may be negative or share factors with num.
Rational make_rational(Integer num, Integer den);

// Accepts "p" or "p/q" (optional leading minus, q > 0 digits only).
std::optional<Rational> parse_rational(const std::string& text);

// Lowest terms: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Decimal string d with |d - value| <= width. width must be > 0.
std::string decimal_approx(const Rational& value, const Rational& width);

}  // namespace mopoly

#endif
