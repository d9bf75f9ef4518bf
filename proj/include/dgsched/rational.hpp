#ifndef DGSCHED_RATIONAL_HPP
#define DGSCHED_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace dgsched {

/* All time quantities in the core are exact rationals. GMP's mpq_class
 * provides canonical-form arithmetic with arbitrary-precision integers;
 * parsing and formatting of external representations live here.
 */
using Rational = mpq_class;
using TimeValue = Rational;

// Parses "12", "-3.25", or "7/2" into an exact rational.
// Throws std::invalid_argument on anything else (floats in scientific
// notation are rejected on purpose: the I/O contract is exact).
Rational rational_from_string(std::string_view text);

// Canonical "num/den" form, e.g. "3/1", "-7/4".
std::string fraction_string(const Rational& value);

// Exact decimal form ("3", "0.125") when the denominator is of the form
// 2^a * 5^b; std::nullopt otherwise.
std::optional<std::string> decimal_string(const Rational& value);

// Decimal form when exact, "num/den" otherwise. parse round-trips both.
std::string compact_string(const Rational& value);

// Fixed-point decimal with `digits` fractional digits, rounded half away
// from zero. Deterministic (integer arithmetic only); used for CSV output.
std::string fixed_decimal_string(const Rational& value, int digits);

inline Rational rational_of(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

mpz_class floor_to_int(const Rational& value);
mpz_class ceil_to_int(const Rational& value);

} // namespace dgsched

#endif
