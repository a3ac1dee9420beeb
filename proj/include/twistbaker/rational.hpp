#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace twistbaker {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (lowest terms, positive denominator) after every arithmetic op.
using BigInt = mpz_class;
using Rational = mpq_class;

// Lowest-terms "p/q" form; integers are written with an explicit "/1".
std::string to_fraction_string(const Rational& value);

// Accepts "p/q" or a bare integer "p". Throws DomainError on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// 2^k as an exact rational; k may be negative.
Rational pow2(long k);

double to_double(const Rational& value);

bool has_odd_denominator(const Rational& value);

}  // namespace twistbaker

namespace twistbaker {

// num / den in lowest terms.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace twistbaker
