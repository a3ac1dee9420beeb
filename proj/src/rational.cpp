#include "twistbaker/rational.hpp"

#include <string>

#include "twistbaker/errors.hpp"

namespace twistbaker {

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  try {
    if (slash == std::string::npos) {
      if (num.set_str(s, 10) != 0) throw DomainError("bad integer: " + s);
    } else {
      if (num.set_str(s.substr(0, slash), 10) != 0 ||
          den.set_str(s.substr(slash + 1), 10) != 0) {
        throw DomainError("bad rational: " + s);
      }
    }
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational: " + s);
  }
  if (den == 0) throw DomainError("zero denominator: " + s);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational pow2(long k) {
  BigInt p = 1;
  const unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  if (k < 0) return Rational(BigInt(1), p);
  return Rational(p);
}

double to_double(const Rational& value) { return value.get_d(); }

bool has_odd_denominator(const Rational& value) {
  return mpz_odd_p(value.get_den().get_mpz_t()) != 0;
}

}  // namespace twistbaker
