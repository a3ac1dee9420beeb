#include "twistbaker/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "twistbaker/errors.hpp"

namespace twistbaker {

namespace {

void check_modulus(unsigned m, unsigned r) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  if (r >= m) {
    throw DomainError("residue " + std::to_string(r) + " out of range for modulus " +
                      std::to_string(m));
  }
}

std::vector<BigInt> pascal_row(unsigned n) {
  std::vector<BigInt> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned k = i; k > 0; --k) row[k] += row[k - 1];
  }
  return row;
}

}  // namespace

BigInt multisection(unsigned n, unsigned m, unsigned r) {
  check_modulus(m, r);
  const std::vector<BigInt> row = pascal_row(n);
  BigInt sum = 0;
  for (unsigned k = r; k <= n; k += m) sum += row[k];
  return sum;
}

double multisection_trig(unsigned n, unsigned m, unsigned r) {
  check_modulus(m, r);
  const double pi = std::numbers::pi;
  double sum = 0.0;
  for (unsigned k = 0; k < m; ++k) {
    const double base = 2.0 * std::cos(pi * k / m);
    const double phase = pi * (static_cast<double>(n) - 2.0 * r) * k / m;
    sum += std::pow(base, static_cast<double>(n)) * std::cos(phase);
  }
  return sum / m;
}

BigInt fix_count(unsigned n) {
  if (n < 1) throw DomainError("period must be at least 1");
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n);
  return p - 1;
}

BigInt fix_count_residue(unsigned n, unsigned m, unsigned r) {
  if (n < 1) throw DomainError("period must be at least 1");
  BigInt count = multisection(n, m, r);
  if (r == 0) count -= 1;
  return count;
}

ResidueCountReport proportion_report(unsigned n, unsigned m) {
  if (n < 1) throw DomainError("period must be at least 1");
  check_modulus(m, 0);
  ResidueCountReport rep;
  rep.n = n;
  rep.m = m;
  rep.total = fix_count(n);
  const double alpha = std::cos(std::numbers::pi / m);
  rep.bound = (m - 1.0) / m * std::pow(alpha, static_cast<double>(n));
  rep.tolerance = rep.bound + 2.0 / rep.total.get_d();
  const Rational share(BigInt(1), BigInt(m));
  BigInt sum = 0;
  for (unsigned r = 0; r < m; ++r) {
    BigInt c = fix_count_residue(n, m, r);
    sum += c;
    Rational ratio(c, rep.total);
    ratio.canonicalize();
    const Rational diff = ratio - share;
    rep.max_deviation = std::max(rep.max_deviation, std::fabs(diff.get_d()));
    rep.ratio[r] = ratio;
    rep.per_residue[r] = std::move(c);
  }
  if (sum != rep.total) throw InvariantViolation("residue counts do not sum to 2^n - 1");
  if (rep.max_deviation > rep.tolerance) {
    throw InvariantViolation("residue proportion outside the multisection bound");
  }
  return rep;
}

std::pair<Rational, Rational> ratio_lower_bounds(unsigned m) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  Rational real(BigInt(1), BigInt(m));
  Rational complex(BigInt(std::min(m - 1, 2U)), BigInt(m));
  real.canonicalize();
  complex.canonicalize();
  return {real, complex};
}

}  // namespace twistbaker
