#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "twistbaker/rational.hpp"

namespace twistbaker {

// sum over q of C(n, qM + r), by exact Pascal-row accumulation.
BigInt multisection(unsigned n, unsigned m, unsigned r);

// (1/M) sum_k (2 cos(pi k / M))^n cos(pi (n - 2r) k / M), in double precision.
double multisection_trig(unsigned n, unsigned m, unsigned r);

// #fix(n) = 2^n - 1.
BigInt fix_count(unsigned n);

// Number of period-n points whose twist number is congruent to r mod M. Only
// L^n (twist 0) is excluded from fix(n), so 1 is subtracted at r = 0 only.
BigInt fix_count_residue(unsigned n, unsigned m, unsigned r);

struct ResidueCountReport {
  unsigned n = 0;
  unsigned m = 0;
  std::map<unsigned, BigInt> per_residue;
  BigInt total;
  // count / (2^n - 1), exact.
  std::map<unsigned, Rational> ratio;
  // (M - 1)/M cos(pi/M)^n.
  double bound = 0.0;
  // bound + 2 / (2^n - 1); allowed deviation of each ratio from 1/M.
  double tolerance = 0.0;
  // max_r |ratio_r - 1/M|.
  double max_deviation = 0.0;
};

// Throws InvariantViolation if the counts do not partition 2^n - 1 or a
// ratio leaves the tolerance band.
ResidueCountReport proportion_report(unsigned n, unsigned m);

// (1/M, min(M-1, 2)/M): asymptotic lower bounds for the real / complex shares.
std::pair<Rational, Rational> ratio_lower_bounds(unsigned m);

}  // namespace twistbaker
