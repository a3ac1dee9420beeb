#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twistbaker/map_core.hpp"
#include "twistbaker/rational.hpp"
#include "twistbaker/spectral.hpp"
#include "twistbaker/word.hpp"

namespace twistbaker {

struct PeriodicPointRecord {
  Word word;
  Point point;
  std::size_t twist = 0;
  std::size_t prime_period = 0;
  EigenClass eigen_class = EigenClass::Real;
  Rational chi_log2;
  long min_cycle_exponent = 0;
};

// F^n on [w] as A x + b, A = J_{a_{n-1}} ... J_{a_0}.
AffineMap compose_affine(const Word& w, Dimension dim);

// Unique fixed point of F^{|w|} in the closure of [w]. Throws
// SingularSystemError for L^n and InvariantViolation if the solution fails
// the itinerary / return round trip.
Point solve_periodic(const Word& w, Dimension dim);

// Solve (I - A) x = b exactly; partial pivoting by absolute value.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

PeriodicPointRecord make_record(const Word& w, Dimension dim);

// Default period cap: 18 for M = 2, 3 and 14 for M >= 4.
std::size_t default_period_cap(Dimension dim);

struct EnumerateOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  // 0 picks default_period_cap(dim).
  std::size_t max_period = 0;
  bool check_distinct = true;
};

// All 2^n - 1 records of period n in lexicographic word order. The result is
// identical for every worker count.
std::vector<PeriodicPointRecord> enumerate_fix(std::size_t n, Dimension dim,
                                               const EnumerateOptions& options = {});

std::size_t twist_number(const Word& w);

// Smallest d dividing |w| such that w is a power of its length-d prefix.
std::size_t prime_period(const Word& w);

int mobius(long k);

enum class ClassFilter { All, Real, Complex };

const char* to_string(ClassFilter f);
bool matches(ClassFilter f, EigenClass c);

struct PrimeCount {
  long direct = 0;
  // Sum over d | n of mobius(n/d) (2^d - 1); only for ClassFilter::All.
  std::optional<BigInt> mobius_formula;
};

PrimeCount count_prime_fix(std::size_t n, Dimension dim, ClassFilter filter,
                           const EnumerateOptions& options = {});
// Same count from an existing period-n enumeration.
PrimeCount count_prime_fix(const std::vector<PeriodicPointRecord>& records, std::size_t n,
                           ClassFilter filter);

}  // namespace twistbaker
