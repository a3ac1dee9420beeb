#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistbaker/map_core.hpp"
#include "twistbaker/periodic.hpp"
#include "twistbaker/rational.hpp"
#include "twistbaker/spectral.hpp"
#include "twistbaker/word.hpp"

namespace twistbaker {

// A test function on X together with its integral against normalized
// Lebesgue measure, when known in closed form.
struct Observable {
  std::string name;
  std::function<Rational(const Point&)> evaluate;
  std::optional<Rational> exact_mean;

  // x_{j+1} (zero-based j). Mean 0 for j = 0, 1/2 otherwise.
  static Observable coordinate(std::size_t j);
  // x_{j+1}^2. Mean 1/3 for every j.
  static Observable coordinate_squared(std::size_t j);
  // Indicator of [w]; mean 2^-|w|.
  static Observable cylinder_indicator(const Word& w);
};

// Extend `prefix` by R's until the twist is 0 mod M (Real) or 1 mod M
// (Complex); an all-L prefix first receives one R.
PeriodicPointRecord density_witness(const Word& prefix, Dimension dim, EigenClass target);

struct TheoremBConfig {
  int m = 2;
  // Empty means p_k = M * k!.
  std::vector<long> p;

  long p_at(std::size_t k) const;  // k is 1-based
};

struct TheoremBTerm {
  std::size_t j = 0;
  Word word;
  Rational chi_log2;
  // (sum_{k<j} p_k + 1) / sum_{k<=j} p_k
  Rational bound_log2;
};

inline constexpr std::size_t kTheoremBSymbolBudget = 5000;

// Words L^{p_1-1} R ... L^{p_j-1} R for j <= count with j a multiple of M.
// Throws ResourceError when a word would exceed `max_symbols`, and
// InvariantViolation when a term breaks 0 < chi <= bound or the bounds fail
// to decrease strictly.
std::vector<TheoremBTerm> theorem_b_sequence(const TheoremBConfig& cfg, std::size_t count,
                                             std::size_t max_symbols = kTheoremBSymbolBudget);

struct ObservableResult {
  std::string name;
  Rational average;
  std::optional<Rational> exact_mean;
  // |average - exact_mean| when the mean is known.
  std::optional<double> deviation;
};

struct EquidistributionReport {
  std::size_t n = 0;
  ClassFilter filter = ClassFilter::All;
  // False when the selected class is empty at this period.
  bool defined = false;
  std::size_t count = 0;
  std::vector<ObservableResult> observables;
  std::size_t cylinder_depth = 0;
  // max over |w| <= depth of |freq([w]) - 2^-|w||.
  Rational cylinder_discrepancy;
  Word worst_word;
};

EquidistributionReport equidistribution_report(const std::vector<PeriodicPointRecord>& records,
                                               ClassFilter filter,
                                               const std::vector<Observable>& observables,
                                               std::size_t cylinder_depth);

EquidistributionReport equidistribution_report(std::size_t n, Dimension dim, ClassFilter filter,
                                               const std::vector<Observable>& observables,
                                               std::size_t cylinder_depth,
                                               const EnumerateOptions& options = {});

// m([u] n F^-n [v]) - m([u]) m([v]) for n = 0 .. n_max.
std::vector<std::pair<std::size_t, Rational>> mixing_correlation(const Word& u, const Word& v,
                                                                 std::size_t n_max);

struct BirkhoffReport {
  std::size_t steps = 0;
  std::vector<ObservableResult> observables;
  Rational r_frequency;
  Point final_point;
};

// Exact orbit average of x_0 .. x_{steps-1}. The seed must lie in X \ N and
// have odd denominators; an orbit that falls into N is rejected.
BirkhoffReport birkhoff_average(const Point& seed, std::size_t steps,
                                const std::vector<Observable>& observables);

}  // namespace twistbaker
