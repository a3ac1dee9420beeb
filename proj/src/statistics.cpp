#include "twistbaker/statistics.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "twistbaker/errors.hpp"
#include "twistbaker/symbolic.hpp"

namespace twistbaker {

Observable Observable::coordinate(std::size_t j) {
  return Observable{"x" + std::to_string(j + 1),
                    [j](const Point& p) { return p[j]; },
                    j == 0 ? Rational(0) : Rational(1, 2)};
}

Observable Observable::coordinate_squared(std::size_t j) {
  return Observable{"x" + std::to_string(j + 1) + "^2",
                    [j](const Point& p) { return Rational(p[j] * p[j]); }, Rational(1, 3)};
}

Observable Observable::cylinder_indicator(const Word& w) {
  if (w.empty()) throw DomainError("cylinder indicator of the empty word");
  return Observable{"1[" + w.str() + "]",
                    [w](const Point& p) {
                      return kneading_prefix(p, w.size()) == w ? Rational(1) : Rational(0);
                    },
                    pow2(-static_cast<long>(w.size()))};
}

PeriodicPointRecord density_witness(const Word& prefix, Dimension dim, EigenClass target) {
  if (prefix.empty()) throw DomainError("density_witness needs a nonempty prefix");
  Word w = prefix;
  if (w.all_l()) w.push_back(Symbol::R);
  const std::size_t m = dim.size();
  const std::size_t want = target == EigenClass::Real ? 0 : 1 % m;
  while (w.count_r() % m != want) w.push_back(Symbol::R);
  PeriodicPointRecord rec = make_record(w, dim);
  if (rec.eigen_class != target) {
    throw InvariantViolation("density witness " + w.str() + " has the wrong eigenvalue class");
  }
  if (!rectangle(prefix, dim).contains(rec.point)) {
    throw InvariantViolation("density witness " + w.str() + " left the prefix rectangle");
  }
  return rec;
}

long TheoremBConfig::p_at(std::size_t k) const {
  if (k == 0) throw DomainError("p_k is 1-based");
  if (!p.empty()) {
    if (k > p.size()) throw DomainError("p sequence too short for term " + std::to_string(k));
    return p[k - 1];
  }
  long fact = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    if (fact > (1L << 40) / static_cast<long>(i)) throw ResourceError("p_k overflows");
    fact *= static_cast<long>(i);
  }
  return m * fact;
}

std::vector<TheoremBTerm> theorem_b_sequence(const TheoremBConfig& cfg, std::size_t count,
                                             std::size_t max_symbols) {
  const Dimension dim(cfg.m);
  if (count < 1) throw DomainError("theorem_b_sequence needs count >= 1");
  std::vector<TheoremBTerm> terms;
  Word word;
  long before = 0;  // sum_{k<j} p_k
  for (std::size_t j = 1; j <= count; ++j) {
    const long pj = cfg.p_at(j);
    if (pj < 1) throw DomainError("p_k must be positive");
    const long total = before + pj;
    if (total % cfg.m != 0) throw DomainError("partial sums of p must be multiples of M");
    if (static_cast<std::size_t>(total) > max_symbols) {
      throw ResourceError("word length " + std::to_string(total) + " exceeds the budget of " +
                          std::to_string(max_symbols) + " symbols");
    }
    for (long i = 0; i + 1 < pj; ++i) word.push_back(Symbol::L);
    word.push_back(Symbol::R);

    if (j % static_cast<std::size_t>(cfg.m) == 0) {
      if (prime_period(word) != word.size()) {
        throw InvariantViolation("theorem B word " + std::to_string(j) + " is a repetition");
      }
      TheoremBTerm term;
      term.j = j;
      term.word = word;
      term.chi_log2 = eigen_report(monomial_of_word(word, dim), word.size()).chi_log2;
      term.bound_log2 = Rational(BigInt(before + 1), BigInt(total));
      term.bound_log2.canonicalize();
      if (!(term.chi_log2 > 0) || term.chi_log2 > term.bound_log2) {
        throw InvariantViolation("theorem B term " + std::to_string(j) + " violates 0 < chi <= bound");
      }
      if (!terms.empty() && !(term.bound_log2 < terms.back().bound_log2)) {
        throw InvariantViolation("theorem B bounds are not strictly decreasing");
      }
      terms.push_back(std::move(term));
    }
    before = total;
  }
  return terms;
}

EquidistributionReport equidistribution_report(const std::vector<PeriodicPointRecord>& records,
                                               ClassFilter filter,
                                               const std::vector<Observable>& observables,
                                               std::size_t cylinder_depth) {
  if (cylinder_depth > 20) throw ResourceError("cylinder depth above 20");
  EquidistributionReport rep;
  rep.n = records.empty() ? 0 : records.front().word.size();
  rep.filter = filter;
  rep.cylinder_depth = cylinder_depth;

  std::vector<Rational> sums(observables.size(), 0);
  std::vector<std::uint64_t> leaf(std::size_t{1} << cylinder_depth, 0);
  for (const auto& r : records) {
    if (!matches(filter, r.eigen_class)) continue;
    ++rep.count;
    for (std::size_t i = 0; i < observables.size(); ++i) sums[i] += observables[i].evaluate(r.point);
    if (cylinder_depth > 0) {
      const Word w = kneading_prefix(r.point, cylinder_depth);
      std::uint64_t idx = 0;
      for (Symbol s : w) idx = (idx << 1) | (s == Symbol::R ? 1U : 0U);
      ++leaf[idx];
    }
  }
  rep.defined = rep.count > 0;
  if (!rep.defined) return rep;

  const Rational count(BigInt(static_cast<unsigned long>(rep.count)));
  for (std::size_t i = 0; i < observables.size(); ++i) {
    ObservableResult res;
    res.name = observables[i].name;
    res.average = sums[i] / count;
    res.exact_mean = observables[i].exact_mean;
    if (res.exact_mean) res.deviation = std::fabs(Rational(res.average - *res.exact_mean).get_d());
    rep.observables.push_back(std::move(res));
  }

  rep.cylinder_discrepancy = 0;
  std::vector<std::uint64_t> level = leaf;
  for (std::size_t d = cylinder_depth; d >= 1; --d) {
    const Rational mass = pow2(-static_cast<long>(d));
    for (std::uint64_t i = 0; i < level.size(); ++i) {
      Rational freq(BigInt(static_cast<unsigned long>(level[i])), BigInt(static_cast<unsigned long>(rep.count)));
      freq.canonicalize();
      const Rational gap = abs(freq - mass);
      if (gap > rep.cylinder_discrepancy) {
        rep.cylinder_discrepancy = gap;
        rep.worst_word = Word::from_index(i, d);
      }
    }
    std::vector<std::uint64_t> parent(level.size() / 2, 0);
    for (std::uint64_t i = 0; i < level.size(); ++i) parent[i / 2] += level[i];
    level = std::move(parent);
  }
  return rep;
}

EquidistributionReport equidistribution_report(std::size_t n, Dimension dim, ClassFilter filter,
                                               const std::vector<Observable>& observables,
                                               std::size_t cylinder_depth,
                                               const EnumerateOptions& options) {
  EquidistributionReport rep =
      equidistribution_report(enumerate_fix(n, dim, options), filter, observables, cylinder_depth);
  rep.n = n;
  return rep;
}

std::vector<std::pair<std::size_t, Rational>> mixing_correlation(const Word& u, const Word& v,
                                                                 std::size_t n_max) {
  const Rational product = pow2(-static_cast<long>(u.size() + v.size()));
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.emplace_back(n, intersection_measure(u, n, v) - product);
  }
  return out;
}

BirkhoffReport birkhoff_average(const Point& seed, std::size_t steps,
                                const std::vector<Observable>& observables) {
  require_in_domain(seed);
  if (seed[0] == -1) throw DomainError("seed lies in N, the fixed set x1 = -1");
  for (const auto& c : seed.coords()) {
    if (!has_odd_denominator(c)) throw DomainError("seed coordinates need odd denominators");
  }
  if (steps < 1) throw DomainError("birkhoff_average needs at least one step");

  std::vector<Rational> sums(observables.size(), 0);
  std::size_t r_count = 0;
  Point x = seed;
  for (std::size_t k = 0; k < steps; ++k) {
    if (x[0] == -1) {
      throw DomainError("seed orbit falls into N after " + std::to_string(k) + " steps");
    }
    for (std::size_t i = 0; i < observables.size(); ++i) sums[i] += observables[i].evaluate(x);
    if (x[0] >= 0) ++r_count;
    x = apply(x);
  }

  BirkhoffReport rep;
  rep.steps = steps;
  const Rational total(BigInt(static_cast<unsigned long>(steps)));
  for (std::size_t i = 0; i < observables.size(); ++i) {
    ObservableResult res;
    res.name = observables[i].name;
    res.average = sums[i] / total;
    res.exact_mean = observables[i].exact_mean;
    if (res.exact_mean) res.deviation = std::fabs(Rational(res.average - *res.exact_mean).get_d());
    rep.observables.push_back(std::move(res));
  }
  rep.r_frequency = Rational(BigInt(static_cast<unsigned long>(r_count))) / total;
  rep.final_point = std::move(x);
  return rep;
}

}  // namespace twistbaker
