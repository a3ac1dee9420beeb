#include "twistbaker/periodic.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>

#include "twistbaker/errors.hpp"

namespace twistbaker {

AffineMap compose_affine(const Word& w, Dimension dim) {
  if (w.empty()) throw DomainError("compose_affine of the empty word");
  AffineMap acc = AffineMap::identity(dim);
  // Left-multiplying by a branch Jacobian only scales or rotates rows.
  for (Symbol s : w) {
    if (s == Symbol::L) {
      for (auto& v : acc.matrix[0]) v *= 2;
      acc.offset[0] = 2 * acc.offset[0] + 1;
    } else {
      std::rotate(acc.matrix.rbegin(), acc.matrix.rbegin() + 1, acc.matrix.rend());
      std::rotate(acc.offset.rbegin(), acc.offset.rbegin() + 1, acc.offset.rend());
      for (auto& v : acc.matrix[0]) v *= -2;
      acc.offset[0] = 1 - 2 * acc.offset[0];
    }
  }
  return acc;
}

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0) throw SingularSystemError("singular linear system");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < m; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < m; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(m);
  for (std::size_t i = m; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < m; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

Point solve_periodic(const Word& w, Dimension dim) {
  if (w.empty()) throw DomainError("solve_periodic of the empty word");
  if (w.all_l()) {
    throw SingularSystemError("word " + w.str() + " has no isolated periodic point (fixed set N)");
  }
  const std::size_t m = dim.size();
  const AffineMap f = compose_affine(w, dim);
  std::vector<std::vector<Rational>> lhs(m, std::vector<Rational>(m));
  std::vector<Rational> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) lhs[i][j] = Rational(-f.matrix[i][j]);
    lhs[i][i] += 1;
    rhs[i] = Rational(f.offset[i]);
  }
  Point x(solve_linear(std::move(lhs), std::move(rhs)));
  if (!in_domain(x) || x[0] == 0 || x[0] == -1) {
    throw InvariantViolation("periodic point for " + w.str() + " is outside X \\ (N u S)");
  }
  if (kneading_prefix(x, w.size()) != w || iterate(x, w.size()) != x) {
    throw InvariantViolation("periodic point for " + w.str() + " fails the round trip");
  }
  return x;
}

PeriodicPointRecord make_record(const Word& w, Dimension dim) {
  PeriodicPointRecord rec;
  rec.word = w;
  rec.point = solve_periodic(w, dim);
  rec.twist = twist_number(w);
  rec.prime_period = prime_period(w);
  const EigenReport full = eigen_report(monomial_of_word(w, dim), w.size());
  rec.eigen_class = full.has_complex ? EigenClass::Complex : EigenClass::Real;
  rec.min_cycle_exponent = full.min_cycle_exponent;
  rec.chi_log2 = chi(w, dim);
  return rec;
}

std::size_t default_period_cap(Dimension dim) { return dim.value() <= 3 ? 18 : 14; }

std::vector<PeriodicPointRecord> enumerate_fix(std::size_t n, Dimension dim,
                                               const EnumerateOptions& options) {
  const std::size_t cap = options.max_period ? options.max_period : default_period_cap(dim);
  if (n < 1) throw DomainError("period must be at least 1");
  if (n > cap || n >= 63) {
    throw ResourceError("period " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(cap));
  }
  // Index 0 is L^n; indices 1 .. 2^n - 1 are the admissible words in order.
  const std::uint64_t total = (std::uint64_t{1} << n) - 1;
  std::vector<PeriodicPointRecord> records(total);

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned id) {
    try {
      const std::uint64_t begin = total * id / workers;
      const std::uint64_t end = total * (id + 1) / workers;
      for (std::uint64_t i = begin; i < end; ++i) records[i] = make_record(Word::from_index(i + 1, n), dim);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  if (options.check_distinct) {
    std::vector<const Point*> pts;
    pts.reserve(records.size());
    for (const auto& r : records) pts.push_back(&r.point);
    std::sort(pts.begin(), pts.end(), [](const Point* a, const Point* b) { return *a < *b; });
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (*pts[i] == *pts[i - 1]) throw InvariantViolation("two words solved to the same point");
    }
  }
  return records;
}

std::size_t twist_number(const Word& w) { return w.count_r(); }

std::size_t prime_period(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw DomainError("prime_period of the empty word");
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t k = d; k < n && periodic; ++k) periodic = w[k] == w[k - d];
    if (periodic) return d;
  }
  return n;
}

int mobius(long k) {
  if (k < 1) throw DomainError("mobius needs k >= 1");
  int result = 1;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    result = -result;
  }
  if (k > 1) result = -result;
  return result;
}

const char* to_string(ClassFilter f) {
  switch (f) {
    case ClassFilter::All: return "all";
    case ClassFilter::Real: return "real";
    case ClassFilter::Complex: return "complex";
  }
  return "all";
}

bool matches(ClassFilter f, EigenClass c) {
  if (f == ClassFilter::All) return true;
  return (f == ClassFilter::Real) == (c == EigenClass::Real);
}

PrimeCount count_prime_fix(const std::vector<PeriodicPointRecord>& records, std::size_t n,
                           ClassFilter filter) {
  if (n < 1) throw DomainError("period must be at least 1");
  PrimeCount out;
  for (const auto& r : records) {
    if (r.word.size() != n) throw DomainError("record period does not match n");
    if (r.prime_period == n && matches(filter, r.eigen_class)) ++out.direct;
  }
  if (filter == ClassFilter::All) {
    BigInt sum = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      BigInt term = 1;
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), d);
      term -= 1;
      sum += mobius(static_cast<long>(n / d)) * term;
    }
    out.mobius_formula = sum;
  }
  return out;
}

PrimeCount count_prime_fix(std::size_t n, Dimension dim, ClassFilter filter,
                           const EnumerateOptions& options) {
  return count_prime_fix(enumerate_fix(n, dim, options), n, filter);
}

}  // namespace twistbaker
