#include "twistbaker/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twistbaker/errors.hpp"
#include "twistbaker/periodic.hpp"

namespace twistbaker {

const char* to_string(EigenClass c) { return c == EigenClass::Real ? "real" : "complex"; }

MonomialMatrix MonomialMatrix::identity(Dimension d) {
  MonomialMatrix mm;
  mm.dim = d.value();
  mm.col.resize(d.size());
  std::iota(mm.col.begin(), mm.col.end(), 0);
  mm.entry.assign(d.size(), MonomialEntry{});
  return mm;
}

void MonomialMatrix::push(Symbol s) {
  ++steps;
  if (s == Symbol::L) {
    entry[0].exponent += 1;
    return;
  }
  // Row 0 becomes -2 * (old last row); row i becomes old row i-1.
  std::rotate(col.rbegin(), col.rbegin() + 1, col.rend());
  std::rotate(entry.rbegin(), entry.rbegin() + 1, entry.rend());
  entry[0].sign = -entry[0].sign;
  entry[0].exponent += 1;
  shift = (shift + 1) % dim;
}

std::vector<std::vector<BigInt>> MonomialMatrix::dense() const {
  const std::size_t m = col.size();
  std::vector<std::vector<BigInt>> out(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    BigInt v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(entry[i].exponent));
    if (entry[i].sign < 0) v = -v;
    out[i][static_cast<std::size_t>(col[i])] = v;
  }
  return out;
}

MonomialMatrix monomial_of_word(const Word& w, Dimension dim) {
  MonomialMatrix mm = MonomialMatrix::identity(dim);
  for (Symbol s : w) mm.push(s);
  return mm;
}

std::vector<CycleData> cycle_decomposition(const MonomialMatrix& mm) {
  const std::size_t m = mm.col.size();
  std::vector<bool> seen(m, false);
  std::vector<CycleData> cycles;
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    CycleData c;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      ++c.length;
      c.sign *= mm.entry[i].sign;
      c.exponent += mm.entry[i].exponent;
      i = static_cast<std::size_t>(mm.col[i]);
    }
    cycles.push_back(c);
  }
  return cycles;
}

EigenReport eigen_report(const MonomialMatrix& mm, std::size_t period) {
  if (period != mm.steps) {
    throw DomainError("eigen_report period " + std::to_string(period) +
                      " does not match step count " + std::to_string(mm.steps));
  }
  if (period == 0) throw DomainError("eigen_report needs at least one step");
  EigenReport report;
  bool first = true;
  Rational min_rate;
  for (const CycleData& c : cycle_decomposition(mm)) {
    Rational rate(BigInt(c.exponent), BigInt(static_cast<long>(c.length)));
    rate.canonicalize();
    for (std::size_t k = 0; k < c.length; ++k) report.moduli_log2.push_back(rate);
    if (c.length >= 3 || (c.length == 2 && c.sign < 0)) report.has_complex = true;
    if (first || rate < min_rate) min_rate = rate;
    if (first || c.exponent < report.min_cycle_exponent) report.min_cycle_exponent = c.exponent;
    first = false;
  }
  std::sort(report.moduli_log2.begin(), report.moduli_log2.end());
  report.chi_log2 = min_rate / Rational(BigInt(static_cast<unsigned long>(period)));
  return report;
}

EigenClass classify(const Word& w, Dimension dim) {
  if (w.empty() || w.all_l()) throw DomainError("classify needs a word containing R");
  return eigen_report(monomial_of_word(w, dim), w.size()).has_complex ? EigenClass::Complex
                                                                     : EigenClass::Real;
}

Rational chi(const Word& w, Dimension dim) {
  if (w.empty() || w.all_l()) throw DomainError("chi needs a word containing R");
  const std::size_t p = prime_period(w);
  return eigen_report(monomial_of_word(w.prefix(p), dim), p).chi_log2;
}

}  // namespace twistbaker
