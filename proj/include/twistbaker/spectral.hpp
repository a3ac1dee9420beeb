#pragma once

#include <cstddef>
#include <vector>

#include "twistbaker/map_core.hpp"
#include "twistbaker/rational.hpp"
#include "twistbaker/word.hpp"

namespace twistbaker {

enum class EigenClass { Real, Complex };

const char* to_string(EigenClass c);

// Signed power of two, sign * 2^exponent.
struct MonomialEntry {
  int sign = 1;
  long exponent = 0;
  friend bool operator==(const MonomialEntry&, const MonomialEntry&) = default;
};

// Matrix with one nonzero entry per row, at column col[i]; every Jacobian
// product of the map has this form. Row i carries column (i - shift) mod M.
struct MonomialMatrix {
  int dim = 0;
  int shift = 0;
  std::size_t steps = 0;
  std::vector<int> col;
  std::vector<MonomialEntry> entry;

  static MonomialMatrix identity(Dimension d);
  // Left-multiply by the Jacobian of branch s.
  void push(Symbol s);
  std::vector<std::vector<BigInt>> dense() const;
};

// A cycle of the underlying permutation and the product of its entries.
struct CycleData {
  std::size_t length = 0;
  int sign = 1;
  long exponent = 0;
  friend bool operator==(const CycleData&, const CycleData&) = default;
};

struct EigenReport {
  // log2 |lambda| for each eigenvalue, with multiplicity.
  std::vector<Rational> moduli_log2;
  bool has_complex = false;
  // min over cycles of (exponent / length), divided by the period.
  Rational chi_log2;
  // Smallest cycle exponent; >= 1 means every modulus exceeds 1.
  long min_cycle_exponent = 0;
};

MonomialMatrix monomial_of_word(const Word& w, Dimension dim);

std::vector<CycleData> cycle_decomposition(const MonomialMatrix& mm);

// Eigenvalues of a cycle (l, s * 2^e) are the l-th roots of s * 2^e.
EigenReport eigen_report(const MonomialMatrix& mm, std::size_t period);

EigenClass classify(const Word& w, Dimension dim);

// log2 chi, normalized by the prime period of w.
Rational chi(const Word& w, Dimension dim);

}  // namespace twistbaker
