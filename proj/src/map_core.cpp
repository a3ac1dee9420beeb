#include "twistbaker/map_core.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "twistbaker/errors.hpp"

namespace twistbaker {

Dimension::Dimension(int m) : m_(m) {
  if (m < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(m));
}

bool operator<(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

bool in_domain(const Point& p) {
  if (p.size() < 2) return false;
  if (p[0] < -1 || p[0] > 1) return false;
  for (std::size_t j = 1; j < p.size(); ++j) {
    if (p[j] < 0 || p[j] > 1) return false;
  }
  return true;
}

void require_in_domain(const Point& p) {
  if (!in_domain(p)) throw DomainError("point is outside X = [-1,1] x [0,1]^(M-1)");
}

RegionLabel region(const Point& p) {
  require_in_domain(p);
  return p[0] < 0 ? Symbol::L : Symbol::R;
}

namespace {

// Unchecked single step; callers validate the domain once.
void step_in_place(std::vector<Rational>& x) {
  if (x[0] < 0) {
    x[0] *= 2;
    x[0] += 1;
    return;
  }
  Rational wrapped = 1 - 2 * x.back();
  std::rotate(x.rbegin(), x.rbegin() + 1, x.rend());
  x[0] = std::move(wrapped);
}

}  // namespace

Point apply(const Point& p) {
  require_in_domain(p);
  std::vector<Rational> x = p.coords();
  step_in_place(x);
  return Point(std::move(x));
}

Point apply_t(const Point& p) {
  require_in_domain(p);
  std::vector<Rational> x = p.coords();
  if (x[0] >= 0) std::rotate(x.rbegin(), x.rbegin() + 1, x.rend());
  return Point(std::move(x));
}

Point apply_b(const Point& p) {
  require_in_domain(p);
  std::vector<Rational> x = p.coords();
  x[0] = x[0] < 0 ? Rational(1 + 2 * x[0]) : Rational(1 - 2 * x[0]);
  return Point(std::move(x));
}

Point iterate(const Point& p, std::size_t k) {
  require_in_domain(p);
  std::vector<Rational> x = p.coords();
  for (std::size_t i = 0; i < k; ++i) step_in_place(x);
  return Point(std::move(x));
}

Word kneading_prefix(const Point& p, std::size_t n) {
  require_in_domain(p);
  std::vector<Rational> x = p.coords();
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(x[0] < 0 ? Symbol::L : Symbol::R);
    if (i + 1 < n) step_in_place(x);
  }
  return Word(std::move(out));
}

AffineMap AffineMap::identity(Dimension dim) {
  const std::size_t m = dim.size();
  AffineMap a;
  a.matrix.assign(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i) a.matrix[i][i] = 1;
  a.offset.assign(m, 0);
  return a;
}

Point AffineMap::operator()(const Point& p) const {
  const std::size_t m = size();
  std::vector<Rational> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational acc = Rational(offset[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (matrix[i][j] != 0) acc += Rational(matrix[i][j]) * p[j];
    }
    y[i] = std::move(acc);
  }
  return Point(std::move(y));
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  const std::size_t m = size();
  AffineMap out;
  out.matrix.assign(m, std::vector<BigInt>(m, 0));
  out.offset = offset;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (matrix[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out.matrix[i][j] += matrix[i][k] * inner.matrix[k][j];
      out.offset[i] += matrix[i][k] * inner.offset[k];
    }
  }
  return out;
}

BigInt AffineMap::determinant() const {
  const std::size_t m = size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = Rational(matrix[i][j]);
  Rational det = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < m; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < m; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det.get_num();
}

AffineMap branch_affine(RegionLabel label, Dimension dim) {
  const std::size_t m = dim.size();
  AffineMap a;
  a.matrix.assign(m, std::vector<BigInt>(m, 0));
  a.offset.assign(m, 0);
  a.offset[0] = 1;
  if (label == Symbol::L) {
    for (std::size_t i = 0; i < m; ++i) a.matrix[i][i] = 1;
    a.matrix[0][0] = 2;
  } else {
    a.matrix[0][m - 1] = -2;
    for (std::size_t i = 1; i < m; ++i) a.matrix[i][i - 1] = 1;
  }
  return a;
}

}  // namespace twistbaker
