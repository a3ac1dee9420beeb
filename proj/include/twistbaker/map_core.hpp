#pragma once

#include <cstddef>
#include <vector>

#include "twistbaker/rational.hpp"
#include "twistbaker/word.hpp"

namespace twistbaker {

// Phase-space dimension M >= 2.
class Dimension {
 public:
  explicit Dimension(int m);
  int value() const { return m_; }
  std::size_t size() const { return static_cast<std::size_t>(m_); }
  friend bool operator==(Dimension, Dimension) = default;

 private:
  int m_;
};

// A point of X = [-1,1] x [0,1]^(M-1) with exact rational coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  Dimension dim() const { return Dimension(static_cast<int>(coords_.size())); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  // Lexicographic by coordinate; used to sort and deduplicate point sets.
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Rational> coords_;
};

bool in_domain(const Point& p);
// Throws DomainError unless p has at least two coordinates and lies in X.
void require_in_domain(const Point& p);

using RegionLabel = Symbol;

// x1 < 0 is L; x1 >= 0 (including the discontinuity set x1 = 0) is R.
RegionLabel region(const Point& p);

// The twisted baker map F = B o T.
Point apply(const Point& p);
// Identity on X_L, cyclic coordinate shift (x_M, x_1, ..., x_{M-1}) on X_R.
Point apply_t(const Point& p);
// Tent map on x1, identity on the remaining coordinates.
Point apply_b(const Point& p);

// F^k(p).
Point iterate(const Point& p, std::size_t k);

// Itinerary a_0(p) ... a_{n-1}(p).
Word kneading_prefix(const Point& p, std::size_t n);

// x -> matrix * x + offset with integer coefficients.
struct AffineMap {
  std::vector<std::vector<BigInt>> matrix;
  std::vector<BigInt> offset;

  static AffineMap identity(Dimension dim);
  std::size_t size() const { return offset.size(); }
  Point operator()(const Point& p) const;
  // this o inner
  AffineMap after(const AffineMap& inner) const;
  BigInt determinant() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// Exact affine form of F on X_L or X_R.
AffineMap branch_affine(RegionLabel label, Dimension dim);

}  // namespace twistbaker
