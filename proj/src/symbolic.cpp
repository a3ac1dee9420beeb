#include "twistbaker/symbolic.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "twistbaker/errors.hpp"

namespace twistbaker {

bool Interval::contains(const Rational& x) const {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo > b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

Rational BasicRectangle::volume() const {
  Rational v = 1;
  for (const auto& iv : intervals) v *= iv.length();
  return v;
}

bool BasicRectangle::contains(const Point& p) const {
  if (p.size() != intervals.size()) return false;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (!intervals[j].contains(p[j])) return false;
  }
  return true;
}

bool BasicRectangle::closure_contains(const Point& p) const {
  if (p.size() != intervals.size()) return false;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (!intervals[j].contains_closure(p[j])) return false;
  }
  return true;
}

Point BasicRectangle::center() const {
  std::vector<Rational> c;
  c.reserve(intervals.size());
  for (const auto& iv : intervals) c.push_back(iv.midpoint());
  return Point(std::move(c));
}

namespace {

std::vector<Interval> region_box(Symbol a, std::size_t m) {
  std::vector<Interval> box(m, Interval{0, 1, true, true});
  if (a == Symbol::L) {
    box[0] = Interval{-1, 0, true, false};
  } else {
    box[0] = Interval{0, 1, true, true};
  }
  return box;
}

// Preimage of `box` under the affine branch `a`, not yet intersected with X_a.
std::vector<Interval> branch_preimage(Symbol a, const std::vector<Interval>& box) {
  const std::size_t m = box.size();
  std::vector<Interval> out(m);
  if (a == Symbol::L) {
    out = box;
    out[0].lo = (box[0].lo - 1) / 2;
    out[0].hi = (box[0].hi - 1) / 2;
    return out;
  }
  for (std::size_t k = 0; k + 1 < m; ++k) out[k] = box[k + 1];
  const Interval& first = box[0];
  out[m - 1] = Interval{(1 - first.hi) / 2, (1 - first.lo) / 2, first.hi_closed, first.lo_closed};
  return out;
}

AffineMap compose_branches(const Word& w, std::size_t n, Dimension dim) {
  AffineMap acc = AffineMap::identity(dim);
  for (std::size_t k = 0; k < n; ++k) acc = branch_affine(w[k], dim).after(acc);
  return acc;
}

}  // namespace

BasicRectangle rectangle(const Word& w, Dimension dim) {
  if (w.empty()) throw DomainError("rectangle of the empty word");
  const std::size_t m = dim.size();
  const std::size_t n = w.size();
  std::vector<Interval> box = region_box(w[n - 1], m);
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Interval> pre = branch_preimage(w[k], box);
    const std::vector<Interval> half = region_box(w[k], m);
    for (std::size_t j = 0; j < m; ++j) pre[j] = intersect(pre[j], half[j]);
    box = std::move(pre);
  }
  for (const auto& iv : box) {
    if (!(iv.lo < iv.hi)) throw InvariantViolation("degenerate basic rectangle for " + w.str());
  }
  return BasicRectangle{w, std::move(box)};
}

Rational cylinder_measure(const Word& w, Dimension dim) {
  if (w.empty()) throw DomainError("cylinder of the empty word");
  const Rational expected = pow2(-static_cast<long>(w.size()));
  if (rectangle(w, dim).normalized_measure() != expected) {
    throw InvariantViolation("cylinder measure mismatch for " + w.str());
  }
  return expected;
}

std::pair<BasicRectangle, BasicRectangle> refine(const Word& w, Dimension dim) {
  Word left = w;
  left.push_back(Symbol::L);
  Word right = w;
  right.push_back(Symbol::R);
  return {rectangle(left, dim), rectangle(right, dim)};
}

std::vector<Interval> affine_image_box(const AffineMap& map, const std::vector<Interval>& box) {
  const std::size_t m = map.size();
  std::vector<Interval> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t col = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (map.matrix[i][j] != 0) {
        if (col != m) throw DomainError("affine_image_box needs a monomial matrix");
        col = j;
      }
    }
    if (col == m) throw DomainError("affine_image_box needs a nonsingular matrix");
    const Rational a(map.matrix[i][col]);
    const Rational b(map.offset[i]);
    const Interval& src = box[col];
    if (a > 0) {
      out[i] = Interval{a * src.lo + b, a * src.hi + b, src.lo_closed, src.hi_closed};
    } else {
      out[i] = Interval{a * src.hi + b, a * src.lo + b, src.hi_closed, src.lo_closed};
    }
  }
  return out;
}

bool image_shift_check(const Word& w, std::size_t n, Dimension dim) {
  if (n >= w.size()) throw DomainError("image_shift_check requires n < |w|");
  const BasicRectangle source = rectangle(w, dim);
  const std::vector<Interval> image = affine_image_box(compose_branches(w, n, dim), source.intervals);
  const BasicRectangle target = rectangle(w.suffix_from(n), dim);
  for (std::size_t j = 0; j < image.size(); ++j) {
    if (image[j].lo != target.intervals[j].lo || image[j].hi != target.intervals[j].hi) return false;
  }
  return true;
}

Rational intersection_measure(const Word& u, std::size_t n, const Word& v) {
  if (u.empty() || v.empty()) throw DomainError("intersection_measure needs nonempty words");
  if (n >= u.size()) return pow2(-static_cast<long>(u.size() + v.size()));
  for (std::size_t k = 0; k < v.size() && n + k < u.size(); ++k) {
    if (u[n + k] != v[k]) return 0;
  }
  return pow2(-static_cast<long>(std::max(u.size(), n + v.size())));
}

Rational intersection_measure_geometric(const Word& u, std::size_t n, const Word& v,
                                        Dimension dim) {
  if (u.empty() || v.empty()) throw DomainError("intersection_measure needs nonempty words");
  const std::size_t depth = std::max(u.size(), n + v.size());
  const std::size_t free = depth - u.size();
  const BasicRectangle target = rectangle(v, dim);
  Rational total = 0;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << free); ++i) {
    const BasicRectangle piece = rectangle(u.concat(Word::from_index(i, free)), dim);
    if (target.contains(iterate(piece.center(), n))) total += piece.normalized_measure();
  }
  return total;
}

Point point_from_prefix(const Word& w, Dimension dim) { return rectangle(w, dim).center(); }

std::vector<std::vector<Rational>> diameter_profile(const Word& w, Dimension dim) {
  if (w.empty()) throw DomainError("diameter_profile of the empty word");
  std::vector<std::vector<Rational>> out;
  out.reserve(w.size());
  for (std::size_t k = 1; k <= w.size(); ++k) {
    const BasicRectangle r = rectangle(w.prefix(k), dim);
    std::vector<Rational> sides;
    sides.reserve(r.size());
    for (const auto& iv : r.intervals) sides.push_back(iv.length());
    out.push_back(std::move(sides));
  }
  return out;
}

bool nested_or_disjoint(const BasicRectangle& a, const BasicRectangle& b) {
  bool a_in_b = true;
  bool b_in_a = true;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Interval& x = a.intervals[j];
    const Interval& y = b.intervals[j];
    if (std::min(x.hi, y.hi) <= std::max(x.lo, y.lo)) return true;
    if (x.lo < y.lo || x.hi > y.hi) a_in_b = false;
    if (y.lo < x.lo || y.hi > x.hi) b_in_a = false;
  }
  return a_in_b || b_in_a;
}

}  // namespace twistbaker
