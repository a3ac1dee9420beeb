#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "twistbaker/map_core.hpp"
#include "twistbaker/rational.hpp"
#include "twistbaker/word.hpp"

namespace twistbaker {

// A rational interval with per-endpoint closedness.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const;
  bool contains_closure(const Rational& x) const { return lo <= x && x <= hi; }
  Rational midpoint() const { return (lo + hi) / 2; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval intersect(const Interval& a, const Interval& b);

// The basic rectangle [w]: all points whose itinerary starts with w.
struct BasicRectangle {
  Word word;
  std::vector<Interval> intervals;

  std::size_t size() const { return intervals.size(); }
  // Side-length product; boundary flags do not matter.
  Rational volume() const;
  // volume / vol(X); vol(X) = 2.
  Rational normalized_measure() const { return volume() / 2; }
  bool contains(const Point& p) const;
  bool closure_contains(const Point& p) const;
  Point center() const;
};

// Iterated pullback: X_{a_{n-1}}, then preimages under branches a_{n-2}..a_0.
BasicRectangle rectangle(const Word& w, Dimension dim);

// 2^-|w|. Throws InvariantViolation if the geometric measure differs.
Rational cylinder_measure(const Word& w, Dimension dim);

std::pair<BasicRectangle, BasicRectangle> refine(const Word& w, Dimension dim);

// Interior of F^n([w]) equals interior of [w_n ... w_{|w|-1}].
bool image_shift_check(const Word& w, std::size_t n, Dimension dim);

// Normalized measure of [u] intersected with F^-n [v], by the word-overlap rule.
Rational intersection_measure(const Word& u, std::size_t n, const Word& v);

// Same quantity computed from rectangle geometry and exact iteration. Cost is
// exponential in max(|u|, n + |v|); meant for small cross-checks.
Rational intersection_measure_geometric(const Word& u, std::size_t n, const Word& v,
                                        Dimension dim);

// Center of [w]; finite-depth stand-in for the coding map.
Point point_from_prefix(const Word& w, Dimension dim);

// Side lengths of [w_0 ... w_{k-1}] for k = 1..|w|.
std::vector<std::vector<Rational>> diameter_profile(const Word& w, Dimension dim);

// Interiors are nested (either direction) or disjoint.
bool nested_or_disjoint(const BasicRectangle& a, const BasicRectangle& b);

// Interior of the affine image of a box under a monomial affine map.
std::vector<Interval> affine_image_box(const AffineMap& map, const std::vector<Interval>& box);

}  // namespace twistbaker
