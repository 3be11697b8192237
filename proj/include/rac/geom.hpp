#pragma once

#include "rac/rational.hpp"

#include <optional>
#include <stdexcept>

namespace rac {

// A coordinate is always stored as an exact rational. The `exact` flag records
// whether it came from exact input ("5/4") or from a floating computation
// ("1.25", trig output). Sign predicates and intersections are exact either
// way; only the right-angle test degrades to a tolerance when a coordinate is
// floating.
struct Coord {
  Rational value;
  bool exact = true;

  static Coord exact_value(Rational v) { return {std::move(v), true}; }
  static Coord floating(double v) { return {decimal_value_of(v), false}; }
};

struct Point {
  Coord x, y;

  static Point exact(Rational px, Rational py) {
    return {Coord::exact_value(std::move(px)), Coord::exact_value(std::move(py))};
  }
  static Point floating(double px, double py) {
    return {Coord::floating(px), Coord::floating(py)};
  }
  bool is_exact() const { return x.exact && y.exact; }
  double xd() const { return to_double(x.value); }
  double yd() const { return to_double(y.value); }
};

inline bool operator==(const Point& a, const Point& b) {
  return a.x.value == b.x.value && a.y.value == b.y.value;
}
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }
inline bool lex_less(const Point& a, const Point& b) {
  if (a.x.value != b.x.value) return a.x.value < b.x.value;
  return a.y.value < b.y.value;
}

struct Segment {
  Point p, q;

  Segment(Point a, Point b) : p(std::move(a)), q(std::move(b)) {
    if (p == q) throw std::invalid_argument("zero-length segment");
  }
};

struct NotProperCrossing : std::runtime_error {
  NotProperCrossing() : std::runtime_error("segments do not cross properly") {}
};

// Sign of the z-component of (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// Exact dot product of directions (b-a).(d-c).
Rational direction_dot(const Point& a, const Point& b, const Point& c, const Point& d);

enum class IsectKind { Proper, Endpoint, Overlap };

struct Intersection {
  Point at;        // for Overlap: lexicographically smallest point of the shared part
  IsectKind kind;
};

// Total: returns the unique intersection point and its kind, or nullopt when
// the segments are disjoint. `Proper` means interior-interior.
std::optional<Intersection> intersect(const Segment& s1, const Segment& s2);

// Acute (or right) angle between the two segment directions, in (0, pi/2].
// Precondition: the segments cross properly.
double crossing_angle(const Segment& s1, const Segment& s2);

// Right-angle predicate: exact (dot == 0) when all endpoints are exact,
// otherwise |normalized dot| <= eps.
bool is_right_angle(const Segment& s1, const Segment& s2, double eps);

enum class Side { Left, Right, Degenerate };

// The side of the polyline a->bend->b on which the angle at `bend` is < pi.
Side bend_convex_side(const Point& a, const Point& bend, const Point& b);

// True if `pt` lies in the closed segment s (collinearity required).
bool on_segment(const Segment& s, const Point& pt);

}  // namespace rac
