#include "rac/geom.hpp"

#include <algorithm>
#include <cmath>

namespace rac {

int orientation(const Point& a, const Point& b, const Point& c) {
  Rational v = (b.x.value - a.x.value) * (c.y.value - a.y.value) -
               (b.y.value - a.y.value) * (c.x.value - a.x.value);
  return sign(v);
}

Rational direction_dot(const Point& a, const Point& b, const Point& c, const Point& d) {
  return (b.x.value - a.x.value) * (d.x.value - c.x.value) +
         (b.y.value - a.y.value) * (d.y.value - c.y.value);
}

bool on_segment(const Segment& s, const Point& pt) {
  if (orientation(s.p, s.q, pt) != 0) return false;
  const Rational& px = pt.x.value;
  const Rational& py = pt.y.value;
  auto [xmin, xmax] = std::minmax(s.p.x.value, s.q.x.value);
  auto [ymin, ymax] = std::minmax(s.p.y.value, s.q.y.value);
  return xmin <= px && px <= xmax && ymin <= py && py <= ymax;
}

namespace {

bool coords_exact(const Segment& a, const Segment& b) {
  return a.p.is_exact() && a.q.is_exact() && b.p.is_exact() && b.q.is_exact();
}

}  // namespace

std::optional<Intersection> intersect(const Segment& s1, const Segment& s2) {
  const Point &a = s1.p, &b = s1.q, &c = s2.p, &d = s2.q;
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);

  if (o1 == 0 && o2 == 0) {
    // Collinear. Compare the 1-d extents along the common line.
    bool use_x = a.x.value != b.x.value;
    auto key = [&](const Point& p) { return use_x ? p.x.value : p.y.value; };
    Rational lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    Rational lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return std::nullopt;
    if (lo == hi) {
      Point at = key(a) == lo ? a : key(b) == lo ? b : key(c) == lo ? c : d;
      return Intersection{at, IsectKind::Endpoint};
    }
    Point best = a;
    bool have = false;
    for (const Point& p : {a, b, c, d}) {
      Rational k = key(p);
      if (k < lo || k > hi) continue;
      if (!have || lex_less(p, best)) {
        best = p;
        have = true;
      }
    }
    return Intersection{best, IsectKind::Overlap};
  }

  // Touches at zero-orientation points (T-contacts and shared endpoints).
  if (o1 == 0) return on_segment(s1, c) ? std::make_optional(Intersection{c, IsectKind::Endpoint})
                                        : std::nullopt;
  if (o2 == 0) return on_segment(s1, d) ? std::make_optional(Intersection{d, IsectKind::Endpoint})
                                        : std::nullopt;
  if (o3 == 0) return on_segment(s2, a) ? std::make_optional(Intersection{a, IsectKind::Endpoint})
                                        : std::nullopt;
  if (o4 == 0) return on_segment(s2, b) ? std::make_optional(Intersection{b, IsectKind::Endpoint})
                                        : std::nullopt;

  if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) return std::nullopt;

  // Proper crossing: solve a + t(b-a) = c + u(d-c) exactly.
  Rational d1x = b.x.value - a.x.value, d1y = b.y.value - a.y.value;
  Rational d2x = d.x.value - c.x.value, d2y = d.y.value - c.y.value;
  Rational denom = d1x * d2y - d1y * d2x;
  Rational t = ((c.x.value - a.x.value) * d2y - (c.y.value - a.y.value) * d2x) / denom;
  bool ex = coords_exact(s1, s2);
  Point at{{a.x.value + t * d1x, ex}, {a.y.value + t * d1y, ex}};
  return Intersection{at, IsectKind::Proper};
}

double crossing_angle(const Segment& s1, const Segment& s2) {
  auto isect = intersect(s1, s2);
  if (!isect || isect->kind != IsectKind::Proper) throw NotProperCrossing();
  if (coords_exact(s1, s2) && direction_dot(s1.p, s1.q, s2.p, s2.q) == 0) {
    return std::acos(0.0);  // exactly pi/2 by predicate, not by float luck
  }
  double ux = s1.q.xd() - s1.p.xd(), uy = s1.q.yd() - s1.p.yd();
  double vx = s2.q.xd() - s2.p.xd(), vy = s2.q.yd() - s2.p.yd();
  double dot = ux * vx + uy * vy;
  double cross = ux * vy - uy * vx;
  return std::atan2(std::fabs(cross), std::fabs(dot));
}

bool is_right_angle(const Segment& s1, const Segment& s2, double eps) {
  if (coords_exact(s1, s2)) {
    return direction_dot(s1.p, s1.q, s2.p, s2.q) == 0;
  }
  double ux = s1.q.xd() - s1.p.xd(), uy = s1.q.yd() - s1.p.yd();
  double vx = s2.q.xd() - s2.p.xd(), vy = s2.q.yd() - s2.p.yd();
  double dot = ux * vx + uy * vy;
  double n1 = std::hypot(ux, uy), n2 = std::hypot(vx, vy);
  return std::fabs(dot) <= eps * n1 * n2;
}

Side bend_convex_side(const Point& a, const Point& bend, const Point& b) {
  int o = orientation(a, bend, b);
  if (o == 0) return Side::Degenerate;
  return o > 0 ? Side::Left : Side::Right;
}

}  // namespace rac
