#pragma once

#include <cmath>
#include <optional>

namespace avcs {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

inline double planar_euclidean(Point p, Point q) { return std::sqrt(squared_distance(p, q)); }

// Twice the signed area of (a, b, c); positive when c lies left of a->b.
inline double orient(Point a, Point b, Point c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// True when the open segments (a, b) and (c, d) cross at a single interior point.
inline bool segments_properly_cross(Point a, Point b, Point c, Point d) {
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

// Intersection point of closed segments (a, b) and (c, d); nullopt when they
// are disjoint or collinear.
inline std::optional<Point> segment_intersection(Point a, Point b, Point c, Point d) {
  const double rx = b.x - a.x, ry = b.y - a.y;
  const double sx = d.x - c.x, sy = d.y - c.y;
  const double denom = rx * sy - ry * sx;
  if (denom == 0.0) return std::nullopt;
  const double qx = c.x - a.x, qy = c.y - a.y;
  const double t = (qx * sy - qy * sx) / denom;
  const double u = (qx * ry - qy * rx) / denom;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return Point{a.x + t * rx, a.y + t * ry};
}

}  // namespace avcs
