#include "ktori/predicates.hpp"

#include <algorithm>

namespace ktori {

namespace {

// Drops the coordinate along which the normal is largest.
Point2 drop(const Point3& p, int axis) {
  switch (axis) {
    case 0: return {p.y, p.z};
    case 1: return {p.z, p.x};
    default: return {p.x, p.y};
  }
}

int dominant_axis(const Point3& n) {
  Q ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  if (ax >= ay && ax >= az) return 0;
  return ay >= az ? 1 : 2;
}

bool on_segment_2d(const Point2& p, const Point2& a, const Point2& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

int sign(const Q& q) { return sgn(q); }

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sign(dot(cross(b - a, c - a), d - a));
}

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
  return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool collinear(const Point3& a, const Point3& b, const Point3& c) {
  Point3 n = cross(b - a, c - a);
  return n.x == 0 && n.y == 0 && n.z == 0;
}

bool segments_intersect_2d(const Point2& p, const Point2& q, const Point2& a, const Point2& b) {
  int d1 = orient2d(a, b, p), d2 = orient2d(a, b, q);
  int d3 = orient2d(p, q, a), d4 = orient2d(p, q, b);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment_2d(p, a, b)) return true;
  if (d2 == 0 && on_segment_2d(q, a, b)) return true;
  if (d3 == 0 && on_segment_2d(a, p, q)) return true;
  if (d4 == 0 && on_segment_2d(b, p, q)) return true;
  return false;
}

bool point_in_triangle_2d(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
  int s1 = orient2d(a, b, p), s2 = orient2d(b, c, p), s3 = orient2d(c, a, p);
  bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
  bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
  return !(has_neg && has_pos);
}

bool segment_triangle_intersect(const Point3& p, const Point3& q, const Point3& a, const Point3& b,
                                const Point3& c) {
  const int o1 = orient3d(a, b, c, p), o2 = orient3d(a, b, c, q);
  if (o1 * o2 > 0) return false;
  if (o1 == 0 && o2 == 0) {
    int axis = dominant_axis(cross(b - a, c - a));
    Point2 p2 = drop(p, axis), q2 = drop(q, axis), a2 = drop(a, axis), b2 = drop(b, axis), c2 = drop(c, axis);
    if (point_in_triangle_2d(p2, a2, b2, c2) || point_in_triangle_2d(q2, a2, b2, c2)) return true;
    return segments_intersect_2d(p2, q2, a2, b2) || segments_intersect_2d(p2, q2, b2, c2) ||
           segments_intersect_2d(p2, q2, c2, a2);
  }
  const int s1 = orient3d(p, q, a, b), s2 = orient3d(p, q, b, c), s3 = orient3d(p, q, c, a);
  bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
  bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
  return !(has_neg && has_pos);
}

bool triangles_intersect(const Point3& a0, const Point3& a1, const Point3& a2, const Point3& b0,
                         const Point3& b1, const Point3& b2) {
  return segment_triangle_intersect(a0, a1, b0, b1, b2) || segment_triangle_intersect(a1, a2, b0, b1, b2) ||
         segment_triangle_intersect(a2, a0, b0, b1, b2) || segment_triangle_intersect(b0, b1, a0, a1, a2) ||
         segment_triangle_intersect(b1, b2, a0, a1, a2) || segment_triangle_intersect(b2, b0, a0, a1, a2);
}

bool ray_in_wedge(const Point3& s, const Point3& x, const Point3& t1, const Point3& t2) {
  if (orient3d(s, t1, t2, x) != 0) return false;
  int axis = dominant_axis(cross(t1 - s, t2 - s));
  Point2 s2 = drop(s, axis), x2 = drop(x, axis), u = drop(t1, axis), v = drop(t2, axis);
  int turn = orient2d(s2, u, v);
  int a = orient2d(s2, u, x2), b = orient2d(s2, x2, v);
  if (a * turn < 0 || b * turn < 0) return false;
  if (a == 0 && b == 0) return false;
  if (a == 0) return dot(x - s, t1 - s) > 0;
  if (b == 0) return dot(x - s, t2 - s) > 0;
  return true;
}

Q point_segment_distance2(const Point3& p, const Point3& a, const Point3& b) {
  Point3 d = b - a;
  Q len2 = norm2(d);
  Q t = dot(p - a, d) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return norm2(p - (a + t * d));
}

Q segment_distance2(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1) {
  Point3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
  Q a = norm2(d1), e = norm2(d2), b = dot(d1, d2), c = dot(d1, r), f = dot(d2, r);
  Q den = a * e - b * b;
  Q best = std::min({point_segment_distance2(p0, q0, q1), point_segment_distance2(p1, q0, q1),
                     point_segment_distance2(q0, p0, p1), point_segment_distance2(q1, p0, p1)});
  if (den != 0) {
    Q s = (b * f - c * e) / den;
    Q t = (a * f - b * c) / den;
    if (s >= 0 && s <= 1 && t >= 0 && t <= 1) best = std::min(best, norm2((p0 + s * d1) - (q0 + t * d2)));
  }
  return best;
}

Point3 circumcenter(const Point3& a, const Point3& b, const Point3& c) {
  Point3 u = b - a, v = c - a;
  Point3 n = cross(u, v);
  Point3 num = norm2(u) * cross(v, n) + norm2(v) * cross(n, u);
  return a + Q(1 / (2 * norm2(n))) * num;
}

}  // namespace ktori
