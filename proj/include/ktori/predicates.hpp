#pragma once

// Exact orientation tests and closed-set intersection predicates.

#include "ktori/rational.hpp"

namespace ktori {

struct Point2 {
  Q x, y;
  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

int sign(const Q& q);

// Sign of det[b-a, c-a, d-a]: positive when d is above the plane of a, b, c
// oriented counterclockwise.
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);
int orient2d(const Point2& a, const Point2& b, const Point2& c);

bool collinear(const Point3& a, const Point3& b, const Point3& c);

// Closed segments / closed triangles; degenerate inputs are not supported.
bool segments_intersect_2d(const Point2& p, const Point2& q, const Point2& a, const Point2& b);
bool point_in_triangle_2d(const Point2& p, const Point2& a, const Point2& b, const Point2& c);
bool segment_triangle_intersect(const Point3& p, const Point3& q, const Point3& a, const Point3& b,
                                const Point3& c);
bool triangles_intersect(const Point3& a0, const Point3& a1, const Point3& a2, const Point3& b0,
                         const Point3& b1, const Point3& b2);

// x - s points into the closed wedge of triangle (s, t1, t2) at s, with x in
// the triangle's plane.
bool ray_in_wedge(const Point3& s, const Point3& x, const Point3& t1, const Point3& t2);

Q point_segment_distance2(const Point3& p, const Point3& a, const Point3& b);
Q segment_distance2(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1);

// Center of the circle through three non-collinear points.
Point3 circumcenter(const Point3& a, const Point3& b, const Point3& c);

}  // namespace ktori
