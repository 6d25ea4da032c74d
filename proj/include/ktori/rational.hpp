#pragma once

// Exact rational points and scalars (GMP).

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ktori {

using Q = mpq_class;

struct Point3 {
  Q x, y, z;

  Point3() = default;
  Point3(Q a, Q b, Q c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}

  bool operator==(const Point3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator<(const Point3& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator-(const Point3& a) { return {-a.x, -a.y, -a.z}; }
inline Point3 operator*(const Q& s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Q dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Q norm2(const Point3& a) { return dot(a, a); }

// Parses "p/q", integers and decimal literals (with optional exponent) exactly.
// Throws ParseError.
Q parse_rational(std::string_view text);

// Fixed-point decimal with `digits` places, rounded half away from zero.
std::string to_decimal(const Q& q, int digits);

// Nearest dyadic rational with the given number of binary digits after the point.
Q from_double(double v, int bits = 40);

std::array<double, 3> to_doubles(const Point3& p);
std::string to_string(const Point3& p);

// Largest r with r = m / 2^e (m of at most `bits` significant bits) and r^2 <= a.
// Exactly homogeneous under scaling `a` by powers of 4.
Q sqrt_lower(const Q& a, int bits = 24);

}  // namespace ktori
