#pragma once

// Closed polygons in R^3 with exact rational vertices.

#include <iosfwd>
#include <string>
#include <vector>

#include "ktori/rational.hpp"

namespace ktori {

struct StickKnot {
  std::vector<Point3> vertices;

  int k() const { return static_cast<int>(vertices.size()); }
  const Point3& at(int i) const { return vertices[static_cast<std::size_t>(((i % k()) + k()) % k())]; }
};

// Rejects fewer than 3 vertices, coincident vertices, collinear consecutive
// edges and intersecting edges (DegenerateKnot).
void validate_knot(const StickKnot& knot);

// No three vertices collinear and no four coplanar.
bool in_general_position(const StickKnot& knot);

// One "x y z" triple per line; '#' starts a comment. Coordinates are decimals
// or p/q, parsed exactly. Throws ParseError (with line number) or DegenerateKnot.
StickKnot parse_stick_knot(std::istream& in);
StickKnot load_stick_knot(const std::string& path);
void save_stick_knot(const StickKnot& knot, std::ostream& out);
void save_stick_knot(const StickKnot& knot, const std::string& path);

StickKnot scaled(const StickKnot& knot, const Q& factor);

}  // namespace ktori
