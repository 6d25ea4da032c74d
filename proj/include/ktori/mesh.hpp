#pragma once

// A triangulated surface with exact rational vertex coordinates.

#include <optional>
#include <string>
#include <vector>

#include "ktori/complex.hpp"
#include "ktori/rational.hpp"

namespace ktori {

struct MeshProvenance {
  std::string construction;  // "tube", "complement", "cyclic", "import"
  std::optional<Q> epsilon;
  std::vector<Point3> source_knot;
  int rings = 0;  // tube rings are vertices 3i+1..3i+3, i < rings
  std::vector<double> twist_degrees;
  std::optional<Cycle> meridian;
  std::vector<std::string> notes;
};

struct Mesh {
  std::vector<Point3> coords;  // coords[v - 1] for label v
  Triangulation complex;
  MeshProvenance provenance;

  const Point3& at(Vertex v) const { return coords[static_cast<std::size_t>(v - 1)]; }
};

}  // namespace ktori
