#pragma once

// Knot diagrams of stick knots under rational projection directions.

#include <gmpxx.h>

#include <vector>

#include "ktori/homology.hpp"
#include "ktori/mesh.hpp"
#include "ktori/predicates.hpp"
#include "ktori/stick_knot.hpp"

namespace ktori {

struct Crossing {
  int over_component = 0, over_segment = 0;  // segment i runs from vertex i to i+1
  int under_component = 0, under_segment = 0;
  Q over_param, under_param;  // position along the segments, in (0, 1)
  Point2 at;
  int sign = 0;  // +1 when the under strand passes right to left below the over strand
};

struct KnotDiagram {
  Point3 direction;
  std::vector<std::vector<Point2>> projected;  // per component
  std::vector<Crossing> crossings;             // numbered by first encounter along component 0
  std::vector<int> gauss_code;                 // +c over, -c under (1-based), single component only
};

// Deterministic list of rational projection directions.
const std::vector<Point3>& generic_directions();

// Throws NonGenericDirection (triple point, vertex on a strand, overlapping
// edges, edge parallel to the direction) or IntersectingCurves.
KnotDiagram project_diagram(const StickKnot& knot, const Point3& direction);
KnotDiagram project_link(const std::vector<std::vector<Point3>>& components, const Point3& direction);
// First generic direction from generic_directions().
KnotDiagram project_diagram(const StickKnot& knot);

// |det| of the reduced Goeritz matrix of the checkerboard-shaded diagram.
mpz_class knot_determinant(const KnotDiagram& diagram);
mpz_class knot_determinant(const StickKnot& knot);

// Half the signed count of crossings between the two polygons.
int linking_number(const std::vector<Point3>& c, const std::vector<Point3>& k);

// Geometric polygon of a vertex cycle of a mesh.
std::vector<Point3> cycle_polygon(const Mesh& mesh, const Cycle& c);

// Recovers the knot of a tube mesh: the circumcenter of each ring.
StickKnot core_curve(const Mesh& mesh);

struct CycleClassification {
  bool meridian = false;
  HomologySignature cycle_class;
  HomologySignature meridian_class;
  long long longitude_coefficient = 0;  // algebraic intersection with the meridian
  int linking_with_core = 0;
};

// Throws MissingProvenance (not a tube mesh) or SeparatingCycle.
CycleClassification classify_cycle_in_tube(const Mesh& mesh, const Cycle& c);

}  // namespace ktori
