#pragma once

// Polyhedral tori of complement knot type: a tube around the knot, joined to
// an enclosing octahedron through one convex-position triangle v1 v2 y.

#include "ktori/mesh.hpp"
#include "ktori/stick_knot.hpp"

namespace ktori {

struct HullEdgeWitness {
  Vertex v1 = 0, v2 = 0;
  Vertex support = 0;  // third vertex of a supporting plane
};

// A ring edge of the tube at an extreme knot vertex that is an edge of the
// convex hull of all tube vertices. Throws EnclosureFailure if none exists.
HullEdgeWitness convex_ring_edge(const Mesh& tube);

// True when a-b is an edge of the convex hull of all mesh vertices.
bool is_hull_edge(const Mesh& mesh, Vertex a, Vertex b);

// 3k + 4 vertices: the tube (ring i is 3i+1..3i+3), y = 3k+1 and the far
// triangle z = 3k+2..3k+4. Throws EnclosureFailure when no placement of y or
// the far triangle is certified within the retry budget.
Mesh complement_construction(const StickKnot& knot);
Mesh complement_construction(const StickKnot& knot, const Q& eps);

}  // namespace ktori
