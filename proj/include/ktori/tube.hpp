#pragma once

// Polyhedral tubes around stick knots.
//
// Each knot vertex v is replaced by a ring of three points on the circle of
// radius eps around v in the plane through v with normal N_v, where N_v is a
// rational unit vector approximating the angle-bisector normal
// unit(w - v) + unit(v - u). A rational orthonormal frame of that plane
// (Householder reflection of e_x, e_y) and rational points on the unit circle
// keep every ring point exactly at distance eps from v.

#include "ktori/mesh.hpp"
#include "ktori/stick_knot.hpp"

namespace ktori {

struct EpsilonBound {
  Q bound_squared;  // (1/16) * min of the squared separation distances
  Q epsilon;        // rational lower approximation of sqrt(bound_squared)
};

// Separation distances: non-adjacent edge pairs and vertex / non-incident
// edge pairs. Throws DegenerateKnot if one vanishes.
EpsilonBound epsilon_bound(const StickKnot& knot);

// epsilon_bound(knot).epsilon, halved until tube_construction succeeds.
Q choose_epsilon(const StickKnot& knot);

// Throws EpsilonTooLarge when some prism is not in convex position or the
// result is not embedded.
Mesh tube_construction(const StickKnot& knot, const Q& eps);

// Ring frame used for knot vertex i: unit normal and orthonormal e1, e2.
struct RingFrame {
  Point3 normal, e1, e2;
};
RingFrame ring_frame(const StickKnot& knot, int i);

}  // namespace ktori
