#pragma once

// The vertex-minimal 3 x k torus inside the boundary of the cyclic
// 4-polytope C_4(3k-2), projected to 3-space by a Schlegel diagram.

#include <array>
#include <vector>

#include <gmpxx.h>

#include "ktori/complex.hpp"
#include "ktori/mesh.hpp"

namespace ktori {

using Point4 = std::array<Q, 4>;

Point4 moment_point(const Q& t);  // (t, t^2, t^3, t^4)

// Gale's evenness condition: a 4-subset of {1..n} is a facet of C_4(n) iff
// every two indices outside it are separated by an even number of members.
bool is_cyclic_facet(int n, std::array<int, 4> s);
// All facets, sorted lexicographically.
std::vector<std::array<int, 4>> cyclic_facets(int n);
// A subset is a face iff some facet contains it.
bool is_cyclic_face(int n, const std::vector<int>& s);

struct CyclicRealization {
  Mesh mesh;
  std::vector<int> position;        // moment-curve parameter t of each label
  std::array<int, 4> facet{};       // projection facet, in parameters t
  Q delta;                          // viewpoint offset beyond the facet
  Cycle core;                       // witness of s(T)
  mpz_class core_determinant;
};

// Vertex v sits at t = its position on the Hamiltonian cycle (1-based).
// Throws InvalidK for k < 3, FaceNotInPolytope naming a triangle that fails
// the face test, EpsilonTooLarge if no viewpoint gives an embedded mesh.
CyclicRealization realize_cyclic(int k);
Mesh cyclic_polytope_realization(int k);

}  // namespace ktori
