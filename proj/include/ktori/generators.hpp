#pragma once

#include <vector>

#include "ktori/complex.hpp"

namespace ktori {

// Moebius' 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
Triangulation moebius_torus();

// The vertex-minimal torus of type 3 x k on 3k-2 vertices (k >= 3).
//
// Cutting along the empty triangle 1-2-3 leaves a cylinder crossed by three
// paths 1 -> 3', 2 -> 1', 3 -> 2' with interior vertices 1 + 3j, 2 + 3j and
// 3 + 3j; the far ends are glued back as 3' = 3, 1' = 1, 2' = 2 and the
// first path carries one extra vertex 3k-2 just before 3'. The three strips
// between consecutive paths are triangulated as zig-zags without interior
// vertices.
Triangulation minimal_torus_3k(int k);

// (1, 4, 7, ..., 3k-2, 3, 6, ..., 3k-3, 2, 5, ..., 3k-4): the Hamiltonian
// cycle of minimal_torus_3k(k), whose rotation is an automorphism.
std::vector<Vertex> minimal_torus_hamiltonian(int k);
// The rotation along that cycle as a permutation indexed by label.
std::vector<Vertex> minimal_torus_rotation(int k);

// Which diagonal splits side quad (a_j, a_{j+1}, b_{j+1}, b_j) of a prism
// between ring a and the next ring b.
enum class PrismDiagonal { Forward, Backward };  // a_j-b_{j+1} or a_{j+1}-b_j

// k rings of 3 vertices (ring i is 3i+1, 3i+2, 3i+3), consecutive rings
// joined by triangulated prisms without caps. `diagonals` picks the diagonal
// per prism (k entries; prism i joins ring i to ring i+1 mod k) or per side
// quad (3k entries, quad j of prism i at 3i+j); empty means all Forward.
Triangulation tube_complex(int k, const std::vector<PrismDiagonal>& diagonals = {});

// Vertices of ring i (0-based).
std::vector<Vertex> tube_ring(int i);

}  // namespace ktori
