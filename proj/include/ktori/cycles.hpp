#pragma once

// Shortest non-separating cycles, marked torus types and the combinatorial
// stick number s(T).
//
// Homotopy classes of unoriented simple closed curves on the torus are the
// classes +-(p, q) of HomologySignature, so "homotopic to M" is decided by
// comparing signatures up to sign.

#include <functional>
#include <optional>

#include "ktori/complex.hpp"
#include "ktori/homology.hpp"

namespace ktori {

using ClassPredicate = std::function<bool(const HomologySignature&)>;

// Shortest simple cycle whose class satisfies `accept` (which must be
// invariant under sign). Ties are broken by the lexicographically least
// vertex sequence starting at its smallest vertex. A breadth-first search in
// the Z^2 covering graph gives the shortest closed walk; when that walk is
// not simple an exhaustive simple-cycle search takes over.
std::optional<Cycle> shortest_simple_cycle(const Triangulation& t, const HomologyBasis& basis,
                                           const ClassPredicate& accept);

struct ShortestResult {
  int length = 0;
  Cycle witness;
};

ShortestResult shortest_nonseparating(const Triangulation& t, const HomologyBasis& basis);
ShortestResult shortest_nonseparating(const Triangulation& t);

struct MarkedType {
  int m = 0;  // m_M: shortest cycle in the class of M
  int k = 0;  // k_M: shortest non-separating cycle in another class
  Cycle witness_m;
  Cycle witness_k;
};

// Throws SeparatingMark if mark bounds a disc.
MarkedType marked_type(const Triangulation& t, const HomologyBasis& basis, const Cycle& mark);
MarkedType marked_type(const Triangulation& t, const Cycle& mark);

struct TorusTypeResult {
  int m = 0;  // shortest non-separating cycle
  int s = 0;  // combinatorial stick number
  Cycle witness_m;
  Cycle witness_s;
  HomologySignature class_m;
  HomologySignature class_s;
};

// s(T) = k_M for M a shortest non-separating cycle.
TorusTypeResult stick_number_and_type(const Triangulation& t, const HomologyBasis& basis);
TorusTypeResult stick_number_and_type(const Triangulation& t);

// 2*ceil(m/2)^2 + (k - 2*ceil(m/2))*m + 1. Throws InvalidType unless 3 <= m <= k.
long long lower_bound(int m, int k);
// (m-3)k + 2 ceil(m/2)^2 - 2 ceil(m/2) m + 3 > 0, i.e. lower_bound(m,k) > 3k-2.
bool bound_strict_gap(int m, int k);

struct CutReport {
  int components = 0;
  int boundary_circles = 0;
};

// Cuts the surface open along a simple cycle.
CutReport cut_along(const Triangulation& t, const Cycle& c);

}  // namespace ktori
