#pragma once

// Independent reference implementations used only by the tests.

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ktori/complex.hpp"
#include "ktori/knots.hpp"

namespace oracle {

using ktori::Cycle;
using ktori::Triangulation;

// Every simple cycle of length 3..max_len, once per unoriented cycle, starting
// at its smallest vertex with the smaller neighbour second.
std::vector<Cycle> simple_cycles(const Triangulation& t, int max_len);

// Homology by linear algebra: chains modulo the span of face boundaries,
// reduced over Z/p. The torus has no torsion and short cycles have small
// coefficients, so "zero mod p" agrees with "zero over Z".
class ChainHomology {
 public:
  explicit ChainHomology(const Triangulation& t);

  // Normal form of the oriented cycle in C_1 / B_1.
  std::vector<std::int64_t> residue(const Cycle& c) const;
  bool separating(const Cycle& c) const;
  // Same unoriented class.
  bool same_class(const Cycle& a, const Cycle& b) const;

 private:
  const Triangulation* t_;
  std::vector<std::vector<std::int64_t>> rows_;  // echelon basis of B_1
  std::vector<int> pivot_;
};

struct BruteType {
  int m = 0;
  int s = 0;          // k_M for M of length m; equal for every such M
  bool consistent = true;
};

// m and s(T) by exhaustive enumeration of simple cycles of length <= max_len.
BruteType brute_type(const Triangulation& t, int max_len);
// m_M and k_M for a given mark.
std::array<int, 2> brute_marked_type(const Triangulation& t, const Cycle& mark, int max_len);

// Fox colouring matrix from the Gauss code (rows = crossings, columns = arcs),
// |det| of a first minor.
mpz_class fox_determinant(const ktori::KnotDiagram& d);

// Facets of the convex hull of (t, t^2, t^3, t^4), t = 1..n, by testing every
// 4-subset against all other points.
std::vector<std::array<int, 4>> hull_facets_moment(int n);

// Exact determinant of a square rational matrix.
mpq_class det(std::vector<std::vector<mpq_class>> a);

}  // namespace oracle
