#pragma once

// Breadth-first distance layers V_i(v) around a vertex v on a shortest
// non-separating cycle M, split into the part on the right of M (including M
// itself) and the part on the left, as used in the vertex lower bound.
//
// Sides are resolved in the cyclic cover obtained by cutting along M: a
// vertex is "left" when all of its nearest lifts lie in the strip adjacent to
// the left side of M.

#include <optional>
#include <string>
#include <vector>

#include "ktori/complex.hpp"

namespace ktori {

struct LayerCount {
  int index = 0;
  int size = 0;
  long long required = 0;
  bool checked = true;  // false outside the range where M splits V_i
};

struct DistanceLayerReport {
  int m = 0;
  int k = 0;
  std::vector<int> level_sizes;  // |V_i| for i = 0..eccentricity
  std::vector<int> right_sizes;
  std::vector<int> left_sizes;
  std::vector<LayerCount> a, b, d, e;  // A_i, B_i, D_i, E_i
  std::optional<LayerCount> c;         // C_{k/2}, when k is even
  int ambiguous = 0;                   // vertices with nearest lifts on both sides
  std::vector<std::string> violated;

  bool ok() const { return violated.empty(); }
};

// Throws SeparatingMark, MarkNotShortest (l_M > m) or InvalidArgument (v not on M).
DistanceLayerReport distance_layers(const Triangulation& t, const Cycle& mark, Vertex v);

}  // namespace ktori
