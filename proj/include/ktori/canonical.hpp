#pragma once

// Relabeling-invariant canonical forms for closed surface triangulations.
//
// A flag (root, first, second) fixes a vertex, one of its neighbours and a
// direction around the root's link. Breadth-first traversal from a flag labels
// vertices in order of discovery; each vertex's link is read starting at the
// vertex that discovered it, heading towards the discoverer's previous link
// neighbour. The resulting integer code determines the labeled triangulation,
// so the lexicographically least code over all flags rooted at maximum-degree
// vertices is a canonical form.

#include <optional>
#include <vector>

#include "ktori/complex.hpp"

namespace ktori {

struct Flag {
  Vertex root = 0;
  Vertex first = 0;   // neighbour of root, receives label 2
  Vertex second = 0;  // neighbour of root adjacent to `first` in its link
};

struct CanonicalLabeling {
  std::vector<int> code;
  // new_label[old] for old labels 1..n; index 0 unused.
  std::vector<Vertex> new_label;
  std::vector<Face> faces;  // relabeled, sorted
  int automorphism_order = 0;
};

// Code from a single flag. When `bound` is given, stops as soon as the code
// is known to be lexicographically greater and returns nullopt.
std::optional<std::vector<int>> flag_code(const Triangulation& t, const Flag& flag,
                                          const std::vector<int>* bound = nullptr,
                                          std::vector<Vertex>* new_label = nullptr);

// All flags rooted at vertices of maximum degree.
std::vector<Flag> seed_flags(const Triangulation& t);

CanonicalLabeling canonical_labeling(const Triangulation& t);

// Sorted canonical face list; equal iff the triangulations are isomorphic.
std::vector<Face> canonical_form(const Triangulation& t);

// A vertex bijection phi (index by t1's labels) with phi(t1) = t2, if any.
std::optional<std::vector<Vertex>> is_isomorphic(const Triangulation& t1, const Triangulation& t2);

// True when no seed flag yields a smaller code than `flag`.
bool is_minimal_flag(const Triangulation& t, const Flag& flag);

// Checks that `perm` (index by label, 1..n) maps every face to a face.
bool is_automorphism(const Triangulation& t, const std::vector<Vertex>& perm);

}  // namespace ktori
