#pragma once

// First homology of a triangulated torus via a tree-cotree decomposition.
//
// Every oriented edge carries a Z^2 value such that face boundaries sum to
// zero and spanning-tree edges are zero. Summing along a closed walk gives
// its homology class in the basis dual to the two leftover edges; a simple
// cycle separates the torus exactly when its class is (0, 0).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ktori/complex.hpp"

namespace ktori {

struct HomologySignature {
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool is_zero() const { return p == 0 && q == 0; }
  HomologySignature operator-() const { return {-p, -q}; }
  HomologySignature& operator+=(const HomologySignature& o) {
    p += o.p;
    q += o.q;
    return *this;
  }
  friend HomologySignature operator+(HomologySignature a, const HomologySignature& b) { return a += b; }
  friend HomologySignature operator-(HomologySignature a, const HomologySignature& b) { return a += -b; }
  auto operator<=>(const HomologySignature&) const = default;
};

// Same unoriented class: a == b or a == -b.
inline bool same_class(const HomologySignature& a, const HomologySignature& b) { return a == b || a == -b; }

// Algebraic intersection number up to a global sign fixed by the basis.
inline std::int64_t intersection(const HomologySignature& a, const HomologySignature& b) {
  return a.p * b.q - a.q * b.p;
}

std::string to_string(const HomologySignature& s);

class HomologyBasis {
 public:
  // Throws NotGenusOne unless t is a torus.
  explicit HomologyBasis(const Triangulation& t);

  // Value on the oriented edge a -> b.
  HomologySignature edge(Vertex a, Vertex b) const;
  const std::vector<Edge>& generators() const { return leftover_; }
  bool is_tree_edge(Vertex a, Vertex b) const;
  // max |p| and max |q| over all edges; bounds the class of a walk by length.
  std::int64_t max_abs_p() const { return max_p_; }
  std::int64_t max_abs_q() const { return max_q_; }

 private:
  const Triangulation* t_;
  std::vector<HomologySignature> value_;  // per edge index, oriented low -> high
  std::vector<char> tree_;
  std::vector<Edge> leftover_;
  std::int64_t max_p_ = 0, max_q_ = 0;
};

// Class of a closed walk (no simplicity requirement); NotACycle if a step is
// not an edge.
HomologySignature walk_signature(const Triangulation& t, const HomologyBasis& basis,
                                 std::span<const Vertex> walk);

// Class of a simple cycle; NotACycle unless C is simple, has length >= 3 and
// consecutive vertices are adjacent.
HomologySignature cycle_signature(const Triangulation& t, const HomologyBasis& basis, const Cycle& c);

bool is_separating(const Triangulation& t, const HomologyBasis& basis, const Cycle& c);

// Throws NotACycle unless c is a simple closed edge path of length >= 3.
void check_cycle(const Triangulation& t, const Cycle& c);

}  // namespace ktori
