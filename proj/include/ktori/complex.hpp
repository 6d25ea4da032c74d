#pragma once

// Combinatorial closed triangulated surfaces with 1-based vertex labels.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ktori/error.hpp"

namespace ktori {

using Vertex = int;
using Face = std::array<Vertex, 3>;  // kept sorted ascending
using Edge = std::pair<Vertex, Vertex>;  // first < second

Face make_face(Vertex a, Vertex b, Vertex c);
Edge make_edge(Vertex a, Vertex b);

struct SurfaceReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  bool orientable = false;
  bool connected = false;
  // Orientable genus (2 - euler) / 2, or the non-orientable genus 2 - euler
  // when `orientable` is false.
  int genus = 0;
};

// Closed vertex cycle; consecutive entries (and last/first) are edges.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const Cycle&) const = default;
};

// Checks the closed-pseudomanifold conditions and computes the report.
// Throws Error{DuplicateFace | NonManifoldEdge | BadVertexLink}.
SurfaceReport validate_surface(std::span<const Face> faces);

// An immutable, validated closed surface triangulation. Vertices are 1..n.
class Triangulation {
 public:
  // Validates; labels must be exactly 1..n (use compact_labels first otherwise).
  explicit Triangulation(std::vector<Face> faces);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const SurfaceReport& report() const { return report_; }

  int degree(Vertex v) const { return static_cast<int>(links_[v].size()); }
  // Cyclically ordered neighbours of v (the vertex link).
  const std::vector<Vertex>& link(Vertex v) const { return links_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  // Index into edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;
  // The (one or two) faces containing edge a-b, as indices into faces().
  std::array<int, 2> edge_faces(Vertex a, Vertex b) const;
  int face_index(const Face& f) const;

  // A coherent orientation: oriented()[i] is faces()[i] as an ordered triple.
  // Only meaningful when report().orientable.
  const std::vector<Face>& oriented() const { return oriented_; }

  bool is_torus() const {
    return report_.euler == 0 && report_.orientable && report_.connected;
  }

 private:
  int n_ = 0;
  std::vector<Face> faces_;
  std::vector<Face> oriented_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> links_;      // index by vertex, [0] unused
  std::vector<std::vector<int>> edge_faces_;    // per edge index
  SurfaceReport report_;
};

// Throws NotGenusOne unless `t` is a connected orientable surface of euler 0.
void require_torus(const Triangulation& t);

// Ordered neighbours of v; Error{BadVertexLink} when the link is not one cycle.
Cycle vertex_link(const Triangulation& t, Vertex v);

struct CompactedFaces {
  std::vector<Face> faces;
  // original_label[new_label] for new labels 1..n; index 0 unused.
  std::vector<Vertex> original_label;
};

// Relabels an arbitrary positive label set densely to 1..n in increasing order.
CompactedFaces compact_labels(std::span<const Face> faces);

// Applies a vertex map (index by old label) and re-sorts.
std::vector<Face> relabel(std::span<const Face> faces, std::span<const Vertex> map);

std::string to_string(const Face& f);
std::string to_string(const Edge& e);
std::string to_string(const Cycle& c);

}  // namespace ktori
