#include "ktori/generators.hpp"

namespace ktori {

Triangulation moebius_torus() {
  std::vector<Face> faces;
  auto v = [](int i) { return i % 7 + 1; };
  for (int i = 0; i < 7; ++i) {
    faces.push_back(make_face(v(i), v(i + 1), v(i + 3)));
    faces.push_back(make_face(v(i), v(i + 2), v(i + 3)));
  }
  return Triangulation(std::move(faces));
}

std::vector<Vertex> minimal_torus_hamiltonian(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " < 3");
  std::vector<Vertex> h;
  for (int v = 1; v <= 3 * k - 2; v += 3) h.push_back(v);
  for (int v = 3; v <= 3 * k - 3; v += 3) h.push_back(v);
  for (int v = 2; v <= 3 * k - 4; v += 3) h.push_back(v);
  return h;
}

std::vector<Vertex> minimal_torus_rotation(int k) {
  auto h = minimal_torus_hamiltonian(k);
  std::vector<Vertex> perm(h.size() + 1, 0);
  for (std::size_t i = 0; i < h.size(); ++i) perm[h[i]] = h[(i + 1) % h.size()];
  return perm;
}

Triangulation minimal_torus_3k(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " < 3");
  // Paths across the cut-open cylinder, already glued back (3' = 3, 1' = 1, 2' = 2).
  std::vector<Vertex> p1, p2, p3;
  for (int j = 0; j < k - 1; ++j) p1.push_back(1 + 3 * j);
  p1.push_back(3 * k - 2);  // the extra subdivision vertex on 1 -> 3'
  p1.push_back(3);
  for (int j = 0; j < k - 1; ++j) p2.push_back(2 + 3 * j);
  p2.push_back(1);
  for (int j = 0; j < k - 1; ++j) p3.push_back(3 + 3 * j);
  p3.push_back(2);

  std::vector<Face> faces;
  // Upper strip: path 1 (k+1 vertices) over path 2 (k vertices).
  for (int i = 0; i < k; ++i) faces.push_back(make_face(p1[i], p1[i + 1], p2[i]));
  for (int i = 0; i + 1 < k; ++i) faces.push_back(make_face(p2[i], p2[i + 1], p1[i + 1]));
  // Middle strip: path 2 over path 3 (k vertices each).
  for (int i = 0; i + 1 < k; ++i) faces.push_back(make_face(p2[i], p2[i + 1], p3[i]));
  for (int i = 0; i + 1 < k; ++i) faces.push_back(make_face(p3[i], p3[i + 1], p2[i + 1]));
  // Lower strip: path 3 over the second copy of path 1.
  for (int i = 0; i < k; ++i) faces.push_back(make_face(p1[i], p1[i + 1], p3[i]));
  for (int i = 0; i + 1 < k; ++i) faces.push_back(make_face(p3[i], p3[i + 1], p1[i + 1]));
  return Triangulation(std::move(faces));
}

std::vector<Vertex> tube_ring(int i) { return {3 * i + 1, 3 * i + 2, 3 * i + 3}; }

Triangulation tube_complex(int k, const std::vector<PrismDiagonal>& diagonals) {
  if (k < 3) throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " < 3");
  const int nd = static_cast<int>(diagonals.size());
  if (nd != 0 && nd != k && nd != 3 * k)
    throw Error(ErrorCode::InvalidArgument, "need one diagonal choice per prism or per side quad");
  std::vector<Face> faces;
  for (int i = 0; i < k; ++i) {
    auto a = tube_ring(i);
    auto b = tube_ring((i + 1) % k);
    for (int j = 0; j < 3; ++j) {
      int jn = (j + 1) % 3;
      const bool forward = nd == 0 || diagonals[nd == k ? i : 3 * i + j] == PrismDiagonal::Forward;
      if (forward) {
        faces.push_back(make_face(a[j], a[jn], b[jn]));
        faces.push_back(make_face(a[j], b[jn], b[j]));
      } else {
        faces.push_back(make_face(a[j], a[jn], b[j]));
        faces.push_back(make_face(a[jn], b[jn], b[j]));
      }
    }
  }
  return Triangulation(std::move(faces));
}

}  // namespace ktori
