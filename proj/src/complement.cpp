#include "ktori/complement.hpp"

#include <algorithm>

#include "ktori/embedding.hpp"
#include "ktori/predicates.hpp"
#include "ktori/tube.hpp"

namespace ktori {

namespace {

// Third vertices c for which the plane a-b-c supports the point set with
// every other point strictly on one side.
std::vector<Vertex> supporting_thirds(const std::vector<Point3>& pts, int a, int b) {
  std::vector<Vertex> out;
  const int n = static_cast<int>(pts.size());
  for (int c = 0; c < n; ++c) {
    if (c == a || c == b) continue;
    int side = 0;
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) {
      if (p == a || p == b || p == c) continue;
      int o = orient3d(pts[a], pts[b], pts[c], pts[p]);
      if (o == 0 || (side && o != side)) ok = false;
      side = o;
    }
    if (ok) out.push_back(c);
  }
  return out;
}

// Outward normal of plane a-b-c with respect to the points.
Point3 outward(const std::vector<Point3>& pts, int a, int b, int c) {
  Point3 n = cross(pts[b] - pts[a], pts[c] - pts[a]);
  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (p == a || p == b || p == c) continue;
    if (sign(dot(n, pts[p] - pts[a])) > 0) return -n;
    return n;
  }
  return n;
}

// Rescales v to have largest absolute coordinate 1.
Point3 normalized_max(const Point3& v) {
  Q m = std::max({Q(abs(v.x)), Q(abs(v.y)), Q(abs(v.z))});
  return Q(1 / m) * v;
}

std::vector<std::array<int, 3>> strict_hull_facets(const std::vector<Point3>& pts) {
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(pts.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int side = 0;
        bool ok = true;
        for (int p = 0; p < n && ok; ++p) {
          if (p == a || p == b || p == c) continue;
          int o = orient3d(pts[a], pts[b], pts[c], pts[p]);
          if (o == 0 || (side && o != side)) ok = false;
          side = o;
        }
        if (ok) out.push_back({a, b, c});
      }
  return out;
}

}  // namespace

bool is_hull_edge(const Mesh& mesh, Vertex a, Vertex b) {
  return !supporting_thirds(mesh.coords, a - 1, b - 1).empty();
}

HullEdgeWitness convex_ring_edge(const Mesh& tube) {
  const int k = tube.provenance.rings;
  if (k < 3) throw Error(ErrorCode::MissingProvenance, "mesh has no tube rings");
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  const auto& knot = tube.provenance.source_knot;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return knot[b] < knot[a]; });
  for (int i : order)
    for (int j = 0; j < 3; ++j) {
      int a = 3 * i + j, b = 3 * i + (j + 1) % 3;
      auto s = supporting_thirds(tube.coords, a, b);
      if (s.size() >= 2) return {std::min(a, b) + 1, std::max(a, b) + 1, s[0] + 1};
    }
  throw Error(ErrorCode::EnclosureFailure, "no ring edge lies on the convex hull of the tube");
}

Mesh complement_construction(const StickKnot& knot) { return complement_construction(knot, choose_epsilon(knot)); }

Mesh complement_construction(const StickKnot& knot, const Q& eps) {
  Mesh tube = tube_construction(knot, eps);
  const int k = knot.k();
  const HullEdgeWitness edge = convex_ring_edge(tube);
  const int i1 = edge.v1 - 1, i2 = edge.v2 - 1;
  auto thirds = supporting_thirds(tube.coords, i1, i2);
  Point3 n = outward(tube.coords, i1, i2, thirds[0]) + outward(tube.coords, i1, i2, thirds[1]);
  n = normalized_max(n);

  const Point3 &p1 = tube.coords[i1], &p2 = tube.coords[i2];
  const Point3 mid = Q(1, 2) * (p1 + p2);
  const Vertex y_label = 3 * k + 1;

  // Bounding box extent for the far triangle.
  Q extent = 0;
  for (const auto& p : tube.coords)
    for (const auto& q : tube.coords) extent = std::max({extent, Q(abs(p.x - q.x)), Q(abs(p.y - q.y)), Q(abs(p.z - q.z))});

  auto [fa, fb] = tube.complex.edge_faces(edge.v1, edge.v2);
  for (int face_index : {fa, fb}) {
    const Face& f = tube.complex.faces()[face_index];
    const Vertex w = f[0] != edge.v1 && f[0] != edge.v2 ? f[0] : f[1] != edge.v1 && f[1] != edge.v2 ? f[1] : f[2];
    const Point3& pw = tube.coords[w - 1];

    Q alpha(1, 4), beta = eps / 4;
    for (int attempt = 0; attempt < 30; ++attempt, alpha /= 2, beta /= 2) {
      Point3 y = mid + alpha * (pw - mid) + beta * n;
      // v1 v2 y must be in convex position: every tube vertex strictly inside.
      std::vector<Point3> pts = tube.coords;
      pts.push_back(y);
      Point3 ny = cross(p2 - p1, y - p1);
      int side = 0;
      bool convex = true;
      for (int p = 0; p < 3 * k && convex; ++p) {
        if (p == i1 || p == i2) continue;
        int o = sign(dot(ny, tube.coords[p] - p1));
        if (o == 0 || (side && o != side)) convex = false;
        side = o;
      }
      if (!convex) continue;

      std::vector<Face> faces;
      for (const Face& g : tube.complex.faces())
        if (g != f) faces.push_back(g);
      faces.push_back(make_face(edge.v2, w, y_label));
      faces.push_back(make_face(w, edge.v1, y_label));
      std::vector<Face> sub_faces = faces;
      sub_faces.push_back(make_face(edge.v1, edge.v2, y_label));
      Mesh check{pts, Triangulation(sub_faces), {}};
      if (!verify_embedding(check).embedded) continue;

      // Far triangle on the inner side of v1 v2 y, grown until the
      // octahedron strictly contains every other tube vertex.
      Point3 inward = side > 0 ? normalized_max(ny) : normalized_max(-ny);
      Point3 axis = abs(inward.x) <= abs(inward.y) && abs(inward.x) <= abs(inward.z) ? Point3{1, 0, 0}
                    : abs(inward.y) <= abs(inward.z)                               ? Point3{0, 1, 0}
                                                                                   : Point3{0, 0, 1};
      Point3 u = normalized_max(cross(inward, axis));
      Point3 v = normalized_max(cross(inward, u));
      // Depth is fixed beyond the tube; the width grows so the side faces
      // through the thin cap open up far enough to contain the tube.
      const Q depth = 2 * extent;
      Point3 c = mid + depth * inward;
      Q radius = depth;
      for (int grow = 0; grow < 60; ++grow, radius *= 2) {
        std::array<Point3, 3> z{c + (2 * radius) * u, c + radius * (2 * v - u), c - radius * (2 * v + u)};
        std::vector<Point3> octa{p1, p2, y, z[0], z[1], z[2]};
        auto facets = strict_hull_facets(octa);
        if (facets.size() != 8) continue;
        bool has_cap = std::find(facets.begin(), facets.end(), std::array<int, 3>{0, 1, 2}) != facets.end() &&
                       std::find(facets.begin(), facets.end(), std::array<int, 3>{3, 4, 5}) != facets.end();
        if (!has_cap) continue;
        bool encloses = true;
        for (const auto& fc : facets) {
          if (fc == std::array<int, 3>{0, 1, 2}) continue;
          Point3 fn = cross(octa[fc[1]] - octa[fc[0]], octa[fc[2]] - octa[fc[0]]);
          int other = 0;
          for (int p = 0; p < 6; ++p)
            if (p != fc[0] && p != fc[1] && p != fc[2]) other = p;
          int inner = sign(dot(fn, octa[other] - octa[fc[0]]));
          for (int p = 0; p < 3 * k && encloses; ++p) {
            if (p == i1 || p == i2) continue;
            if (sign(dot(fn, tube.coords[p] - octa[fc[0]])) != inner) encloses = false;
          }
          if (!encloses) break;
        }
        if (!encloses) continue;

        auto label = [&](int x) { return x == 0 ? edge.v1 : x == 1 ? edge.v2 : x == 2 ? y_label : 3 * k + x - 1; };
        std::vector<Face> all = faces;
        for (const auto& fc : facets)
          if (fc != std::array<int, 3>{0, 1, 2}) all.push_back(make_face(label(fc[0]), label(fc[1]), label(fc[2])));
        std::vector<Point3> coords = pts;
        coords.insert(coords.end(), z.begin(), z.end());
        Mesh mesh{coords, Triangulation(all), {}};
        auto cert = verify_embedding(mesh);
        if (!cert.embedded) continue;
        auto& pv = mesh.provenance;
        pv.construction = "complement";
        pv.epsilon = eps;
        pv.source_knot = knot.vertices;
        pv.rings = k;
        pv.twist_degrees = tube.provenance.twist_degrees;
        pv.notes.push_back("hull edge " + std::to_string(edge.v1) + "-" + std::to_string(edge.v2) +
                           ", subdivided face " + to_string(f) + ", y = " + std::to_string(y_label));
        pv.notes.push_back("far triangle at depth " + to_decimal(depth, 6) + ", width " + to_decimal(radius, 6));
        return mesh;
      }
    }
  }
  throw Error(ErrorCode::EnclosureFailure, "could not certify the octahedron around the tube");
}

}  // namespace ktori
