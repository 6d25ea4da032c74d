#include "ktori/embedding.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <thread>

#include "ktori/predicates.hpp"

namespace ktori {

namespace {

struct Box {
  std::array<double, 3> lo, hi;
};

bool boxes_apart(const Box& a, const Box& b) {
  for (int i = 0; i < 3; ++i) {
    double slack = 1e-9 * (1 + std::max({std::abs(a.lo[i]), std::abs(a.hi[i]), std::abs(b.lo[i]), std::abs(b.hi[i])}));
    if (a.hi[i] + slack < b.lo[i] || b.hi[i] + slack < a.lo[i]) return true;
  }
  return false;
}

// Reason string when faces f and g meet improperly, empty otherwise.
std::string check_pair(const Mesh& mesh, const Face& f, const Face& g) {
  std::vector<Vertex> shared;
  for (Vertex a : f)
    if (std::find(g.begin(), g.end(), a) != g.end()) shared.push_back(a);
  auto P = [&](Vertex v) -> const Point3& { return mesh.at(v); };
  auto others = [&](const Face& h) {
    std::vector<Vertex> o;
    for (Vertex v : h)
      if (std::find(shared.begin(), shared.end(), v) == shared.end()) o.push_back(v);
    return o;
  };
  if (shared.empty()) {
    if (triangles_intersect(P(f[0]), P(f[1]), P(f[2]), P(g[0]), P(g[1]), P(g[2]))) return "disjoint faces intersect";
    return {};
  }
  if (shared.size() == 1) {
    const Vertex s = shared[0];
    auto fo = others(f), go = others(g);
    if (segment_triangle_intersect(P(fo[0]), P(fo[1]), P(g[0]), P(g[1]), P(g[2])) ||
        segment_triangle_intersect(P(go[0]), P(go[1]), P(f[0]), P(f[1]), P(f[2])))
      return "faces sharing vertex " + std::to_string(s) + " meet elsewhere";
    for (Vertex x : fo)
      if (ray_in_wedge(P(s), P(x), P(go[0]), P(go[1])))
        return "edge " + std::to_string(s) + "-" + std::to_string(x) + " runs inside a neighbouring face";
    for (Vertex x : go)
      if (ray_in_wedge(P(s), P(x), P(fo[0]), P(fo[1])))
        return "edge " + std::to_string(s) + "-" + std::to_string(x) + " runs inside a neighbouring face";
    return {};
  }
  // Common edge: only a coplanar fold onto the same side overlaps.
  const Vertex a = others(f)[0], b = others(g)[0];
  const Point3 &s0 = P(shared[0]), &s1 = P(shared[1]);
  if (orient3d(s0, s1, P(a), P(b)) != 0) return {};
  Point3 n = cross(s1 - s0, P(a) - s0);
  if (sign(dot(cross(s1 - s0, P(b) - s0), n)) >= 0)
    return "faces folded onto each other along edge " + std::to_string(shared[0]) + "-" + std::to_string(shared[1]);
  return {};
}

}  // namespace

EmbeddingCertificate verify_embedding(const Mesh& mesh, int threads) {
  const auto& faces = mesh.complex.faces();
  const int nf = static_cast<int>(faces.size());
  EmbeddingCertificate cert;

  std::set<Point3> distinct(mesh.coords.begin(), mesh.coords.end());
  if (distinct.size() != mesh.coords.size()) {
    cert.embedded = false;
    cert.violation = EmbeddingViolation{-1, -1, "two vertices share coordinates"};
    return cert;
  }
  std::vector<Box> boxes(nf);
  for (int i = 0; i < nf; ++i) {
    if (collinear(mesh.at(faces[i][0]), mesh.at(faces[i][1]), mesh.at(faces[i][2]))) {
      cert.embedded = false;
      cert.violation = EmbeddingViolation{i, -1, "degenerate face " + to_string(faces[i])};
      return cert;
    }
    Box b{{1e300, 1e300, 1e300}, {-1e300, -1e300, -1e300}};
    for (Vertex v : faces[i]) {
      auto d = to_doubles(mesh.at(v));
      for (int k = 0; k < 3; ++k) {
        b.lo[k] = std::min(b.lo[k], d[k]);
        b.hi[k] = std::max(b.hi[k], d[k]);
      }
    }
    boxes[i] = b;
  }

  if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, nf));
  // Row i handled by worker i % threads; the smallest violating pair wins.
  std::vector<std::optional<EmbeddingViolation>> first(threads);
  std::vector<long long> tested(threads, 0);
  std::atomic<long long> best_row{nf};
  auto work = [&](int w) {
    for (int i = w; i < nf; i += threads) {
      if (i > best_row.load()) break;
      for (int j = i + 1; j < nf; ++j) {
        if (boxes_apart(boxes[i], boxes[j])) continue;
        ++tested[w];
        std::string reason = check_pair(mesh, faces[i], faces[j]);
        if (reason.empty()) continue;
        first[w] = EmbeddingViolation{i, j, reason + " (" + to_string(faces[i]) + " vs " + to_string(faces[j]) + ")"};
        long long cur = best_row.load();
        while (i < cur && !best_row.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (int w = 0; w < threads; ++w) {
    cert.pairs_tested += tested[w];
    if (first[w] && (!cert.violation || first[w]->face_a < cert.violation->face_a)) cert.violation = first[w];
  }
  cert.embedded = !cert.violation.has_value();
  return cert;
}

}  // namespace ktori
