#include "ktori/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace ktori {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::BadVertexLink: return "BadVertexLink";
    case ErrorCode::DuplicateFace: return "DuplicateFace";
    case ErrorCode::NotGenusOne: return "NotGenusOne";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::SeparatingMark: return "SeparatingMark";
    case ErrorCode::MarkNotShortest: return "MarkNotShortest";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateKnot: return "DegenerateKnot";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::EnclosureFailure: return "EnclosureFailure";
    case ErrorCode::FaceNotInPolytope: return "FaceNotInPolytope";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NonGenericDirection: return "NonGenericDirection";
    case ErrorCode::IntersectingCurves: return "IntersectingCurves";
    case ErrorCode::MissingProvenance: return "MissingProvenance";
    case ErrorCode::SeparatingCycle: return "SeparatingCycle";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Face make_face(Vertex a, Vertex b, Vertex c) {
  Face f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string to_string(const Face& f) {
  std::ostringstream os;
  os << "{" << f[0] << "," << f[1] << "," << f[2] << "}";
  return os.str();
}

std::string to_string(const Edge& e) {
  std::ostringstream os;
  os << "{" << e.first << "," << e.second << "}";
  return os.str();
}

std::string to_string(const Cycle& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) os << (i ? "," : "") << c.vertices[i];
  os << ")";
  return os.str();
}

namespace {

struct Incidence {
  std::vector<Face> faces;                       // sorted, unique
  std::map<Edge, std::vector<int>> edge_faces;   // edge -> face indices
  std::vector<Vertex> vertices;                  // sorted distinct labels
};

Incidence build_incidence(std::span<const Face> input) {
  if (input.empty()) throw Error(ErrorCode::InvalidArgument, "empty face list");
  Incidence inc;
  inc.faces.reserve(input.size());
  for (const Face& raw : input) {
    Face f = make_face(raw[0], raw[1], raw[2]);
    if (f[0] <= 0) throw Error(ErrorCode::InvalidArgument, "non-positive label in face " + to_string(raw));
    if (f[0] == f[1] || f[1] == f[2])
      throw Error(ErrorCode::InvalidArgument, "degenerate face " + to_string(raw));
    inc.faces.push_back(f);
  }
  std::sort(inc.faces.begin(), inc.faces.end());
  auto dup = std::adjacent_find(inc.faces.begin(), inc.faces.end());
  if (dup != inc.faces.end()) throw Error(ErrorCode::DuplicateFace, to_string(*dup));

  for (int i = 0; i < static_cast<int>(inc.faces.size()); ++i) {
    const Face& f = inc.faces[i];
    inc.edge_faces[make_edge(f[0], f[1])].push_back(i);
    inc.edge_faces[make_edge(f[1], f[2])].push_back(i);
    inc.edge_faces[make_edge(f[0], f[2])].push_back(i);
    inc.vertices.insert(inc.vertices.end(), f.begin(), f.end());
  }
  std::sort(inc.vertices.begin(), inc.vertices.end());
  inc.vertices.erase(std::unique(inc.vertices.begin(), inc.vertices.end()), inc.vertices.end());

  for (const auto& [e, fs] : inc.edge_faces) {
    if (fs.size() != 2)
      throw Error(ErrorCode::NonManifoldEdge,
                  "edge " + to_string(e) + " lies in " + std::to_string(fs.size()) + " face(s)");
  }
  return inc;
}

Vertex third_vertex(const Face& f, Vertex a, Vertex b) {
  for (Vertex x : f)
    if (x != a && x != b) return x;
  return 0;
}

// Link of v as a cyclic sequence, or empty if it is not a single cycle.
std::vector<Vertex> link_cycle(const Incidence& inc, const std::vector<int>& star, Vertex v) {
  // Every link vertex has link-degree 2 because every edge lies in two faces.
  std::map<Vertex, std::vector<Vertex>> adj;
  for (int fi : star) {
    const Face& f = inc.faces[fi];
    Vertex a = 0, b = 0;
    for (Vertex x : f) {
      if (x == v) continue;
      (a == 0 ? a : b) = x;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Vertex> cyc;
  Vertex start = adj.begin()->first;
  Vertex prev = 0, cur = start;
  do {
    cyc.push_back(cur);
    const auto& nb = adj[cur];
    Vertex next = (nb[0] != prev) ? nb[0] : nb[1];
    if (prev == 0) next = std::min(nb[0], nb[1]);
    prev = cur;
    cur = next;
  } while (cur != start && cyc.size() <= adj.size());
  if (cyc.size() != adj.size()) return {};
  return cyc;
}

struct Analysis {
  SurfaceReport report;
  std::vector<std::vector<Vertex>> links;  // indexed by position in inc.vertices
  std::vector<Face> oriented;
};

Analysis analyze(const Incidence& inc) {
  Analysis out;
  std::map<Vertex, std::vector<int>> stars;
  for (int i = 0; i < static_cast<int>(inc.faces.size()); ++i)
    for (Vertex x : inc.faces[i]) stars[x].push_back(i);

  for (Vertex v : inc.vertices) {
    auto cyc = link_cycle(inc, stars[v], v);
    if (cyc.empty()) throw Error(ErrorCode::BadVertexLink, "link of vertex " + std::to_string(v) + " is not a single cycle");
    out.links.push_back(std::move(cyc));
  }

  // Flood-fill a coherent orientation; also detects connectivity.
  const int nf = static_cast<int>(inc.faces.size());
  out.oriented.assign(nf, Face{0, 0, 0});
  std::vector<char> seen(nf, 0);
  bool orientable = true;
  int components = 0;
  for (int root = 0; root < nf; ++root) {
    if (seen[root]) continue;
    ++components;
    seen[root] = 1;
    out.oriented[root] = inc.faces[root];
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int fi = q.front();
      q.pop();
      const Face& o = out.oriented[fi];
      for (int k = 0; k < 3; ++k) {
        Vertex a = o[k], b = o[(k + 1) % 3];
        const auto& fs = inc.edge_faces.at(make_edge(a, b));
        int gi = fs[0] == fi ? fs[1] : fs[0];
        // Neighbour must traverse the shared edge as b -> a.
        Vertex c = third_vertex(inc.faces[gi], a, b);
        Face want{b, a, c};
        if (!seen[gi]) {
          seen[gi] = 1;
          out.oriented[gi] = want;
          q.push(gi);
        } else {
          const Face& g = out.oriented[gi];
          bool consistent = false;
          for (int r = 0; r < 3; ++r)
            if (g[r] == b && g[(r + 1) % 3] == a) consistent = true;
          if (!consistent) orientable = false;
        }
      }
    }
  }

  SurfaceReport& r = out.report;
  r.vertices = static_cast<int>(inc.vertices.size());
  r.edges = static_cast<int>(inc.edge_faces.size());
  r.faces = nf;
  r.euler = r.vertices - r.edges + r.faces;
  r.orientable = orientable;
  r.connected = components == 1;
  r.genus = orientable ? (2 - r.euler) / 2 : 2 - r.euler;
  return out;
}

}  // namespace

SurfaceReport validate_surface(std::span<const Face> faces) {
  return analyze(build_incidence(faces)).report;
}

Triangulation::Triangulation(std::vector<Face> faces) {
  Incidence inc = build_incidence(faces);
  n_ = inc.vertices.back();
  if (static_cast<int>(inc.vertices.size()) != n_)
    throw Error(ErrorCode::InvalidArgument, "vertex labels are not exactly 1..n; compact them first");
  Analysis an = analyze(inc);
  report_ = an.report;
  faces_ = std::move(inc.faces);
  oriented_ = std::move(an.oriented);
  links_.assign(n_ + 1, {});
  for (int i = 0; i < n_; ++i) links_[i + 1] = std::move(an.links[i]);
  edges_.reserve(inc.edge_faces.size());
  edge_faces_.reserve(inc.edge_faces.size());
  for (auto& [e, fs] : inc.edge_faces) {
    edges_.push_back(e);
    edge_faces_.push_back(fs);
  }
}

int Triangulation::edge_index(Vertex a, Vertex b) const {
  Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Triangulation::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) return false;
  return edge_index(a, b) >= 0;
}

std::array<int, 2> Triangulation::edge_faces(Vertex a, Vertex b) const {
  int ei = edge_index(a, b);
  if (ei < 0) throw Error(ErrorCode::InvalidArgument, "not an edge: " + to_string(make_edge(a, b)));
  return {edge_faces_[ei][0], edge_faces_[ei][1]};
}

int Triangulation::face_index(const Face& f) const {
  Face s = make_face(f[0], f[1], f[2]);
  auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
  if (it == faces_.end() || *it != s) return -1;
  return static_cast<int>(it - faces_.begin());
}

void require_torus(const Triangulation& t) {
  if (!t.is_torus()) {
    const auto& r = t.report();
    throw Error(ErrorCode::NotGenusOne, "euler " + std::to_string(r.euler) +
                                            (r.orientable ? ", orientable" : ", non-orientable") +
                                            (r.connected ? "" : ", disconnected"));
  }
}

Cycle vertex_link(const Triangulation& t, Vertex v) {
  if (v < 1 || v > t.num_vertices())
    throw Error(ErrorCode::InvalidArgument, "no vertex " + std::to_string(v));
  return Cycle{t.link(v)};
}

CompactedFaces compact_labels(std::span<const Face> faces) {
  std::vector<Vertex> labels;
  for (const Face& f : faces) labels.insert(labels.end(), f.begin(), f.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  CompactedFaces out;
  out.original_label.push_back(0);
  out.original_label.insert(out.original_label.end(), labels.begin(), labels.end());
  auto to_new = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin()) + 1;
  };
  for (const Face& f : faces) out.faces.push_back(make_face(to_new(f[0]), to_new(f[1]), to_new(f[2])));
  return out;
}

std::vector<Face> relabel(std::span<const Face> faces, std::span<const Vertex> map) {
  std::vector<Face> out;
  out.reserve(faces.size());
  for (const Face& f : faces) out.push_back(make_face(map[f[0]], map[f[1]], map[f[2]]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ktori
