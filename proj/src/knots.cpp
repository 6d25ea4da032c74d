#include "ktori/knots.hpp"

#include <algorithm>
#include <map>

namespace ktori {

namespace {

Q cross2(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
Point2 minus(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

bool on_closed_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orient2d(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

struct Basis {
  Point3 u, w, d;
};

Basis projection_basis(const Point3& d) {
  Point3 axis = abs(d.x) <= abs(d.y) && abs(d.x) <= abs(d.z) ? Point3{1, 0, 0}
                : abs(d.y) <= abs(d.z)                      ? Point3{0, 1, 0}
                                                            : Point3{0, 0, 1};
  Point3 u = cross(d, axis);
  return {u, cross(d, u), d};
}

[[noreturn]] void non_generic(const std::string& why) { throw Error(ErrorCode::NonGenericDirection, why); }

// Counterclockwise angular order of directions (exact).
bool angle_less(const Point2& a, const Point2& b) {
  auto half = [](const Point2& p) { return p.y < 0 || (p.y == 0 && p.x < 0); };
  bool ha = half(a), hb = half(b);
  if (ha != hb) return !ha;
  return cross2(a, b) > 0;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sgn = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sgn * m[n - 1][n - 1];
}

}  // namespace

const std::vector<Point3>& generic_directions() {
  static const std::vector<Point3> dirs = [] {
    const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,  37,  41,  43,  47,  53,  59,  61,  67,  71, 73,
                          79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191};
    std::vector<Point3> out;
    for (int i = 0; i < 32; ++i) {
      int a = primes[i], b = primes[i + 5] * (i % 2 ? -1 : 1), c = primes[i + 11] * (i % 3 == 2 ? -1 : 1);
      out.push_back({Q(a), Q(b), Q(c)});
    }
    out.insert(out.begin(), Point3{Q(3), Q(5), Q(7)});
    out.pop_back();
    return out;
  }();
  return dirs;
}

KnotDiagram project_link(const std::vector<std::vector<Point3>>& comps, const Point3& direction) {
  if (norm2(direction) == 0) non_generic("zero direction");
  const Basis B = projection_basis(direction);
  KnotDiagram dg;
  dg.direction = direction;

  struct Seg {
    int comp, idx;
    Point2 p, q;
    Point3 P, Qv;
  };
  std::vector<Seg> segs;
  std::vector<Point2> all_points;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    std::vector<Point2> proj;
    for (const auto& p : comps[c]) proj.push_back({dot(p, B.u), dot(p, B.w)});
    const int k = static_cast<int>(proj.size());
    for (int i = 0; i < k; ++i) {
      segs.push_back({c, i, proj[i], proj[(i + 1) % k], comps[c][i], comps[c][(i + 1) % k]});
      if (proj[i] == proj[(i + 1) % k]) non_generic("edge parallel to the projection direction");
    }
    all_points.insert(all_points.end(), proj.begin(), proj.end());
    dg.projected.push_back(std::move(proj));
  }
  for (std::size_t i = 0; i < all_points.size(); ++i)
    for (std::size_t j = i + 1; j < all_points.size(); ++j)
      if (all_points[i] == all_points[j]) non_generic("two vertices project to the same point");

  auto adjacent = [&](const Seg& a, const Seg& b) {
    if (a.comp != b.comp) return false;
    const int k = static_cast<int>(comps[a.comp].size());
    return (a.idx + 1) % k == b.idx || (b.idx + 1) % k == a.idx;
  };
  for (const Seg& s : segs)
    for (const Seg& t : segs) {
      if (&s == &t) continue;
      // vertices of t on the interior of s
      for (const Point2* v : {&t.p, &t.q})
        if (!(*v == s.p) && !(*v == s.q) && on_closed_segment(*v, s.p, s.q))
          non_generic("a vertex projects onto another strand");
      if (adjacent(s, t) && s.q == t.p && orient2d(s.p, s.q, t.q) == 0 &&
          (t.q.x - t.p.x) * (s.p.x - s.q.x) + (t.q.y - t.p.y) * (s.p.y - s.q.y) > 0)
        non_generic("adjacent edges overlap in projection");
    }

  const int ns = static_cast<int>(segs.size());
  for (int i = 0; i < ns; ++i)
    for (int j = i + 1; j < ns; ++j) {
      const Seg &s = segs[i], &t = segs[j];
      if (adjacent(s, t)) continue;
      int o1 = orient2d(t.p, t.q, s.p), o2 = orient2d(t.p, t.q, s.q);
      int o3 = orient2d(s.p, s.q, t.p), o4 = orient2d(s.p, s.q, t.q);
      if (!(o1 * o2 < 0 && o3 * o4 < 0)) continue;
      Point2 ds = minus(s.q, s.p), dt = minus(t.q, t.p);
      Q den = cross2(ds, dt);
      Q a = cross2(minus(t.p, s.p), dt) / den;
      Q b = cross2(minus(t.p, s.p), ds) / den;
      Q hs = dot(s.P + a * (s.Qv - s.P), B.d), ht = dot(t.P + b * (t.Qv - t.P), B.d);
      if (hs == ht) throw Error(ErrorCode::IntersectingCurves, "strands meet in space");
      Crossing c;
      const bool s_over = hs > ht;
      const Seg &o = s_over ? s : t, &u = s_over ? t : s;
      c.over_component = o.comp;
      c.over_segment = o.idx;
      c.under_component = u.comp;
      c.under_segment = u.idx;
      c.over_param = s_over ? a : b;
      c.under_param = s_over ? b : a;
      c.at = {s.p.x + a * ds.x, s.p.y + a * ds.y};
      c.sign = sign(cross2(minus(o.q, o.p), minus(u.q, u.p)));
      dg.crossings.push_back(c);
    }
  for (std::size_t i = 0; i < dg.crossings.size(); ++i)
    for (std::size_t j = i + 1; j < dg.crossings.size(); ++j)
      if (dg.crossings[i].at == dg.crossings[j].at) non_generic("triple point");

  // Number crossings by first encounter along the components in order.
  struct Visit {
    int comp, seg;
    Q param;
    int crossing;
    bool over;
  };
  std::vector<Visit> visits;
  for (int i = 0; i < static_cast<int>(dg.crossings.size()); ++i) {
    const auto& c = dg.crossings[i];
    visits.push_back({c.over_component, c.over_segment, c.over_param, i, true});
    visits.push_back({c.under_component, c.under_segment, c.under_param, i, false});
  }
  std::sort(visits.begin(), visits.end(), [](const Visit& a, const Visit& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.seg != b.seg) return a.seg < b.seg;
    return a.param < b.param;
  });
  std::vector<int> number(dg.crossings.size(), 0);
  int next = 0;
  for (const auto& v : visits)
    if (!number[v.crossing]) number[v.crossing] = ++next;
  std::vector<Crossing> renumbered(dg.crossings.size());
  for (std::size_t i = 0; i < dg.crossings.size(); ++i) renumbered[number[i] - 1] = dg.crossings[i];
  dg.crossings = std::move(renumbered);
  if (comps.size() == 1)
    for (const auto& v : visits) dg.gauss_code.push_back(v.over ? number[v.crossing] : -number[v.crossing]);
  return dg;
}

KnotDiagram project_diagram(const StickKnot& knot, const Point3& direction) {
  return project_link({knot.vertices}, direction);
}

KnotDiagram project_diagram(const StickKnot& knot) {
  std::string last;
  for (const auto& d : generic_directions()) {
    try {
      return project_diagram(knot, d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonGenericDirection) throw;
      last = e.what();
    }
  }
  throw Error(ErrorCode::NonGenericDirection, "no generic direction among 32 tried; last: " + last);
}

mpz_class knot_determinant(const KnotDiagram& dg) {
  if (dg.projected.size() != 1) throw Error(ErrorCode::InvalidArgument, "determinant needs a single component");
  const auto& pts = dg.projected[0];
  const int k = static_cast<int>(pts.size());
  const int nc = static_cast<int>(dg.crossings.size());
  if (nc == 0) return 1;

  // Planar graph: nodes 0..k-1 are knot vertices, k+c is crossing c.
  std::vector<Point2> pos(pts);
  for (const auto& c : dg.crossings) pos.push_back(c.at);
  struct HalfEdge {
    int from, to;
  };
  std::vector<HalfEdge> he;
  // Per crossing, half-edges leaving along over+/over-/under+/under-.
  std::vector<std::array<int, 4>> at_crossing(nc, {-1, -1, -1, -1});
  for (int s = 0; s < k; ++s) {
    std::vector<std::pair<Q, int>> along;  // (param, crossing)
    for (int c = 0; c < nc; ++c) {
      if (dg.crossings[c].over_segment == s) along.push_back({dg.crossings[c].over_param, c});
      if (dg.crossings[c].under_segment == s) along.push_back({dg.crossings[c].under_param, c});
    }
    std::sort(along.begin(), along.end());
    std::vector<int> chain{s};
    for (const auto& [p, c] : along) chain.push_back(k + c);
    chain.push_back((s + 1) % k);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      int a = chain[i], b = chain[i + 1];
      int id = static_cast<int>(he.size());
      he.push_back({a, b});
      he.push_back({b, a});
      if (a >= k) {  // forward half-edge leaving crossing a
        bool over = dg.crossings[a - k].over_segment == s;
        at_crossing[a - k][over ? 0 : 2] = id;
      }
      if (b >= k) {  // backward half-edge leaving crossing b
        bool over = dg.crossings[b - k].over_segment == s;
        at_crossing[b - k][over ? 1 : 3] = id + 1;
      }
    }
  }
  const int nn = static_cast<int>(pos.size());
  std::vector<std::vector<int>> out(nn);
  for (int h = 0; h < static_cast<int>(he.size()); ++h) out[he[h].from].push_back(h);
  std::vector<int> slot(he.size());
  for (int v = 0; v < nn; ++v) {
    auto& o = out[v];
    std::sort(o.begin(), o.end(), [&](int a, int b) {
      return angle_less(minus(pos[he[a].to], pos[v]), minus(pos[he[b].to], pos[v]));
    });
    for (int i = 0; i < static_cast<int>(o.size()); ++i) slot[o[i]] = i;
  }
  // Face on the left of each half-edge.
  std::vector<int> face(he.size(), -1);
  int nfaces = 0;
  for (int h0 = 0; h0 < static_cast<int>(he.size()); ++h0) {
    if (face[h0] >= 0) continue;
    for (int h = h0; face[h] < 0;) {
      face[h] = nfaces;
      int twin = h ^ 1;
      const auto& o = out[he[h].to];
      h = o[(slot[twin] + o.size() - 1) % o.size()];
    }
    ++nfaces;
  }
  std::vector<int> color(nfaces, -1);
  color[face[0]] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int h = 0; h < static_cast<int>(he.size()); ++h) {
      int f = face[h], g = face[h ^ 1];
      if (color[f] >= 0 && color[g] < 0) {
        color[g] = 1 - color[f];
        changed = true;
      } else if (color[f] >= 0 && color[g] == color[f]) {
        throw Error(ErrorCode::InvalidArgument, "diagram regions are not 2-colourable");
      }
    }
  }
  std::map<int, int> white;  // face -> row
  for (int f = 0; f < nfaces; ++f)
    if (color[f] == 0) white.emplace(f, static_cast<int>(white.size()));
  const int nw = static_cast<int>(white.size());
  std::vector<std::vector<mpz_class>> g(nw, std::vector<mpz_class>(nw, 0));
  for (int c = 0; c < nc; ++c) {
    int a = face[at_crossing[c][0]], b = face[at_crossing[c][1]];
    int eta = 1;
    if (color[a] != 0) {
      a = face[at_crossing[c][2]];
      b = face[at_crossing[c][3]];
      eta = -1;
    }
    if (a == b) continue;
    int i = white[a], j = white[b];
    g[i][j] -= eta;
    g[j][i] -= eta;
    g[i][i] += eta;
    g[j][j] += eta;
  }
  g.pop_back();
  for (auto& row : g) row.pop_back();
  return abs(bareiss_det(std::move(g)));
}

mpz_class knot_determinant(const StickKnot& knot) { return knot_determinant(project_diagram(knot)); }

int linking_number(const std::vector<Point3>& c, const std::vector<Point3>& k) {
  for (const auto& d : generic_directions()) {
    KnotDiagram dg;
    try {
      dg = project_link({c, k}, d);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NonGenericDirection) continue;
      throw;
    }
    int total = 0;
    for (const auto& x : dg.crossings)
      if (x.over_component != x.under_component) total += x.sign;
    return total / 2;
  }
  throw Error(ErrorCode::NonGenericDirection, "no generic direction for the pair of curves");
}

std::vector<Point3> cycle_polygon(const Mesh& mesh, const Cycle& c) {
  std::vector<Point3> out;
  for (Vertex v : c.vertices) out.push_back(mesh.at(v));
  return out;
}

StickKnot core_curve(const Mesh& mesh) {
  if (mesh.provenance.rings < 3) throw Error(ErrorCode::MissingProvenance, "mesh has no tube rings");
  StickKnot k;
  for (int i = 0; i < mesh.provenance.rings; ++i)
    k.vertices.push_back(circumcenter(mesh.coords[3 * i], mesh.coords[3 * i + 1], mesh.coords[3 * i + 2]));
  return k;
}

CycleClassification classify_cycle_in_tube(const Mesh& mesh, const Cycle& c) {
  if (!mesh.provenance.meridian || mesh.provenance.rings < 3)
    throw Error(ErrorCode::MissingProvenance, "mesh has no recorded meridian");
  HomologyBasis basis(mesh.complex);
  CycleClassification r;
  r.cycle_class = cycle_signature(mesh.complex, basis, c);
  if (r.cycle_class.is_zero()) throw Error(ErrorCode::SeparatingCycle, to_string(c) + " bounds a disc");
  r.meridian_class = cycle_signature(mesh.complex, basis, *mesh.provenance.meridian);
  r.meridian = same_class(r.cycle_class, r.meridian_class);
  r.longitude_coefficient = intersection(r.meridian_class, r.cycle_class);
  r.linking_with_core = linking_number(cycle_polygon(mesh, c), core_curve(mesh).vertices);
  return r;
}

}  // namespace ktori
