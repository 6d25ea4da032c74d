#include "ktori/tube.hpp"

#include <cmath>
#include <numbers>

#include "ktori/embedding.hpp"
#include "ktori/predicates.hpp"

namespace ktori {

namespace {

using Vec = std::array<double, 3>;

Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double vdot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec scale(const Vec& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
Vec unit(const Vec& a) { return scale(a, 1 / std::sqrt(vdot(a, a))); }

constexpr double kDeg = std::numbers::pi / 180;

// Rational point on the unit sphere near n (inverse stereographic projection).
Point3 rational_unit(Vec n) {
  n = unit(n);
  const bool flip = n[2] < 0;
  if (flip) n = scale(n, -1);
  Q a = from_double(n[0] / (1 + n[2]), 32), b = from_double(n[1] / (1 + n[2]), 32);
  Q d = 1 + a * a + b * b;
  Point3 r{Q(2 * a / d), Q(2 * b / d), Q((1 - a * a - b * b) / d)};
  return flip ? -r : r;
}

// Rational point on the unit circle near angle theta (degrees).
std::pair<Q, Q> rational_circle(double theta) {
  double rad = theta * kDeg;
  const bool back = std::cos(rad) < 0;
  if (back) rad -= std::numbers::pi;
  Q t = from_double(std::tan(rad / 2), 32);
  Q d = 1 + t * t;
  Q c = (1 - t * t) / d, s = 2 * t / d;
  if (back) return {-c, -s};
  return {c, s};
}

double wrap(double deg) {
  deg = std::fmod(deg, 360.0);
  if (deg <= -180) deg += 360;
  if (deg > 180) deg -= 360;
  return deg;
}

struct DoubleFrame {
  Vec n, e1, e2;
};

DoubleFrame to_double(const RingFrame& f) { return {to_doubles(f.normal), to_doubles(f.e1), to_doubles(f.e2)}; }

// Angle of ring point theta (degrees, in the ring frame) seen along the
// edge direction t, in a fixed basis (p1, p2) of the plane orthogonal to t.
struct EdgeView {
  Vec p1, p2;
  double angle(const DoubleFrame& f, double theta) const {
    double c = std::cos(theta * kDeg), sn = std::sin(theta * kDeg);
    Vec r = {c * f.e1[0] + sn * f.e2[0], c * f.e1[1] + sn * f.e2[1], c * f.e1[2] + sn * f.e2[2]};
    return std::atan2(vdot(r, p2), vdot(r, p1)) / kDeg;
  }
};

EdgeView edge_view(const Vec& from, const Vec& to) {
  Vec t = unit(sub(to, from));
  Vec axis = std::abs(t[0]) < 0.6 ? Vec{1, 0, 0} : Vec{0, 1, 0};
  Vec p1 = unit(sub(axis, scale(t, vdot(axis, t))));
  Vec p2 = {t[1] * p1[2] - t[2] * p1[1], t[2] * p1[0] - t[0] * p1[2], t[0] * p1[1] - t[1] * p1[0]};
  return {p1, p2};
}

double ccw_gap(double from, double to) {
  double d = std::fmod(to - from, 360.0);
  return d < 0 ? d + 360 : d;
}

// Smallest angular gap between consecutive points of rings a and b seen along
// the edge, or -1 unless the two rings interleave.
double interleave_quality(const EdgeView& view, const DoubleFrame& fa, double psi_a, const DoubleFrame& fb,
                          double psi_b) {
  std::vector<std::pair<double, int>> pts;
  for (int j = 0; j < 3; ++j) {
    pts.push_back({wrap(view.angle(fa, psi_a + 120.0 * j)), 0});
    pts.push_back({wrap(view.angle(fb, psi_b + 120.0 * j)), 1});
  }
  std::sort(pts.begin(), pts.end());
  double q = 360;
  for (int i = 0; i < 6; ++i) {
    const auto& x = pts[i];
    const auto& y = pts[(i + 1) % 6];
    if (x.second == y.second) return -1;
    q = std::min(q, ccw_gap(x.first, y.first));
  }
  return q;
}

// Ring angle for ring b placing each b_j a fraction lambda of the way along
// the gap after (or before) a_j, as seen along the edge.
double place_ring(const EdgeView& view, const DoubleFrame& fa, double psi_a, const DoubleFrame& fb, double lambda,
                  bool after) {
  std::array<double, 3> a, target;
  for (int j = 0; j < 3; ++j) a[j] = view.angle(fa, psi_a + 120.0 * j);
  for (int j = 0; j < 3; ++j) {
    double gn = 360, gp = 360;
    for (int l = 0; l < 3; ++l) {
      if (l == j) continue;
      gn = std::min(gn, ccw_gap(a[j], a[l]));
      gp = std::min(gp, ccw_gap(a[l], a[j]));
    }
    target[j] = after ? a[j] + lambda * gn : a[j] - lambda * gp;
  }
  auto cost = [&](double psi) {
    double c = 0;
    for (int j = 0; j < 3; ++j) {
      double d = wrap(view.angle(fb, psi + 120.0 * j) - target[j]);
      c += d * d;
    }
    return c;
  };
  double best = 0, best_c = 1e300;
  for (int s = 0; s < 720; ++s) {
    double c = cost(s * 0.5);
    if (c < best_c) best_c = c, best = s * 0.5;
  }
  for (double step = 0.25; step > 1e-6; step /= 2)
    for (double cand : {best - step, best + step})
      if (double c = cost(cand); c < best_c) best_c = c, best = cand;
  return wrap(best);
}

struct RingPlan {
  std::vector<double> psi;
  std::vector<double> offsets;  // angle of b_0 minus angle of a_0 along each edge
  double quality = -1;
};

// Chooses ring angles so consecutive rings interleave when seen along each
// edge; the closing prism is fixed by ring 0, so fractions and the number of
// "before" placements are searched for the best worst-case gap.
RingPlan plan_rings(const StickKnot& knot, const std::vector<DoubleFrame>& frames) {
  const int k = static_cast<int>(frames.size());
  std::vector<EdgeView> views;
  for (int i = 0; i < k; ++i) views.push_back(edge_view(to_doubles(knot.at(i)), to_doubles(knot.at(i + 1))));
  RingPlan best;
  for (double lambda : {0.5, 0.45, 0.55, 0.4, 0.6, 0.35, 0.65, 0.3, 0.7, 0.25, 0.75}) {
    for (int before = 0; before <= k - 1; ++before) {
      RingPlan plan;
      plan.psi.assign(k, 0.0);
      for (int i = 0; i + 1 < k; ++i) {
        bool after = (i + 1) * before / (k - 1) == i * before / (k - 1);
        plan.psi[i + 1] = place_ring(views[i], frames[i], plan.psi[i], frames[i + 1], lambda, after);
      }
      plan.quality = 360;
      for (int i = 0; i < k; ++i) {
        int b = (i + 1) % k;
        plan.quality =
            std::min(plan.quality, interleave_quality(views[i], frames[i], plan.psi[i], frames[b], plan.psi[b]));
        plan.offsets.push_back(wrap(views[i].angle(frames[b], plan.psi[b]) - views[i].angle(frames[i], plan.psi[i])));
      }
      if (plan.quality > best.quality) best = plan;
      if (best.quality >= 20) return best;
    }
  }
  return best;
}

bool strict_facet(const std::array<Point3, 6>& pts, int a, int b, int c) {
  int side = 0;
  for (int i = 0; i < 6; ++i) {
    if (i == a || i == b || i == c) continue;
    int o = orient3d(pts[a], pts[b], pts[c], pts[i]);
    if (o == 0 || (side && o != side)) return false;
    side = o;
  }
  return true;
}

// Side triangles of the convex hull of two rings (a = 0..2, b = 3..5), when
// all six points are hull vertices, no four are coplanar on the hull and
// both ring triangles are facets.
std::optional<std::vector<std::array<int, 3>>> prism_sides(const std::array<Point3, 6>& pts) {
  std::vector<std::array<int, 3>> facets;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        if (strict_facet(pts, a, b, c)) facets.push_back({a, b, c});
  if (facets.size() != 8) return std::nullopt;
  std::vector<std::array<int, 3>> sides;
  for (const auto& f : facets)
    if (f != std::array<int, 3>{0, 1, 2} && f != std::array<int, 3>{3, 4, 5}) sides.push_back(f);
  if (sides.size() != 6) return std::nullopt;
  return sides;
}

}  // namespace

EpsilonBound epsilon_bound(const StickKnot& knot) {
  validate_knot(knot);
  const int k = knot.k();
  std::optional<Q> best;
  auto take = [&](const Q& d) {
    if (!best || d < *best) best = d;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      take(segment_distance2(knot.at(i), knot.at(i + 1), knot.at(j), knot.at(j + 1)));
    }
    for (int e = 0; e < k; ++e) {
      if (e == i || (e + 1) % k == i) continue;
      take(point_segment_distance2(knot.at(i), knot.at(e), knot.at(e + 1)));
    }
  }
  if (!best || *best == 0) throw Error(ErrorCode::DegenerateKnot, "knot touches itself");
  EpsilonBound b;
  b.bound_squared = *best / 16;
  b.epsilon = sqrt_lower(b.bound_squared);
  return b;
}

RingFrame ring_frame(const StickKnot& knot, int i) {
  Vec u = to_doubles(knot.at(i - 1)), v = to_doubles(knot.at(i)), w = to_doubles(knot.at(i + 1));
  Vec in = unit(sub(v, u)), out = unit(sub(w, v));
  RingFrame f;
  Vec travel = {in[0] + out[0], in[1] + out[1], in[2] + out[2]};
  f.normal = rational_unit(travel);
  if (vdot(to_doubles(f.normal), travel) < 0) f.normal = -f.normal;
  const Point3& n = f.normal;
  if (n.x == 0 && n.y == 0 && n.z == 1) {
    f.e1 = {1, 0, 0};
    f.e2 = {0, 1, 0};
    return f;
  }
  Point3 h = n - Point3{0, 0, 1};
  Q h2 = norm2(h);
  f.e1 = Point3{1, 0, 0} - Q(2 * h.x / h2) * h;
  f.e2 = Point3{0, 1, 0} - Q(2 * h.y / h2) * h;
  return f;
}

Mesh tube_construction(const StickKnot& knot, const Q& eps) {
  validate_knot(knot);
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  const int k = knot.k();
  std::vector<RingFrame> frames;
  std::vector<DoubleFrame> dframes;
  for (int i = 0; i < k; ++i) {
    frames.push_back(ring_frame(knot, i));
    dframes.push_back(to_double(frames.back()));
  }
  RingPlan plan = plan_rings(knot, dframes);
  const std::vector<double>& psi = plan.psi;

  std::vector<Point3> coords;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < 3; ++j) {
      auto [c, s] = rational_circle(psi[i] + 120.0 * j);
      coords.push_back(knot.at(i) + eps * (c * frames[i].e1 + s * frames[i].e2));
    }

  std::vector<Face> faces;
  for (int i = 0; i < k; ++i) {
    int b = (i + 1) % k;
    std::array<Point3, 6> pts{coords[3 * i], coords[3 * i + 1], coords[3 * i + 2],
                              coords[3 * b], coords[3 * b + 1], coords[3 * b + 2]};
    auto sides = prism_sides(pts);
    if (!sides)
      throw Error(ErrorCode::EpsilonTooLarge, "prism " + std::to_string(i) + " is not in convex position at eps = " +
                                                  eps.get_str());
    auto label = [&](int x) { return x < 3 ? 3 * i + 1 + x : 3 * b + 1 + (x - 3); };
    for (const auto& f : *sides) faces.push_back(make_face(label(f[0]), label(f[1]), label(f[2])));
  }

  Mesh mesh{std::move(coords), Triangulation(std::move(faces)), {}};
  auto& pv = mesh.provenance;
  pv.construction = "tube";
  pv.epsilon = eps;
  pv.source_knot = knot.vertices;
  pv.rings = k;
  pv.twist_degrees = plan.offsets;
  pv.meridian = Cycle{{1, 2, 3}};

  auto cert = verify_embedding(mesh);
  if (!cert.embedded)
    throw Error(ErrorCode::EpsilonTooLarge, "tube at eps = " + eps.get_str() + " is not embedded: " +
                                                cert.violation->reason);
  return mesh;
}

Q choose_epsilon(const StickKnot& knot) {
  Q eps = epsilon_bound(knot).epsilon;
  for (int attempt = 0; attempt < 40; ++attempt, eps /= 2) {
    try {
      tube_construction(knot, eps);
      return eps;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EpsilonTooLarge) throw;
    }
  }
  throw Error(ErrorCode::EpsilonTooLarge, "no embedded tube found down to eps = " + eps.get_str());
}

}  // namespace ktori
