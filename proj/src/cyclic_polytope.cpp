#include "ktori/cyclic_polytope.hpp"

#include <algorithm>

#include "ktori/cycles.hpp"
#include "ktori/embedding.hpp"
#include "ktori/error.hpp"
#include "ktori/generators.hpp"
#include "ktori/knots.hpp"
#include "ktori/stick_knot.hpp"

namespace ktori {

namespace {

// The facet through moment points t1..t4 is the zero set of
// prod (t - ti) = t^4 - e1 t^3 + e2 t^2 - e3 t + e4, read as an affine
// function of (x1, x2, x3, x4) = (t, t^2, t^3, t^4).
struct Hyperplane {
  Point4 normal;
  Q offset;

  Q operator()(const Point4& x) const {
    Q s = offset;
    for (int i = 0; i < 4; ++i) s += normal[i] * x[i];
    return s;
  }
};

Hyperplane facet_hyperplane(const std::array<int, 4>& t) {
  Q e1 = 0, e2 = 0, e3 = 0, e4 = 1;
  for (int i = 0; i < 4; ++i) {
    e1 += t[i];
    e4 *= t[i];
    for (int j = i + 1; j < 4; ++j) {
      e2 += t[i] * t[j];
      for (int l = j + 1; l < 4; ++l) e3 += t[i] * t[j] * t[l];
    }
  }
  return {{-e3, e2, -e1, Q(1)}, e4};
}

Point4 centroid(const std::vector<Point4>& pts) {
  Point4 c{Q(0), Q(0), Q(0), Q(0)};
  for (const auto& p : pts)
    for (int i = 0; i < 4; ++i) c[i] += p[i];
  for (int i = 0; i < 4; ++i) c[i] /= static_cast<long>(pts.size());
  return c;
}

}  // namespace

Point4 moment_point(const Q& t) {
  Q t2 = t * t;
  return {t, t2, t2 * t, t2 * t2};
}

bool is_cyclic_facet(int n, std::array<int, 4> s) {
  std::sort(s.begin(), s.end());
  if (s[0] < 1 || s[3] > n) return false;
  for (int i = 0; i < 3; ++i)
    if (s[i] == s[i + 1]) return false;
  auto in = [&](int x) { return std::binary_search(s.begin(), s.end(), x); };
  for (int i = 1; i <= n; ++i) {
    if (in(i)) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (in(j)) continue;
      int between = 0;
      for (int x : s) between += x > i && x < j;
      if (between % 2) return false;
    }
  }
  return true;
}

std::vector<std::array<int, 4>> cyclic_facets(int n) {
  std::vector<std::array<int, 4>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (is_cyclic_facet(n, {a, b, c, d})) out.push_back({a, b, c, d});
  return out;
}

bool is_cyclic_face(int n, const std::vector<int>& s) {
  for (const auto& f : cyclic_facets(n))
    if (std::all_of(s.begin(), s.end(), [&](int x) { return std::find(f.begin(), f.end(), x) != f.end(); }))
      return true;
  return false;
}

CyclicRealization realize_cyclic(int k) {
  Triangulation t = minimal_torus_3k(k);
  const int n = t.num_vertices();
  auto h = minimal_torus_hamiltonian(k);

  std::vector<int> position(n + 1, 0);
  for (std::size_t i = 0; i < h.size(); ++i) position[h[i]] = static_cast<int>(i) + 1;

  auto facets = cyclic_facets(n);
  for (const Face& f : t.faces()) {
    std::vector<int> s{position[f[0]], position[f[1]], position[f[2]]};
    bool found = std::any_of(facets.begin(), facets.end(), [&](const auto& g) {
      return std::all_of(s.begin(), s.end(), [&](int x) { return std::find(g.begin(), g.end(), x) != g.end(); });
    });
    if (!found) throw Error(ErrorCode::FaceNotInPolytope, "triangle " + to_string(f));
  }

  std::vector<Point4> pts(n + 1);
  std::vector<Point4> all;
  for (Vertex v = 1; v <= n; ++v) all.push_back(pts[v] = moment_point(Q(position[v])));
  const Point4 inner = centroid(all);

  const std::array<int, 4> facet = facets.front();
  std::vector<Point4> fpts;
  for (int x : facet) fpts.push_back(moment_point(Q(x)));
  const Point4 cf = centroid(fpts);

  std::vector<Hyperplane> planes;
  for (const auto& g : facets) planes.push_back(facet_hyperplane(g));
  const Hyperplane& hf = planes.front();

  // Beyond the projection facet only: every other facet still sees the
  // viewpoint on the polytope's side.
  Q delta = 1;
  for (int attempt = 0; attempt < 64; ++attempt, delta /= 2) {
    Point4 p;
    for (int i = 0; i < 4; ++i) p[i] = cf[i] + delta * (cf[i] - inner[i]);
    bool beyond_only_f = true;
    for (std::size_t g = 0; g < planes.size() && beyond_only_f; ++g) {
      int inside = sgn(planes[g](inner));
      int at_p = sgn(planes[g](p));
      beyond_only_f = g == 0 ? at_p == -inside : at_p == inside;
    }
    if (!beyond_only_f) continue;

    // Central projection from p onto the facet hyperplane; its x4
    // coefficient is 1, so dropping x4 is an affine bijection onto R^3.
    const Q fp = hf(p);
    std::vector<Point3> coords;
    for (Vertex v = 1; v <= n; ++v) {
      Q lambda = fp / (fp - hf(pts[v]));
      Point4 y;
      for (int i = 0; i < 4; ++i) y[i] = p[i] + lambda * (pts[v][i] - p[i]);
      coords.push_back({y[0], y[1], y[2]});
    }
    Mesh mesh{coords, t, {}};
    if (!verify_embedding(mesh).embedded) continue;

    mesh.provenance.construction = "cyclic";
    mesh.provenance.notes.push_back("moment curve C_4(" + std::to_string(n) +
                                    "), vertex at t = position on the Hamiltonian cycle");
    mesh.provenance.notes.push_back("Schlegel facet {" + std::to_string(facet[0]) + "," +
                                    std::to_string(facet[1]) + "," + std::to_string(facet[2]) + "," +
                                    std::to_string(facet[3]) + "}, delta " + delta.get_str());
    Cycle core = stick_number_and_type(t).witness_s;
    mpz_class det = knot_determinant(StickKnot{cycle_polygon(mesh, core)});
    return {std::move(mesh), std::move(position), facet, delta, std::move(core), det};
  }
  throw Error(ErrorCode::EpsilonTooLarge, "no Schlegel viewpoint gives an embedded mesh for k = " + std::to_string(k));
}

Mesh cyclic_polytope_realization(int k) { return realize_cyclic(k).mesh; }

}  // namespace ktori
