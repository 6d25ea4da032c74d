#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "ktori/canonical.hpp"
#include "ktori/complement.hpp"
#include "ktori/cyclic_polytope.hpp"
#include "ktori/embedding.hpp"
#include "ktori/generators.hpp"
#include "ktori/knots.hpp"
#include "ktori/mesh_io.hpp"
#include "ktori/predicates.hpp"
#include "ktori/stick_knot.hpp"
#include "ktori/tube.hpp"
#include "oracles.hpp"

using namespace ktori;

namespace {

const std::string kData = KTORI_TEST_DATA;

StickKnot triangle() { return load_stick_knot(kData + "/triangle.txt"); }
StickKnot trefoil() { return load_stick_knot(kData + "/trefoil6.txt"); }

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

Point3 P(long x, long y, long z) { return {Q(x), Q(y), Q(z)}; }

}  // namespace

TEST_CASE("exact rational parsing and printing") {
  CHECK(parse_rational("3/4") == Q(3, 4));
  CHECK(parse_rational("-6/8") == Q(-3, 4));
  CHECK(parse_rational("0.125") == Q(1, 8));
  CHECK(parse_rational("-.5") == Q(-1, 2));
  CHECK(parse_rational("1e-3") == Q(1, 1000));
  CHECK(parse_rational("2.5E2") == Q(250));
  CHECK(parse_rational("0.1") == Q(1, 10));
  CHECK(parse_rational("0089/0010") == Q(89, 10));
  CHECK(parse_rational("00.09") == Q(9, 100));
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "1/x", "--1", "e5"})
    CHECK(error_of([&] { parse_rational(bad); }) == ErrorCode::ParseError);
  CHECK(to_decimal(Q(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Q(2, 3), 3) == "0.667");
  CHECK(to_decimal(Q(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Q(7), 2) == "7.00");
}

TEST_CASE("dyadic square root lower bound") {
  for (Q a : {Q(2), Q(1, 32), Q(10), Q(9, 4)}) {
    Q r = sqrt_lower(a);
    CHECK(r > 0);
    CHECK(r * r <= a);
    CHECK(std::abs(r.get_d() - std::sqrt(a.get_d())) < 1e-6 * std::sqrt(a.get_d()));
    CHECK(sqrt_lower(16 * a) == 4 * r);
    CHECK(sqrt_lower(a / 4) == r / 2);
  }
  CHECK(sqrt_lower(Q(9, 4)) == Q(3, 2));
}

TEST_CASE("orientation and intersection predicates") {
  CHECK(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)) == 1);
  CHECK(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, -1)) == -1);
  CHECK(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(5, 7, 0)) == 0);
  CHECK(collinear(P(0, 0, 0), P(1, 1, 1), P(3, 3, 3)));
  // Closed triangles: a shared vertex counts as an intersection.
  CHECK(triangles_intersect(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 0), P(-1, 0, 1), P(0, -1, 1)));
  CHECK_FALSE(triangles_intersect(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(1, 0, 1), P(0, 1, 1)));
  // Piercing.
  CHECK(triangles_intersect(P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(1, 1, -1), P(1, 1, 1), P(2, 2, 1)));
  // Coplanar overlap.
  CHECK(triangles_intersect(P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(1, 1, 0), P(5, 1, 0), P(1, 5, 0)));
  CHECK(segment_triangle_intersect(P(1, 1, -1), P(1, 1, 1), P(0, 0, 0), P(4, 0, 0), P(0, 4, 0)));
  CHECK_FALSE(segment_triangle_intersect(P(5, 5, -1), P(5, 5, 1), P(0, 0, 0), P(4, 0, 0), P(0, 4, 0)));
  CHECK(segment_distance2(P(0, 0, 0), P(1, 0, 0), P(0, 1, 1), P(1, 1, 1)) == 2);
  CHECK(point_segment_distance2(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)) == Q(1, 2));
  CHECK(circumcenter(P(0, 0, 0), P(2, 0, 0), P(0, 2, 0)) == P(1, 1, 0));
}

TEST_CASE("stick knot files") {
  StickKnot t = triangle();
  CHECK(t.k() == 3);
  CHECK(t.vertices[1] == P(1, 0, 0));
  StickKnot k = trefoil();
  CHECK(k.k() == 6);
  CHECK(in_general_position(k));
  std::stringstream ss;
  save_stick_knot(k, ss);
  StickKnot back = parse_stick_knot(ss);
  CHECK(back.vertices == k.vertices);

  std::stringstream frac("# comment\n1/2 0 0\n0 1/3 0  # trailing\n0 0 0.25\n");
  StickKnot f = parse_stick_knot(frac);
  CHECK(f.vertices[0].x == Q(1, 2));
  CHECK(f.vertices[2].z == Q(1, 4));

  std::stringstream bad("0 0 0\n1 0\n0 1 0\n");
  try {
    parse_stick_knot(bad);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::stringstream dup("0 0 0\n0 0 0\n0 1 0\n");
  CHECK(error_of([&] { parse_stick_knot(dup); }) == ErrorCode::DegenerateKnot);
  std::stringstream straight("0 0 0\n1 0 0\n2 0 0\n0 1 0\n");
  CHECK(error_of([&] { parse_stick_knot(straight); }) == ErrorCode::DegenerateKnot);
  std::stringstream two("0 0 0\n1 0 0\n");
  CHECK(error_of([&] { parse_stick_knot(two); }) == ErrorCode::DegenerateKnot);
}

TEST_CASE("epsilon bound: closed form and scale covariance") {
  // Right triangle: the closest vertex / opposite edge pair is the origin and
  // the hypotenuse at distance 1/sqrt(2); (1/4)^2 * 1/2 = 1/32.
  EpsilonBound b = epsilon_bound(triangle());
  CHECK(b.bound_squared == Q(1, 32));
  CHECK(b.epsilon * b.epsilon <= Q(1, 32));
  CHECK(b.epsilon.get_d() > 0.99 * std::sqrt(1.0 / 32));

  StickKnot k = trefoil();
  EpsilonBound base = epsilon_bound(k);
  for (Q lambda : {Q(2), Q(1, 2), Q(4), Q(3, 7), Q(5)}) {
    EpsilonBound s = epsilon_bound(scaled(k, lambda));
    CHECK(s.bound_squared == lambda * lambda * base.bound_squared);
    CHECK(std::abs(s.epsilon.get_d() / base.epsilon.get_d() - lambda.get_d()) < 1e-6 * lambda.get_d());
  }
  // Powers of two scale the rational epsilon exactly.
  CHECK(epsilon_bound(scaled(k, Q(2))).epsilon == 2 * base.epsilon);
  CHECK(epsilon_bound(scaled(k, Q(1, 4))).epsilon == base.epsilon / 4);
}

TEST_CASE("embedding verification on small closed surfaces") {
  Triangulation tet({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  Mesh good{{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)}, tet, {}};
  auto c = verify_embedding(good);
  CHECK(c.embedded);
  CHECK(c.pairs_tested > 0);
  // Vertex 4 pushed into the plane of face 123: faces fold onto each other.
  Mesh flat{{P(0, 0, 0), P(3, 0, 0), P(0, 3, 0), P(1, 1, 0)}, tet, {}};
  auto f = verify_embedding(flat);
  CHECK_FALSE(f.embedded);
  REQUIRE(f.violation.has_value());
  CHECK_FALSE(f.violation->reason.empty());
  Mesh dup{{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 1, 0)}, tet, {}};
  CHECK_FALSE(verify_embedding(dup).embedded);
}

TEST_CASE("tube around the triangle") {
  StickKnot k = triangle();
  Q eps = choose_epsilon(k);
  Mesh m = tube_construction(k, eps);
  CHECK(m.coords.size() == 9);
  CHECK(m.complex.num_faces() == 18);
  CHECK(m.complex.is_torus());
  CHECK(verify_embedding(m).embedded);
  // Rings are 3i+1..3i+3; every face joins two consecutive rings.
  for (const Face& f : m.complex.faces()) {
    std::set<int> rings{(f[0] - 1) / 3, (f[1] - 1) / 3, (f[2] - 1) / 3};
    CHECK(rings.size() == 2);
  }
  CHECK(core_curve(m).vertices == k.vertices);
  CHECK(knot_determinant(core_curve(m)) == 1);
  for (int i = 0; i < 3; ++i) {
    RingFrame fr = ring_frame(k, i);
    CHECK(norm2(fr.normal) == 1);
    for (Vertex v : tube_ring(i)) {
      Point3 d = m.at(v) - k.vertices[i];
      CHECK(norm2(d) == eps * eps);   // on the circle of radius eps
      CHECK(dot(d, fr.normal) == 0);  // in the ring plane
    }
    // The ring's circumcenter is the knot vertex, so the circumradius is eps exactly.
    auto r = tube_ring(i);
    CHECK(circumcenter(m.at(r[0]), m.at(r[1]), m.at(r[2])) == k.vertices[i]);
  }
  // An oversized tube self-intersects: scale every ring to radius 10.
  Mesh big = m;
  for (int i = 0; i < 3; ++i)
    for (Vertex v : tube_ring(i)) big.coords[v - 1] = k.vertices[i] + (Q(10) / eps) * (m.at(v) - k.vertices[i]);
  auto cert = verify_embedding(big);
  CHECK_FALSE(cert.embedded);
  REQUIRE(cert.violation.has_value());
  CHECK(cert.violation->face_a >= 0);
  CHECK(error_of([&] { tube_construction(k, Q(10)); }) == ErrorCode::EpsilonTooLarge);
}

TEST_CASE("ring normals approximate the angle bisector normals") {
  StickKnot k = trefoil();
  for (int i = 0; i < k.k(); ++i) {
    auto u = to_doubles(k.at(i - 1)), v = to_doubles(k.at(i)), w = to_doubles(k.at(i + 1));
    double a[3], b[3], s[3];
    double na = 0, nb = 0;
    for (int j = 0; j < 3; ++j) {
      a[j] = w[j] - v[j];
      b[j] = v[j] - u[j];
      na += a[j] * a[j];
      nb += b[j] * b[j];
    }
    double ns = 0;
    for (int j = 0; j < 3; ++j) {
      s[j] = a[j] / std::sqrt(na) + b[j] / std::sqrt(nb);
      ns += s[j] * s[j];
    }
    auto n = to_doubles(ring_frame(k, i).normal);
    double cosang = std::abs(n[0] * s[0] + n[1] * s[1] + n[2] * s[2]) / std::sqrt(ns);
    CHECK(cosang > 1 - 1e-9);
  }
}

TEST_CASE("tube around the trefoil") {
  StickKnot k = trefoil();
  Mesh m = tube_construction(k, choose_epsilon(k));
  CHECK(m.coords.size() == 18);
  CHECK(m.complex.num_faces() == 36);
  CHECK(m.complex.is_torus());
  CHECK(verify_embedding(m, 4).embedded);
  CHECK(core_curve(m).vertices == k.vertices);
  CHECK(knot_determinant(core_curve(m)) == 3);
}

TEST_CASE("complement construction around the triangle") {
  StickKnot k = triangle();
  Mesh tube = tube_construction(k, choose_epsilon(k));
  HullEdgeWitness w = convex_ring_edge(tube);
  CHECK(is_hull_edge(tube, w.v1, w.v2));
  CHECK(tube.complex.has_edge(w.v1, w.v2));

  Mesh m = complement_construction(k);
  CHECK(m.coords.size() == 13);
  CHECK(m.complex.num_faces() == 2 * 13);
  const auto& r = m.complex.report();
  CHECK(r.euler == 0);
  CHECK(r.orientable);
  CHECK(r.connected);
  CHECK(verify_embedding(m).embedded);
  // Tube vertices and coordinates are kept.
  for (std::size_t i = 0; i < tube.coords.size(); ++i) CHECK(m.coords[i] == tube.coords[i]);
}

TEST_CASE("Gale evenness matches the convex hull of the moment curve") {
  CHECK(is_cyclic_facet(7, {1, 2, 4, 5}));
  CHECK(is_cyclic_face(7, {1, 2, 4}));
  CHECK_FALSE(is_cyclic_facet(7, {1, 3, 5, 7}));
  CHECK(is_cyclic_facet(7, {1, 2, 6, 7}));
  CHECK(is_cyclic_facet(7, {1, 3, 4, 7}));
  for (int n = 5; n <= 10; ++n) {
    auto gale = cyclic_facets(n);
    CHECK(gale == oracle::hull_facets_moment(n));
    CHECK(static_cast<int>(gale.size()) == n * (n - 3) / 2);
  }
}

TEST_CASE("cyclic polytope realizations, k = 3..6") {
  for (int k = 3; k <= 6; ++k) {
    CyclicRealization r = realize_cyclic(k);
    const int n = 3 * k - 2;
    CHECK(static_cast<int>(r.mesh.coords.size()) == n);
    CHECK(r.mesh.complex.faces() == minimal_torus_3k(k).faces());
    for (const Face& f : r.mesh.complex.faces())
      CHECK(is_cyclic_face(n, {r.position[f[0]], r.position[f[1]], r.position[f[2]]}));
    CHECK(r.facet == std::array<int, 4>{1, 2, 3, 4});
    CHECK(verify_embedding(r.mesh).embedded);
    CHECK(r.core_determinant == 1);
    CHECK(static_cast<int>(r.core.length()) == k);
    std::set<Point3> distinct(r.mesh.coords.begin(), r.mesh.coords.end());
    CHECK(static_cast<int>(distinct.size()) == n);
  }
  CHECK(is_isomorphic(cyclic_polytope_realization(3).complex, moebius_torus()).has_value());
  CHECK(error_of([] { realize_cyclic(2); }) == ErrorCode::InvalidK);
}

TEST_CASE("OFF / OBJ export and OFF round trip") {
  StickKnot k = triangle();
  Mesh m = tube_construction(k, choose_epsilon(k));
  std::stringstream off;
  export_mesh(off, m, MeshFormat::Off, 9);
  std::string header, counts;
  std::getline(off, header);
  std::getline(off, counts);
  CHECK(header == "OFF");
  CHECK(counts == "9 18 0");
  off.seekg(0);
  Mesh back = import_off(off);
  CHECK(back.complex.faces() == m.complex.faces());
  CHECK(canonical_form(back.complex) == canonical_form(m.complex));
  for (std::size_t i = 0; i < m.coords.size(); ++i) {
    Point3 d = back.coords[i] - m.coords[i];
    for (const Q& c : {d.x, d.y, d.z}) CHECK(abs(c) <= Q(1, 1000000000));
  }

  std::stringstream obj;
  export_mesh(obj, m, MeshFormat::Obj, 6);
  std::string line;
  int vs = 0, fs = 0, min_index = 1 << 30, min_off = 1 << 30;
  while (std::getline(obj, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") ++vs;
    if (tag == "f") {
      ++fs;
      int a, b, c;
      ls >> a >> b >> c;
      min_index = std::min({min_index, a, b, c});
    }
  }
  CHECK(vs == 9);
  CHECK(fs == 18);
  CHECK(min_index == 1);
  for (const Face& f : back.complex.faces()) min_off = std::min(min_off, f[0]);
  CHECK(min_off == 1);  // OFF index 0 was read back as label 1
  std::stringstream text;
  export_mesh(text, m, MeshFormat::Off, 6);
  CHECK(text.str().find("\n3 0 ") != std::string::npos);

  std::stringstream bad("OFF\n3 1 0\n0 0 0\n1 0 0\n");
  CHECK(error_of([&] { import_off(bad); }) == ErrorCode::ParseError);
  CHECK(error_of([] { import_off(std::string("/nonexistent/x.off")); }) == ErrorCode::IoError);
}
