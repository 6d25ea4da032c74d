// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include "ktori/canonical.hpp"
#include "ktori/census.hpp"
#include "ktori/complement.hpp"
#include "ktori/cycles.hpp"
#include "ktori/cyclic_polytope.hpp"
#include "ktori/embedding.hpp"
#include "ktori/generators.hpp"
#include "ktori/homology.hpp"
#include "ktori/knots.hpp"
#include "ktori/stick_knot.hpp"
#include "ktori/tube.hpp"
#include "oracles.hpp"

using namespace ktori;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& detail, double secs) {
  if (!ok) ++failures;
  std::printf("criterion %d: %s  (%.1f s)  %s\n", id, ok ? "PASS" : "FAIL", secs, detail.c_str());
  std::fflush(stdout);
}

// Runs body; an exception is a failure with its message as detail.
template <class F>
void criterion(int id, F&& body) {
  auto t0 = Clock::now();
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << " exception: " << e.what();
  }
  report(id, ok, detail.str(), since(t0));
}

const std::string kData = KTORI_TEST_DATA;

}  // namespace

int main() {
  CensusOptions opts;
  opts.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  // 1. Census at n = 7: one torus, the 7-vertex one, of type 3x3, within a minute.
  criterion(1, [&](std::ostream& d) {
    auto t0 = Clock::now();
    auto r = run_census(7, opts);
    double secs = since(t0);
    bool iso = r.records.size() == 1 && is_isomorphic(Triangulation(r.records[0].canonical_faces), moebius_torus());
    bool type = r.records.size() == 1 && r.records[0].type_string() == "3x3";
    d << "count=" << r.records.size() << " isomorphic_to_moebius=" << iso << " type="
      << (r.records.empty() ? "-" : r.records[0].type_string());
    return r.complete && r.records.size() == 1 && iso && type && secs < 60;
  });

  // 2. No 3x4 torus on 9 vertices, exactly one on 10 (the generator's), within
  //    30 minutes; both enumeration strategies agree at n = 8, 9.
  CensusResult c9, c10;
  criterion(2, [&](std::ostream& d) {
    auto t0 = Clock::now();
    bool dual = true;
    for (int n : {8, 9}) {
      auto a = enumerate_tori(n);
      auto b = lexicographic_tori(n);
      bool same = a.size() == b.size();
      for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].canonical_faces == b[i];
      d << "n=" << n << ":" << a.size() << "/" << b.size() << " ";
      dual = dual && same;
    }
    c9 = run_census(9, opts);
    c10 = run_census(10, opts);
    double secs = since(t0);
    auto t9 = c9.by_type(), t10 = c10.by_type();
    int at9 = t9.count("3x4") ? t9.at("3x4") : 0;
    int at10 = t10.count("3x4") ? t10.at("3x4") : 0;
    bool unique = false;
    for (const auto& rec : c10.records)
      if (rec.type_string() == "3x4") unique = rec.canonical_faces == canonical_form(minimal_torus_3k(4));
    d << "3x4 on 9: " << at9 << ", on 10: " << at10 << " (of " << c10.records.size()
      << "), matches generator=" << unique;
    return dual && c9.complete && c10.complete && at9 == 0 && at10 == 1 && unique && secs <= 1800;
  });

  // 3. Generator suite k = 3..12.
  criterion(3, [&](std::ostream& d) {
    auto t0 = Clock::now();
    bool ok = true;
    for (int k = 3; k <= 12; ++k) {
      Triangulation t = minimal_torus_3k(k);
      auto type = stick_number_and_type(t);
      bool equi = true;
      for (Vertex v = 1; v <= t.num_vertices(); ++v) equi = equi && t.degree(v) == 6;
      auto h = minimal_torus_hamiltonian(k);
      std::vector<Vertex> sorted = h;
      std::sort(sorted.begin(), sorted.end());
      bool ham = static_cast<int>(h.size()) == 3 * k - 2 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      for (std::size_t i = 0; ham && i < h.size(); ++i) ham = t.has_edge(h[i], h[(i + 1) % h.size()]);
      bool k_ok = t.num_vertices() == 3 * k - 2 && type.m == 3 && type.s == k && equi &&
                  is_automorphism(t, minimal_torus_rotation(k)) && ham;
      if (!k_ok) d << "k=" << k << " failed; ";
      ok = ok && k_ok;
    }
    double secs = since(t0);
    d << "k=3..12 vertices 3k-2, type 3xk, degree 6, cyclic automorphism, Hamiltonian cycle";
    return ok && secs < 60;
  });

  // 4. |V| >= lower_bound(m, s) on every census complex with n <= 10; the
  //    strict gap for 4 <= m <= k, 6 <= k <= 20; two hand-evaluated values.
  criterion(4, [&](std::ostream& d) {
    long checked = 0, exceptions = 0;
    std::vector<CensusRecord> all;
    for (int n : {7, 8}) {
      auto r = run_census(n, opts);
      all.insert(all.end(), r.records.begin(), r.records.end());
    }
    all.insert(all.end(), c9.records.begin(), c9.records.end());
    all.insert(all.end(), c10.records.begin(), c10.records.end());
    for (const auto& rec : all) {
      ++checked;
      if (rec.n < lower_bound(rec.m, rec.s)) ++exceptions;
    }
    bool gap = true;
    for (int k = 6; k <= 20; ++k)
      for (int m = 4; m <= k; ++m) gap = gap && bound_strict_gap(m, k);
    bool values = lower_bound(7, 12) == 61 && lower_bound(4, 6) == 17 && 17 > 3 * 6 - 2;
    d << "complexes=" << checked << " exceptions=" << exceptions << " gap_sweep=" << gap
      << " lower_bound(7,12)=" << lower_bound(7, 12) << " lower_bound(4,6)=" << lower_bound(4, 6);
    return checked == 1 + 7 + 112 + 2109 && exceptions == 0 && gap && values && !c10.records.empty();
  });

  // 5. Tubes: triangle and trefoil, embedded, determinants 1 and 3; short
  //    non-separating cycles on the trefoil tube are meridians; < 5 minutes.
  criterion(5, [&](std::ostream& d) {
    auto t0 = Clock::now();
    StickKnot tri = load_stick_knot(kData + "/triangle.txt");
    Mesh mt = tube_construction(tri, choose_epsilon(tri));
    bool tri_ok = mt.coords.size() == 9 && verify_embedding(mt).embedded && knot_determinant(core_curve(mt)) == 1;

    StickKnot tre = load_stick_knot(kData + "/trefoil6.txt");
    Mesh mk = tube_construction(tre, choose_epsilon(tre));
    bool tre_ok = mk.coords.size() == 18 && verify_embedding(mk).embedded && knot_determinant(core_curve(mk)) == 3;

    oracle::ChainHomology h(mk.complex);
    int short_ns = 0, meridians = 0;
    for (const auto& c : oracle::simple_cycles(mk.complex, 5)) {
      if (h.separating(c)) continue;
      ++short_ns;
      meridians += classify_cycle_in_tube(mk, c).meridian;
    }
    double secs = since(t0);
    d << "triangle V=" << mt.coords.size() << " trefoil V=" << mk.coords.size()
      << " det=" << knot_determinant(core_curve(mk)) << " short non-separating=" << short_ns
      << " meridian=" << meridians;
    return tri_ok && tre_ok && short_ns > 0 && meridians == short_ns && secs < 300;
  });

  // 6. Complement of the trefoil: 3k + 4 = 22 vertices, closed orientable genus 1, embedded.
  criterion(6, [&](std::ostream& d) {
    StickKnot tre = load_stick_knot(kData + "/trefoil6.txt");
    Mesh m = complement_construction(tre);
    const auto& r = m.complex.report();
    bool emb = verify_embedding(m, opts.threads).embedded;
    d << "V=" << m.coords.size() << " F=" << m.complex.num_faces() << " euler=" << r.euler
      << " orientable=" << r.orientable << " genus=" << r.genus << " embedded=" << emb;
    return m.coords.size() == 22 && m.complex.num_faces() == 44 && r.euler == 0 && r.orientable && r.connected &&
           r.genus == 1 && emb;
  });

  // 7. Cyclic polytope realizations k = 3..6.
  criterion(7, [&](std::ostream& d) {
    bool ok = true;
    for (int k = 3; k <= 6; ++k) {
      CyclicRealization r = realize_cyclic(k);  // throws FaceNotInPolytope on a bad triangle
      const int n = 3 * k - 2;
      bool faces = true;
      for (const Face& f : r.mesh.complex.faces())
        faces = faces && is_cyclic_face(n, {r.position[f[0]], r.position[f[1]], r.position[f[2]]});
      bool emb = verify_embedding(r.mesh).embedded;
      d << "k=" << k << ":gale=" << faces << ",embedded=" << emb << ",core_det=" << r.core_determinant << " ";
      ok = ok && faces && emb && r.core_determinant == 1;
    }
    return ok;
  });

  // 8. Shortest cycles, marked types and s(T) against exhaustive enumeration
  //    on every complex with at most 12 vertices used in the tests.
  criterion(8, [&](std::ostream& d) {
    std::vector<Triangulation> ts{moebius_torus(), minimal_torus_3k(3), minimal_torus_3k(4), tube_complex(3),
                                  tube_complex(4)};
    for (int n : {7, 8}) {
      auto r = run_census(n, opts);
      for (const auto& rec : r.records) ts.emplace_back(rec.canonical_faces);
    }
    for (const auto& rec : c9.records) ts.emplace_back(rec.canonical_faces);
    int agree = 0;
    for (const auto& t : ts) {
      HomologyBasis b(t);
      auto tt = stick_number_and_type(t, b);
      auto sn = shortest_nonseparating(t, b);
      auto mt = marked_type(t, b, sn.witness);
      auto brute = oracle::brute_type(t, t.num_vertices());
      auto bm = oracle::brute_marked_type(t, sn.witness, t.num_vertices());
      agree += brute.consistent && tt.m == brute.m && tt.s == brute.s && sn.length == brute.m && mt.m == bm[0] &&
               mt.k == bm[1];
    }
    d << "agree on " << agree << " of " << ts.size() << " complexes";
    return agree == static_cast<int>(ts.size());
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
