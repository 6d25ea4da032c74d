#include <doctest.h>

#include <set>

#include "ktori/canonical.hpp"
#include "ktori/census.hpp"
#include "ktori/cycles.hpp"
#include "ktori/generators.hpp"
#include "ktori/homology.hpp"

using namespace ktori;

namespace {

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("the 7-vertex torus") {
  Triangulation m = moebius_torus();
  CHECK(m.num_vertices() == 7);
  CHECK(m.num_faces() == 14);
  for (Vertex v = 1; v <= 7; ++v) CHECK(m.degree(v) == 6);
  for (int i = 0; i < 7; ++i) {
    auto at = [&](int j) { return (i + j) % 7 + 1; };
    CHECK(m.face_index(make_face(at(0), at(1), at(3))) >= 0);
    CHECK(m.face_index(make_face(at(0), at(2), at(3))) >= 0);
  }
  auto t = stick_number_and_type(m);
  CHECK(t.m == 3);
  CHECK(t.s == 3);
}

TEST_CASE("minimal 3 x k tori, k = 3..12") {
  CHECK(is_isomorphic(minimal_torus_3k(3), moebius_torus()).has_value());
  for (int k = 3; k <= 12; ++k) {
    Triangulation t = minimal_torus_3k(k);
    CHECK(t.num_vertices() == 3 * k - 2);
    CHECK(t.num_faces() == 2 * (3 * k - 2));
    CHECK(t.is_torus());
    for (Vertex v = 1; v <= t.num_vertices(); ++v) CHECK(t.degree(v) == 6);
    auto type = stick_number_and_type(t);
    CHECK(type.m == 3);
    CHECK(type.s == k);
    CHECK(is_automorphism(t, minimal_torus_rotation(k)));

    auto h = minimal_torus_hamiltonian(k);
    CHECK(static_cast<int>(h.size()) == 3 * k - 2);
    std::set<Vertex> seen(h.begin(), h.end());
    CHECK(static_cast<int>(seen.size()) == 3 * k - 2);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(t.has_edge(h[i], h[(i + 1) % h.size()]));
    CHECK_FALSE(is_separating(t, HomologyBasis(t), Cycle{h}));
    // 1-2-3 is an empty triangle.
    CHECK(t.has_edge(1, 2));
    CHECK(t.has_edge(2, 3));
    CHECK(t.has_edge(1, 3));
    CHECK(t.face_index({1, 2, 3}) < 0);
  }
  // The rotation generates a cyclic group acting transitively.
  auto rot = minimal_torus_rotation(5);
  Vertex v = 1;
  std::set<Vertex> orbit;
  for (int i = 0; i < 13; ++i) orbit.insert(v = rot[v]);
  CHECK(orbit.size() == 13);
  CHECK(v == 1);
  CHECK(error_of([] { minimal_torus_3k(2); }) == ErrorCode::InvalidK);
}

TEST_CASE("tube complexes") {
  for (int k = 3; k <= 8; ++k) {
    Triangulation t = tube_complex(k);
    CHECK(t.num_vertices() == 3 * k);
    CHECK(t.num_faces() == 6 * k);
    CHECK(t.is_torus());
    HomologyBasis b(t);
    for (int i = 0; i < k; ++i) CHECK_FALSE(is_separating(t, b, Cycle{tube_ring(i)}));
  }
  // Per-prism and per-quad diagonal choices all give tori.
  std::vector<PrismDiagonal> per_prism(4, PrismDiagonal::Backward);
  CHECK(tube_complex(4, per_prism).is_torus());
  std::vector<PrismDiagonal> per_quad;
  for (int i = 0; i < 12; ++i) per_quad.push_back(i % 2 ? PrismDiagonal::Forward : PrismDiagonal::Backward);
  CHECK(tube_complex(4, per_quad).is_torus());
  CHECK(error_of([] { tube_complex(2); }) == ErrorCode::InvalidK);
}

TEST_CASE("census n = 7: exactly the 7-vertex torus") {
  auto r = run_census(7);
  CHECK(r.complete);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].canonical_faces == canonical_form(moebius_torus()));
  CHECK(r.records[0].type_string() == "3x3");
  CHECK(r.records[0].equivelar);
  CHECK(r.records[0].automorphism_order == 42);
}

TEST_CASE("census n = 8, 9: both strategies agree") {
  for (int n : {8, 9}) {
    auto orderly = enumerate_tori(n);
    auto lex = lexicographic_tori(n);
    REQUIRE(orderly.size() == lex.size());
    for (std::size_t i = 0; i < lex.size(); ++i) CHECK(orderly[i].canonical_faces == lex[i]);
  }
  CHECK(enumerate_tori(8).size() == 7);
  CHECK(enumerate_tori(9).size() == 112);
}

TEST_CASE("census records are valid, canonical and pairwise non-isomorphic") {
  for (int n : {8, 9}) {
    auto recs = enumerate_tori(n);
    std::set<std::vector<Face>> forms;
    for (const auto& rec : recs) {
      Triangulation t(rec.canonical_faces);
      CHECK(t.is_torus());
      CHECK(t.num_vertices() == n);
      CHECK(canonical_form(t) == rec.canonical_faces);
      auto type = stick_number_and_type(t);
      CHECK(type.m == rec.m);
      CHECK(type.s == rec.s);
      CHECK(n >= lower_bound(rec.m, rec.s));
      forms.insert(rec.canonical_faces);
    }
    CHECK(forms.size() == recs.size());
    for (std::size_t i = 0; i + 1 < recs.size(); i += 5)
      CHECK_FALSE(is_isomorphic(Triangulation(recs[i].canonical_faces), Triangulation(recs[i + 1].canonical_faces)));
  }
  for (const auto& rec : enumerate_tori(9)) CHECK(rec.type_string() != "3x4");
}

TEST_CASE("threads give the same census; small n give none") {
  CensusOptions opts;
  opts.threads = 4;
  auto a = run_census(9, opts);
  auto b = run_census(9);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].canonical_faces == b.records[i].canonical_faces);
  CHECK(a.by_type() == b.by_type());
  for (int n = 4; n <= 6; ++n) CHECK(orderly_tori(n).empty());
}

TEST_CASE("census range and time budget") {
  CHECK(error_of([] { run_census(6); }) == ErrorCode::OutOfRange);
  CHECK(error_of([] { run_census(12); }) == ErrorCode::OutOfRange);
  CensusOptions opts;
  opts.time_budget_secs = 0.05;
  auto r = run_census(10, opts);
  CHECK_FALSE(r.complete);
  CHECK(error_of([] { census_verify_theorem31(5); }) == ErrorCode::OutOfRange);
}

TEST_CASE("3k-2 bound and uniqueness at k = 3") {
  auto r = census_verify_theorem31(3);
  CHECK(r.verified());
  CHECK(r.count_by_n.at(7) == 1);
  CHECK(r.witness == canonical_form(minimal_torus_3k(3)));
}
