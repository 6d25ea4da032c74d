#pragma once

// Isomorph-free enumeration of torus triangulations on few vertices.

#include <map>
#include <string>
#include <vector>

#include "ktori/complex.hpp"

namespace ktori {

struct CensusRecord {
  std::vector<Face> canonical_faces;
  int n = 0;
  int m = 0;  // type m x s
  int s = 0;
  bool equivelar = false;
  int automorphism_order = 0;

  std::string type_string() const { return std::to_string(m) + "x" + std::to_string(s); }
};

struct CensusOptions {
  int threads = 1;
  double time_budget_secs = 0;  // 0: unlimited
};

struct CensusResult {
  int n = 0;
  std::vector<CensusRecord> records;  // sorted by canonical faces
  bool complete = true;               // false when the time budget ran out
  double seconds = 0;

  std::map<std::string, int> by_type() const;
};

inline constexpr int kCensusMin = 7;
inline constexpr int kCensusMax = 11;

// Canonical construction path: vertices are closed in breadth-first order
// from a maximum-degree root, so every candidate arrives in the labeling of
// its own traversal code; a candidate is kept only when no other root flag
// gives a smaller code. No seen-set is stored. Throws OutOfRange unless
// kCensusMin <= n <= kCensusMax.
CensusResult run_census(int n, const CensusOptions& options = {});
std::vector<CensusRecord> enumerate_tori(int n);

// Raw canonical face lists from the orderly generator, without type analysis.
// Accepts any 4 <= n <= kCensusMax (tori need n >= 7, so smaller n give none).
std::vector<std::vector<Face>> orderly_tori(int n, const CensusOptions& options = {}, bool* complete = nullptr);

// Independent second strategy: closes the lexicographically smallest open
// edge first, emits every labeled completion and removes isomorphic copies
// by canonical form. Returns the sorted set of canonical forms.
std::vector<std::vector<Face>> lexicographic_tori(int n);

CensusRecord make_record(const Triangulation& t);

struct MinimalTypeReport {
  int k = 0;
  // Number of type-3xk tori found for each n in [kCensusMin, 3k-2].
  std::map<int, int> count_by_n;
  bool none_below = false;          // no type 3xk on <= 3k-3 vertices
  bool unique_at_minimum = false;   // exactly one on 3k-2 vertices
  bool matches_generator = false;   // ... and it is minimal_torus_3k(k)
  std::vector<Face> witness;        // canonical form of the unique one

  bool verified() const { return none_below && unique_at_minimum && matches_generator; }
};

// Census check of the 3k-2 bound and uniqueness; OutOfRange when 3k-2 > kCensusMax.
MinimalTypeReport census_verify_theorem31(int k, const CensusOptions& options = {});

}  // namespace ktori
