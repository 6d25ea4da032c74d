#include "ktori/stick_knot.hpp"

#include <fstream>
#include <sstream>

#include "ktori/error.hpp"
#include "ktori/predicates.hpp"

namespace ktori {

void validate_knot(const StickKnot& knot) {
  const int k = knot.k();
  if (k < 3) throw Error(ErrorCode::DegenerateKnot, "a knot needs at least 3 vertices, got " + std::to_string(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (knot.at(i) == knot.at(j))
        throw Error(ErrorCode::DegenerateKnot,
                    "vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  for (int i = 0; i < k; ++i)
    if (collinear(knot.at(i - 1), knot.at(i), knot.at(i + 1)))
      throw Error(ErrorCode::DegenerateKnot, "edges at vertex " + std::to_string(i + 1) + " are collinear");
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (segment_distance2(knot.at(i), knot.at(i + 1), knot.at(j), knot.at(j + 1)) == 0)
        throw Error(ErrorCode::DegenerateKnot,
                    "edges " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " intersect");
    }
}

bool in_general_position(const StickKnot& knot) {
  const int k = knot.k();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c) {
        if (collinear(knot.at(a), knot.at(b), knot.at(c))) return false;
        for (int d = c + 1; d < k; ++d)
          if (orient3d(knot.at(a), knot.at(b), knot.at(c), knot.at(d)) == 0) return false;
      }
  return true;
}

StickKnot parse_stick_knot(std::istream& in) {
  StickKnot knot;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 3)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 3 coordinates");
    try {
      knot.vertices.emplace_back(parse_rational(tok[0]), parse_rational(tok[1]), parse_rational(tok[2]));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate_knot(knot);
  return knot;
}

StickKnot load_stick_knot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse_stick_knot(in);
}

void save_stick_knot(const StickKnot& knot, std::ostream& out) {
  for (const auto& p : knot.vertices) out << p.x.get_str() << ' ' << p.y.get_str() << ' ' << p.z.get_str() << '\n';
}

void save_stick_knot(const StickKnot& knot, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  save_stick_knot(knot, out);
}

StickKnot scaled(const StickKnot& knot, const Q& factor) {
  StickKnot out;
  for (const auto& p : knot.vertices) out.vertices.push_back(factor * p);
  return out;
}

}  // namespace ktori
