#pragma once

// Plain-text complex format: first non-comment line is the vertex count n,
// then one face per line as three integers. '#' starts a comment.

#include <iosfwd>
#include <string>

#include "ktori/complex.hpp"

namespace ktori {

struct ParsedComplex {
  Triangulation complex;
  // original_label[new] when input labels were sparse; identity otherwise.
  std::vector<Vertex> original_label;
  bool relabeled = false;
};

ParsedComplex parse_complex(std::istream& in);
ParsedComplex read_complex(const std::string& path);

void write_complex(std::ostream& out, const Triangulation& t);
void write_complex(const std::string& path, const Triangulation& t);

}  // namespace ktori
