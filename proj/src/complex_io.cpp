#include "ktori/complex_io.hpp"

#include <fstream>
#include <sstream>

namespace ktori {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

ParsedComplex parse_complex(std::istream& in) {
  std::string line;
  int lineno = 0;
  int declared = -1;
  std::vector<Face> faces;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream ls(body);
    if (declared < 0) {
      if (!(ls >> declared) || declared <= 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected vertex count");
      continue;
    }
    Face f{};
    std::string extra;
    if (!(ls >> f[0] >> f[1] >> f[2]) || (ls >> extra))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected three integers");
    faces.push_back(f);
  }
  if (declared < 0) throw Error(ErrorCode::ParseError, "missing vertex count");
  CompactedFaces c = compact_labels(faces);
  const int n = static_cast<int>(c.original_label.size()) - 1;
  if (n != declared)
    throw Error(ErrorCode::ParseError, "declared " + std::to_string(declared) + " vertices, faces use " +
                                           std::to_string(n));
  bool relabeled = false;
  for (int i = 1; i <= n; ++i)
    if (c.original_label[i] != i) relabeled = true;
  return ParsedComplex{Triangulation(std::move(c.faces)), std::move(c.original_label), relabeled};
}

ParsedComplex read_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse_complex(in);
}

void write_complex(std::ostream& out, const Triangulation& t) {
  out << t.num_vertices() << "\n";
  for (const Face& f : t.faces()) out << f[0] << " " << f[1] << " " << f[2] << "\n";
}

void write_complex(const std::string& path, const Triangulation& t) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  write_complex(out, t);
}

}  // namespace ktori
