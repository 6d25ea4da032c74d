#include "ktori/mesh_io.hpp"

#include <fstream>
#include <sstream>

#include "ktori/error.hpp"

namespace ktori {

void export_mesh(std::ostream& out, const Mesh& mesh, MeshFormat format, int precision) {
  auto coord = [&](const Point3& p) {
    return to_decimal(p.x, precision) + " " + to_decimal(p.y, precision) + " " + to_decimal(p.z, precision);
  };
  const auto& faces = mesh.complex.faces();
  if (format == MeshFormat::Off) {
    out << "OFF\n" << mesh.coords.size() << " " << faces.size() << " 0\n";
    for (const auto& p : mesh.coords) out << coord(p) << "\n";
    for (const Face& f : faces) out << "3 " << f[0] - 1 << " " << f[1] - 1 << " " << f[2] - 1 << "\n";
  } else {
    if (!mesh.provenance.construction.empty()) out << "# " << mesh.provenance.construction << "\n";
    for (const auto& p : mesh.coords) out << "v " << coord(p) << "\n";
    for (const Face& f : faces) out << "f " << f[0] << " " << f[1] << " " << f[2] << "\n";
  }
}

void export_mesh(const std::string& path, const Mesh& mesh, MeshFormat format, int precision) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  export_mesh(out, mesh, format, precision);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

namespace {

// Next line that is neither blank nor a comment.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Mesh import_off(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) fail(lineno, "empty input");
  std::istringstream header(line);
  std::string magic;
  header >> magic;
  if (magic != "OFF") fail(lineno, "expected OFF header");
  long nv = -1, nf = -1, ne = 0;
  if (!(header >> nv)) {
    if (!next_line(in, line, lineno)) fail(lineno, "missing counts");
    header = std::istringstream(line);
    header >> nv;
  }
  if (!(header >> nf >> ne) || nv < 0 || nf < 0) fail(lineno, "bad counts line");

  std::vector<Point3> coords;
  for (long i = 0; i < nv; ++i) {
    if (!next_line(in, line, lineno)) fail(lineno, "missing vertex line");
    std::istringstream ls(line);
    std::string a, b, c;
    if (!(ls >> a >> b >> c)) fail(lineno, "expected three coordinates");
    try {
      coords.push_back({parse_rational(a), parse_rational(b), parse_rational(c)});
    } catch (const Error& e) {
      fail(lineno, e.what());
    }
  }
  std::vector<Face> faces;
  for (long i = 0; i < nf; ++i) {
    if (!next_line(in, line, lineno)) fail(lineno, "missing face line");
    std::istringstream ls(line);
    long count = 0, a = 0, b = 0, c = 0;
    if (!(ls >> count >> a >> b >> c) || count != 3) fail(lineno, "only triangles are supported");
    for (long x : {a, b, c})
      if (x < 0 || x >= nv) fail(lineno, "vertex index out of range");
    faces.push_back({static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1), static_cast<Vertex>(c + 1)});
  }
  Mesh mesh{std::move(coords), Triangulation(std::move(faces)), {}};
  mesh.provenance.construction = "import";
  return mesh;
}

Mesh import_off(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return import_off(in);
}

}  // namespace ktori
