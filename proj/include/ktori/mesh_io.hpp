#pragma once

// OFF / OBJ export of meshes, and OFF import.

#include <iosfwd>
#include <string>

#include "ktori/mesh.hpp"

namespace ktori {

enum class MeshFormat { Off, Obj };

// Coordinates are printed as decimals with `precision` digits after the
// point. OFF faces are 0-based, OBJ faces 1-based.
void export_mesh(std::ostream& out, const Mesh& mesh, MeshFormat format, int precision = 12);
void export_mesh(const std::string& path, const Mesh& mesh, MeshFormat format, int precision = 12);

// Decimal coordinates are read exactly. Throws ParseError or IoError.
Mesh import_off(std::istream& in);
Mesh import_off(const std::string& path);

}  // namespace ktori
