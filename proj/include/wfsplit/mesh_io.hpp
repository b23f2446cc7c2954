#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wfsplit/tet_mesh.hpp"

namespace wfsplit {

// .tmesh: "nv nt", then nv lines "x y z" in shortest round-trip decimal,
// then nt lines of four 0-based vertex indices.
TetMesh read_tmesh(std::string_view text);
std::string write_tmesh(const TetMesh& mesh);

TetMesh load_tmesh(const std::filesystem::path& path);
void save_tmesh(const TetMesh& mesh, const std::filesystem::path& path);

/// Legacy ASCII VTK unstructured grid, cell type 10.
std::string write_vtk_legacy(const TetMesh& mesh);
void save_vtk_legacy(const TetMesh& mesh, const std::filesystem::path& path);

struct MshImport {
  TetMesh mesh;
  std::vector<std::string> warnings;
};

/// Gmsh MSH 2.2 ASCII. Only type-4 elements are kept; nodes that no
/// tetrahedron references are dropped and the rest renumbered in file order.
MshImport read_msh_ascii(std::string_view text);
MshImport load_msh(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Shortest decimal that parses back to the same double.
std::string format_shortest(double value);

}  // namespace wfsplit
