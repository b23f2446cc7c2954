#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "wfsplit/tet_mesh.hpp"

namespace wfsplit {

enum class Family {
  CubeKuhn,
  PerturbedCube,
  Sliver,
  TwoTetMirror,
  TwoTetSkew,
  RegularTet,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);

struct GenSpec {
  Family family = Family::CubeKuhn;
  int n = 1;             // cells per cube side
  double sigma = 0.0;    // perturbation, fraction of local edge length
  double eps = 1.0;      // sliver height / skew offset
  std::uint64_t seed = 0;
};

/// Unit cube, n^3 cells, six Kuhn tets per cell around the main diagonal.
TetMesh gen_cube_kuhn(int n);

/// Moves interior vertices by a seeded uniform offset in
/// [-sigma*l, sigma*l]^3, l the shortest incident edge. Offsets that would
/// invert or flatten an incident tet are redrawn, up to 100 times.
TetMesh perturb(const TetMesh& mesh, double sigma, std::uint64_t seed);

/// Single tet (0,0,0),(1,0,0),(0,1,0),(1/3,1/3,eps).
TetMesh gen_sliver(double eps);

/// Two unit regular tets glued on an equilateral face in the z = 0 plane.
TetMesh gen_two_tet_mirror();
/// As gen_two_tet_mirror with the lower apex shifted by offset along x.
TetMesh gen_two_tet_skew(double offset);

/// Regular tet with unit edges.
TetMesh gen_regular_tet();

/// Dispatches on spec.family. Throws InvalidArgument if n < 1, sigma
/// outside [0, 0.5) or eps <= 0.
TetMesh generate(const GenSpec& spec);

}  // namespace wfsplit
