#pragma once

#include <array>
#include <optional>
#include <vector>

#include "wfsplit/geometry.hpp"
#include "wfsplit/tet_mesh.hpp"

namespace wfsplit {

enum class FaceKind { Interior, Boundary };

struct SplitPointInfo {
  FaceKey key{};
  Point3 point;
  FaceKind kind = FaceKind::Boundary;
  /// Interior faces: point = z_1 + t (z_2 - z_1), z_i the incenters of the
  /// first and second incident tet in the face record.
  std::optional<double> t;
  std::array<double, 3> barycentric{};  // w.r.t. key order, clamped at 0
};

struct ChildOrigin {
  TetIndex parent = 0;
  FaceKey face{};
  std::array<VertexId, 2> edge{};
};

struct RefinementOutput {
  TetMesh refined;
  FaceTable parent_faces;
  std::vector<TetGeometry> parent_geometry;
  /// Parallel to parent_faces.faces().
  std::vector<SplitPointInfo> split_points;
  /// Refined-mesh vertex holding each parent's incenter.
  std::vector<VertexId> incenters;
  /// Refined-mesh vertex holding each face's split point.
  std::vector<VertexId> split_vertices;
  /// Provenance relative to the mesh this level was refined from.
  std::vector<ChildOrigin> parent_of;
  /// Index of the tet in the original input each child descends from. Same
  /// as parent_of[i].parent after one level.
  std::vector<TetIndex> root_parent;
  int levels = 1;

  const SplitPointInfo* split_point(const FaceKey& key) const;
};

std::vector<TetGeometry> compute_geometry(const TetMesh& mesh);

/// Interior faces: the crossing of the incenter segment with the face.
/// Boundary faces: the barycenter. Throws SplitPointOutsideFace if roundoff
/// puts a point outside its face by more than 1e-12 in barycentric terms.
std::vector<SplitPointInfo> compute_split_points(const TetMesh& mesh, const FaceTable& faces,
                                                 const std::vector<TetGeometry>& geometry);

/// One Worsey-Farin level: 12 children per tet, ordered by
/// (parent, local face, local edge). Refined vertices are the input
/// vertices, then one incenter per tet, then one split point per face.
RefinementOutput worsey_farin(const TetMesh& mesh);

/// Applies worsey_farin `levels` times. Split points and parent data in the
/// result describe the last level.
RefinementOutput refine_k(const TetMesh& mesh, int levels);

/// Largest relative per-root-parent volume mismatch between original tets
/// and the union of their descendants.
double volume_conservation_residual(const TetMesh& original, const RefinementOutput& out);

}  // namespace wfsplit
