#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfsplit/geometry.hpp"

namespace wfsplit {

using VertexId = std::uint32_t;
using TetIndex = std::uint32_t;
using Tet = std::array<VertexId, 4>;

/// Sorted vertex triple identifying a face independent of orientation.
using FaceKey = std::array<VertexId, 3>;

FaceKey make_face_key(VertexId a, VertexId b, VertexId c);

struct TetMesh {
  std::vector<Point3> vertices;
  std::vector<Tet> tets;

  std::array<Point3, 4> corners(std::size_t tet) const;
  double signed_volume(std::size_t tet) const;

  friend bool operator==(const TetMesh&, const TetMesh&) = default;
};

struct FaceRecord {
  FaceKey key{};
  std::array<TetIndex, 2> tets{};
  std::array<std::uint8_t, 2> local{};  // local face id inside each tet
  std::uint8_t count = 0;

  bool boundary() const { return count == 1; }
};

/// Face adjacency: every distinct face once, sorted by key, plus a
/// per-tet lookup of the face index behind each local face.
class FaceTable {
 public:
  /// Throws IndexOutOfRange for bad connectivity, NonManifold when a face
  /// is shared by three or more tets.
  static FaceTable build(const TetMesh& mesh);

  const std::vector<FaceRecord>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  const FaceRecord& operator[](std::size_t i) const { return faces_[i]; }

  std::size_t face_of(std::size_t tet, int local) const {
    return tet_faces_[tet][static_cast<std::size_t>(local)];
  }
  std::optional<std::size_t> find(const FaceKey& key) const;

  std::size_t interior_count() const { return interior_; }
  std::size_t boundary_count() const { return faces_.size() - interior_; }

 private:
  std::vector<FaceRecord> faces_;
  std::vector<std::array<std::uint32_t, 4>> tet_faces_;
  std::size_t interior_ = 0;
};

struct ValidationReport {
  bool indices_ok = true;
  std::vector<TetIndex> orientation_fixes;  // tets with negative volume
  std::vector<TetIndex> degenerate;
  std::vector<FaceKey> nonmanifold_faces;
  /// Vertices lying on a boundary face that does not own them, i.e.
  /// hanging nodes.
  std::vector<std::pair<FaceKey, VertexId>> hanging;
  std::string message;  // first failure, empty when ok()

  bool conforming() const { return nonmanifold_faces.empty() && hanging.empty(); }
  bool ok() const { return indices_ok && degenerate.empty() && conforming(); }
};

/// Checks indices, orientation, degeneracy and conformity. Does not modify
/// the mesh; orientation_fixes lists what canonicalize_orientation would do.
ValidationReport validate(const TetMesh& mesh);

/// Swaps the last two indices of every negatively oriented tet. Returns the
/// number of tets touched.
std::size_t canonicalize_orientation(TetMesh& mesh);

}  // namespace wfsplit
