#include "wfsplit/wf_refine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wfsplit/error.hpp"

namespace wfsplit {

namespace {

Triangle3 face_triangle(const TetMesh& mesh, const FaceKey& key) {
  return {{mesh.vertices[key[0]], mesh.vertices[key[1]], mesh.vertices[key[2]]}};
}

[[noreturn]] void outside_face(const FaceKey& key, const std::string& why) {
  throw Error(ErrorCode::SplitPointOutsideFace, "split point of face (" + std::to_string(key[0]) + "," +
                                                    std::to_string(key[1]) + "," + std::to_string(key[2]) +
                                                    ") " + why);
}

}  // namespace

const SplitPointInfo* RefinementOutput::split_point(const FaceKey& key) const {
  const auto idx = parent_faces.find(key);
  return idx ? &split_points[*idx] : nullptr;
}

std::vector<TetGeometry> compute_geometry(const TetMesh& mesh) {
  std::vector<TetGeometry> out;
  out.reserve(mesh.tets.size());
  for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
    try {
      out.push_back(tet_geometry(mesh.corners(t)));
    } catch (const Error& e) {
      throw Error(e.code(), "tet " + std::to_string(t) + ": " + e.what());
    }
  }
  return out;
}

std::vector<SplitPointInfo> compute_split_points(const TetMesh& mesh, const FaceTable& faces,
                                                 const std::vector<TetGeometry>& geometry) {
  std::vector<SplitPointInfo> out;
  out.reserve(faces.size());
  for (const auto& rec : faces.faces()) {
    SplitPointInfo info;
    info.key = rec.key;
    const Triangle3 tri = face_triangle(mesh, rec.key);
    if (rec.boundary()) {
      info.kind = FaceKind::Boundary;
      info.point = tri.centroid();
      info.barycentric = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    } else {
      info.kind = FaceKind::Interior;
      const Point3 z1 = geometry[rec.tets[0]].incenter;
      const Point3 z2 = geometry[rec.tets[1]].incenter;
      SegmentHit hit;
      try {
        hit = segment_plane_intersection(z1, z2, Plane::through(tri.corners[0], tri.corners[1], tri.corners[2]));
      } catch (const Error&) {
        outside_face(rec.key, "is undefined: incenter segment does not cross the face plane");
      }
      info.point = hit.point;
      info.t = hit.t;
      info.barycentric = barycentric_in_triangle(hit.point, tri);
      const double worst = *std::min_element(info.barycentric.begin(), info.barycentric.end());
      if (worst < -kInsideTolerance) {
        outside_face(rec.key, "lies outside the face (barycentric " + std::to_string(worst) + ")");
      }
      for (double& l : info.barycentric) l = std::max(l, 0.0);
    }
    out.push_back(info);
  }
  return out;
}

RefinementOutput worsey_farin(const TetMesh& mesh) {
  RefinementOutput out;
  out.parent_faces = FaceTable::build(mesh);
  out.parent_geometry = compute_geometry(mesh);
  out.split_points = compute_split_points(mesh, out.parent_faces, out.parent_geometry);

  const auto nv = mesh.vertices.size();
  const auto nt = mesh.tets.size();
  const auto nf = out.parent_faces.size();
  auto& verts = out.refined.vertices;
  verts.reserve(nv + nt + nf);
  verts = mesh.vertices;
  out.incenters.resize(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    out.incenters[t] = static_cast<VertexId>(verts.size());
    verts.push_back(out.parent_geometry[t].incenter);
  }
  out.split_vertices.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    out.split_vertices[f] = static_cast<VertexId>(verts.size());
    verts.push_back(out.split_points[f].point);
  }

  auto& children = out.refined.tets;
  children.reserve(12 * nt);
  out.parent_of.reserve(12 * nt);
  for (std::size_t t = 0; t < nt; ++t) {
    const Tet& parent = mesh.tets[t];
    const VertexId z = out.incenters[t];
    for (int lf = 0; lf < 4; ++lf) {
      const auto& fv = kFaceVertices[static_cast<std::size_t>(lf)];
      const std::array<VertexId, 3> corner{parent[static_cast<std::size_t>(fv[0])],
                                           parent[static_cast<std::size_t>(fv[1])],
                                           parent[static_cast<std::size_t>(fv[2])]};
      const std::size_t face = out.parent_faces.face_of(t, lf);
      const VertexId m = out.split_vertices[face];
      for (std::size_t e = 0; e < 3; ++e) {
        const VertexId a = corner[e];
        const VertexId b = corner[(e + 1) % 3];
        Tet child{a, b, m, z};
        if (signed_volume(verts[a], verts[b], verts[m], verts[z]) < 0.0) std::swap(child[2], child[3]);
        children.push_back(child);
        out.parent_of.push_back({static_cast<TetIndex>(t), out.parent_faces[face].key, {a, b}});
      }
    }
  }
  out.root_parent.resize(children.size());
  for (std::size_t c = 0; c < children.size(); ++c) out.root_parent[c] = out.parent_of[c].parent;
  out.levels = 1;
  return out;
}

RefinementOutput refine_k(const TetMesh& mesh, int levels) {
  if (levels < 1) throw Error(ErrorCode::InvalidArgument, "refinement levels must be >= 1");
  RefinementOutput out = worsey_farin(mesh);
  for (int level = 2; level <= levels; ++level) {
    RefinementOutput next = worsey_farin(out.refined);
    for (std::size_t c = 0; c < next.root_parent.size(); ++c) {
      next.root_parent[c] = out.root_parent[next.parent_of[c].parent];
    }
    next.levels = level;
    out = std::move(next);
  }
  return out;
}

double volume_conservation_residual(const TetMesh& original, const RefinementOutput& out) {
  std::vector<double> sums(original.tets.size(), 0.0);
  for (std::size_t c = 0; c < out.refined.tets.size(); ++c) {
    sums[out.root_parent[c]] += std::abs(out.refined.signed_volume(c));
  }
  double worst = 0.0;
  for (std::size_t t = 0; t < original.tets.size(); ++t) {
    const double vol = std::abs(original.signed_volume(t));
    worst = std::max(worst, std::abs(sums[t] - vol) / vol);
  }
  return worst;
}

}  // namespace wfsplit
