#include "wfsplit/tet_mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "wfsplit/error.hpp"

namespace wfsplit {

namespace {

struct FaceEntry {
  FaceKey key;
  TetIndex tet;
  std::uint8_t local;

  friend bool operator<(const FaceEntry& a, const FaceEntry& b) {
    return std::tie(a.key, a.tet, a.local) < std::tie(b.key, b.tet, b.local);
  }
};

std::string key_string(const FaceKey& k) {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

// Empty string when connectivity is usable.
std::string check_indices(const TetMesh& mesh) {
  const auto nv = mesh.vertices.size();
  for (std::size_t v = 0; v < nv; ++v) {
    if (!mesh.vertices[v].finite()) return "vertex " + std::to_string(v) + " is not finite";
  }
  for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
    const auto& tet = mesh.tets[t];
    for (int i = 0; i < 4; ++i) {
      if (tet[static_cast<std::size_t>(i)] >= nv) {
        return "tet " + std::to_string(t) + " references vertex " +
               std::to_string(tet[static_cast<std::size_t>(i)]) + " of " + std::to_string(nv);
      }
      for (int j = 0; j < i; ++j) {
        if (tet[static_cast<std::size_t>(i)] == tet[static_cast<std::size_t>(j)]) {
          return "tet " + std::to_string(t) + " repeats a vertex";
        }
      }
    }
  }
  return {};
}

std::vector<FaceEntry> sorted_face_entries(const TetMesh& mesh) {
  std::vector<FaceEntry> entries;
  entries.reserve(4 * mesh.tets.size());
  for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
    const auto& tet = mesh.tets[t];
    for (int f = 0; f < 4; ++f) {
      const auto& lv = kFaceVertices[static_cast<std::size_t>(f)];
      entries.push_back({make_face_key(tet[static_cast<std::size_t>(lv[0])],
                                       tet[static_cast<std::size_t>(lv[1])],
                                       tet[static_cast<std::size_t>(lv[2])]),
                         static_cast<TetIndex>(t), static_cast<std::uint8_t>(f)});
    }
  }
  std::sort(entries.begin(), entries.end());
  return entries;
}

// Uniform bucket grid over the referenced vertices.
class VertexGrid {
 public:
  VertexGrid(const TetMesh& mesh, const std::vector<VertexId>& ids) {
    lo_ = hi_ = ids.empty() ? Point3{} : mesh.vertices[ids.front()];
    for (VertexId v : ids) {
      const Point3 p = mesh.vertices[v];
      lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y), std::min(lo_.z, p.z)};
      hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y), std::max(hi_.z, p.z)};
    }
    const Point3 ext = hi_ - lo_;
    const double extent = std::max({ext.x, ext.y, ext.z, 1e-300});
    const double per_side = std::max(1.0, std::cbrt(static_cast<double>(ids.size())));
    cell_ = extent / per_side;
    for (int a = 0; a < 3; ++a) {
      const double e = a == 0 ? ext.x : a == 1 ? ext.y : ext.z;
      dims_[static_cast<std::size_t>(a)] = std::max(1, static_cast<int>(e / cell_) + 1);
    }
    const std::size_t ncell = static_cast<std::size_t>(dims_[0]) * static_cast<std::size_t>(dims_[1]) *
                              static_cast<std::size_t>(dims_[2]);
    start_.assign(ncell + 1, 0);
    for (VertexId v : ids) ++start_[cell_index(cell_of(mesh.vertices[v])) + 1];
    for (std::size_t c = 0; c < ncell; ++c) start_[c + 1] += start_[c];
    items_.resize(ids.size());
    auto fill = start_;
    for (VertexId v : ids) items_[fill[cell_index(cell_of(mesh.vertices[v]))]++] = v;
  }

  template <class Fn>
  void for_each_in_box(Point3 lo, Point3 hi, Fn&& fn) const {
    const auto a = cell_of(lo);
    const auto b = cell_of(hi);
    for (int k = a[2]; k <= b[2]; ++k)
      for (int j = a[1]; j <= b[1]; ++j)
        for (int i = a[0]; i <= b[0]; ++i) {
          const std::size_t c = cell_index({i, j, k});
          for (std::size_t s = start_[c]; s < start_[c + 1]; ++s) fn(items_[s]);
        }
  }

 private:
  std::array<int, 3> cell_of(Point3 p) const {
    auto clampi = [&](double v, double lo, int n) {
      const int i = static_cast<int>(std::floor((v - lo) / cell_));
      return std::clamp(i, 0, n - 1);
    };
    return {clampi(p.x, lo_.x, dims_[0]), clampi(p.y, lo_.y, dims_[1]), clampi(p.z, lo_.z, dims_[2])};
  }
  std::size_t cell_index(std::array<int, 3> c) const {
    return (static_cast<std::size_t>(c[2]) * static_cast<std::size_t>(dims_[1]) +
            static_cast<std::size_t>(c[1])) *
               static_cast<std::size_t>(dims_[0]) +
           static_cast<std::size_t>(c[0]);
  }

  Point3 lo_, hi_;
  double cell_ = 1.0;
  std::array<int, 3> dims_{1, 1, 1};
  std::vector<std::size_t> start_;
  std::vector<VertexId> items_;
};

}  // namespace

FaceKey make_face_key(VertexId a, VertexId b, VertexId c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c};
}

std::array<Point3, 4> TetMesh::corners(std::size_t tet) const {
  const auto& t = tets[tet];
  return {vertices[t[0]], vertices[t[1]], vertices[t[2]], vertices[t[3]]};
}

double TetMesh::signed_volume(std::size_t tet) const {
  const auto c = corners(tet);
  return wfsplit::signed_volume(c[0], c[1], c[2], c[3]);
}

FaceTable FaceTable::build(const TetMesh& mesh) {
  if (auto msg = check_indices(mesh); !msg.empty()) {
    throw Error(ErrorCode::IndexOutOfRange, msg);
  }
  const auto entries = sorted_face_entries(mesh);

  FaceTable table;
  table.tet_faces_.resize(mesh.tets.size());
  table.faces_.reserve(entries.size() / 2 + 8);
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].key == entries[i].key) ++j;
    if (j - i > 2) {
      throw Error(ErrorCode::NonManifold, "face " + key_string(entries[i].key) + " is shared by " +
                                              std::to_string(j - i) + " tetrahedra");
    }
    FaceRecord rec;
    rec.key = entries[i].key;
    rec.count = static_cast<std::uint8_t>(j - i);
    const auto index = static_cast<std::uint32_t>(table.faces_.size());
    for (std::size_t s = i; s < j; ++s) {
      rec.tets[s - i] = entries[s].tet;
      rec.local[s - i] = entries[s].local;
      table.tet_faces_[entries[s].tet][entries[s].local] = index;
    }
    if (rec.count == 2) ++table.interior_;
    table.faces_.push_back(rec);
    i = j;
  }
  return table;
}

std::optional<std::size_t> FaceTable::find(const FaceKey& key) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), key,
                             [](const FaceRecord& r, const FaceKey& k) { return r.key < k; });
  if (it == faces_.end() || it->key != key) return std::nullopt;
  return static_cast<std::size_t>(it - faces_.begin());
}

ValidationReport validate(const TetMesh& mesh) {
  ValidationReport report;
  if (auto msg = check_indices(mesh); !msg.empty()) {
    report.indices_ok = false;
    report.message = msg;
    return report;
  }

  for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
    const auto c = mesh.corners(t);
    const double vol = wfsplit::signed_volume(c[0], c[1], c[2], c[3]);
    const double h = longest_edge(c[0], c[1], c[2], c[3]);
    if (!(std::abs(vol) > kDegenerateVolumeFactor * h * h * h)) {
      report.degenerate.push_back(static_cast<TetIndex>(t));
    } else if (vol < 0.0) {
      report.orientation_fixes.push_back(static_cast<TetIndex>(t));
    }
  }

  const auto entries = sorted_face_entries(mesh);
  std::vector<FaceKey> boundary;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].key == entries[i].key) ++j;
    if (j - i > 2) report.nonmanifold_faces.push_back(entries[i].key);
    if (j - i == 1) boundary.push_back(entries[i].key);
    i = j;
  }

  // A vertex sitting on a boundary face it does not belong to means the
  // neighbor across that face was split without this side: a hanging node.
  std::vector<VertexId> used;
  used.reserve(4 * mesh.tets.size());
  for (const auto& t : mesh.tets) used.insert(used.end(), t.begin(), t.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (!boundary.empty()) {
    const VertexGrid grid(mesh, used);
    for (const auto& key : boundary) {
      const Triangle3 tri{{mesh.vertices[key[0]], mesh.vertices[key[1]], mesh.vertices[key[2]]}};
      const double diam = tri.diameter();
      const double tol = kInPlaneFactor * diam;
      Point3 lo = tri.corners[0], hi = tri.corners[0];
      for (const auto& p : tri.corners) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
      }
      lo = lo - Point3{tol, tol, tol};
      hi = hi + Point3{tol, tol, tol};
      const Point3 n = cross(tri.corners[1] - tri.corners[0], tri.corners[2] - tri.corners[0]);
      const double n2 = dot(n, n);
      if (!(n2 > 0.0)) continue;  // flagged as degenerate already
      grid.for_each_in_box(lo, hi, [&](VertexId v) {
        if (v == key[0] || v == key[1] || v == key[2]) return;
        const Point3 p = mesh.vertices[v];
        if (std::abs(dot(p - tri.corners[0], n)) / std::sqrt(n2) > tol) return;
        const double la = dot(cross(tri.corners[1] - p, tri.corners[2] - p), n) / n2;
        const double lb = dot(cross(tri.corners[2] - p, tri.corners[0] - p), n) / n2;
        const double lc = 1.0 - la - lb;
        if (std::min({la, lb, lc}) >= -1e-9) report.hanging.emplace_back(key, v);
      });
    }
  }

  if (!report.degenerate.empty()) {
    report.message = "tet " + std::to_string(report.degenerate.front()) + " is degenerate";
  } else if (!report.nonmanifold_faces.empty()) {
    report.message = "face " + key_string(report.nonmanifold_faces.front()) +
                     " is shared by more than two tetrahedra";
  } else if (!report.hanging.empty()) {
    report.message = "hanging node: vertex " + std::to_string(report.hanging.front().second) +
                     " lies on boundary face " + key_string(report.hanging.front().first);
  }
  return report;
}

std::size_t canonicalize_orientation(TetMesh& mesh) {
  std::size_t fixes = 0;
  for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
    if (mesh.signed_volume(t) < 0.0) {
      std::swap(mesh.tets[t][2], mesh.tets[t][3]);
      ++fixes;
    }
  }
  return fixes;
}

}  // namespace wfsplit
