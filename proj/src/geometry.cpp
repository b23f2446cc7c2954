#include "wfsplit/geometry.hpp"

#include <algorithm>
#include <string>

#include "wfsplit/error.hpp"

namespace wfsplit {

Plane Plane::through(Point3 a, Point3 b, Point3 c) {
  Point3 n = cross(b - a, c - a);
  const double len = norm(n);
  if (!(len > 0.0)) {
    throw Error(ErrorCode::DegenerateTriangle, "plane through collinear points");
  }
  n = n / len;
  return {n, -dot(n, a)};
}

double Triangle3::diameter() const {
  return std::max({distance(corners[0], corners[1]), distance(corners[1], corners[2]),
                   distance(corners[2], corners[0])});
}

std::array<int, 2> faces_at_edge(int edge) {
  const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(edge)];
  std::array<int, 2> out{};
  int n = 0;
  for (int v = 0; v < 4; ++v) {
    if (v != i && v != j) out[static_cast<std::size_t>(n++)] = v;
  }
  return out;
}

Triangle3 TetGeometry::face(int i) const {
  const auto& f = kFaceVertices[static_cast<std::size_t>(i)];
  return {{vertices[static_cast<std::size_t>(f[0])], vertices[static_cast<std::size_t>(f[1])],
           vertices[static_cast<std::size_t>(f[2])]}};
}

double signed_volume(Point3 a, Point3 b, Point3 c, Point3 d) {
  return dot(b - a, cross(c - a, d - a)) / 6.0;
}

double triangle_area(const Triangle3& t) {
  return 0.5 * norm(cross(t.corners[1] - t.corners[0], t.corners[2] - t.corners[0]));
}

double longest_edge(Point3 a, Point3 b, Point3 c, Point3 d) {
  return std::max({distance(a, b), distance(a, c), distance(a, d), distance(b, c),
                   distance(b, d), distance(c, d)});
}

TetGeometry tet_geometry(Point3 a, Point3 b, Point3 c, Point3 d) {
  TetGeometry g;
  g.vertices = {a, b, c, d};
  for (const auto& v : g.vertices) {
    if (!v.finite()) throw Error(ErrorCode::DegenerateTet, "non-finite vertex coordinate");
  }
  g.diameter = longest_edge(a, b, c, d);
  const double vol = signed_volume(a, b, c, d);
  if (!(std::abs(vol) > kDegenerateVolumeFactor * g.diameter * g.diameter * g.diameter)) {
    throw Error(ErrorCode::DegenerateTet,
                "degenerate tetrahedron (volume " + std::to_string(vol) + ")");
  }
  g.volume = std::abs(vol);

  double area_sum = 0.0;
  Point3 weighted;
  for (int i = 0; i < 4; ++i) {
    const auto fi = static_cast<std::size_t>(i);
    const auto& f = kFaceVertices[fi];
    const Point3 p0 = g.vertices[static_cast<std::size_t>(f[0])];
    const Point3 p1 = g.vertices[static_cast<std::size_t>(f[1])];
    const Point3 p2 = g.vertices[static_cast<std::size_t>(f[2])];
    Point3 n = cross(p1 - p0, p2 - p0);
    const double len = norm(n);
    g.face_areas[fi] = 0.5 * len;
    n = n / len;
    if (dot(n, g.vertices[fi] - p0) > 0.0) n = -1.0 * n;
    g.face_planes[fi] = {n, -dot(n, p0)};
    area_sum += g.face_areas[fi];
    weighted = weighted + g.face_areas[fi] * g.vertices[fi];
  }
  g.insphere_diameter = 6.0 * g.volume / area_sum;
  g.incenter = weighted / area_sum;
  for (std::size_t i = 0; i < 4; ++i) {
    g.face_touch_points[i] = project_to_plane(g.incenter, g.face_planes[i]);
  }
  for (int e = 0; e < 6; ++e) {
    const auto [f0, f1] = faces_at_edge(e);
    const Point3 n0 = g.face_planes[static_cast<std::size_t>(f0)].normal;
    const Point3 n1 = g.face_planes[static_cast<std::size_t>(f1)].normal;
    const auto ei = static_cast<std::size_t>(e);
    g.dihedral_cos[ei] = -dot(n0, n1);
    g.dihedral_sin[ei] = norm(cross(n0, n1));
    g.dihedral_angles[ei] = std::atan2(g.dihedral_sin[ei], g.dihedral_cos[ei]);
  }
  return g;
}

TetGeometry tet_geometry(const std::array<Point3, 4>& v) {
  return tet_geometry(v[0], v[1], v[2], v[3]);
}

Point3 project_to_plane(Point3 p, const Plane& plane) {
  return p - plane.signed_distance(p) * plane.normal;
}

std::array<double, 3> barycentric_in_triangle(Point3 p, const Triangle3& t) {
  const auto& [a, b, c] = t.corners;
  const Point3 n = cross(b - a, c - a);
  const double n2 = dot(n, n);
  const double diam = t.diameter();
  if (!(n2 > 0.0) || std::sqrt(n2) <= 1e-14 * diam * diam) {
    throw Error(ErrorCode::DegenerateTriangle, "degenerate triangle");
  }
  const double off_plane = dot(p - a, n) / std::sqrt(n2);
  if (std::abs(off_plane) > kInPlaneFactor * diam) {
    throw Error(ErrorCode::NotInPlane, "point is not in the plane of the triangle");
  }
  const double la = dot(cross(b - p, c - p), n) / n2;
  const double lb = dot(cross(c - p, a - p), n) / n2;
  return {la, lb, 1.0 - la - lb};
}

double dist_to_line(Point3 p, Point3 a, Point3 b) {
  const Point3 d = b - a;
  return norm(cross(p - a, d)) / norm(d);
}

double dist_to_triangle_boundary(Point3 p, const Triangle3& t) {
  const auto lambda = barycentric_in_triangle(p, t);
  if (*std::min_element(lambda.begin(), lambda.end()) < -kInsideTolerance) {
    throw Error(ErrorCode::Outside, "point lies outside the triangle");
  }
  const auto& [a, b, c] = t.corners;
  return std::min({dist_to_line(p, a, b), dist_to_line(p, b, c), dist_to_line(p, c, a)});
}

SegmentHit segment_plane_intersection(Point3 p1, Point3 p2, const Plane& plane) {
  const double d1 = plane.signed_distance(p1);
  const double d2 = plane.signed_distance(p2);
  const double tol = 1e-12 * distance(p1, p2);
  if (!(std::abs(d1) > tol) || !(std::abs(d2) > tol) || (d1 > 0.0) == (d2 > 0.0)) {
    throw Error(ErrorCode::NoCrossing, "segment does not cross the plane");
  }
  const double t = std::abs(d1) / (std::abs(d1) + std::abs(d2));
  return {p1 + t * (p2 - p1), t};
}

}  // namespace wfsplit
