#pragma once

#include <array>
#include <cmath>
#include <utility>

namespace wfsplit {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Point3 operator*(Point3 a, double s) { return s * a; }
  friend constexpr Point3 operator/(Point3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
  friend constexpr bool operator==(Point3, Point3) = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }

/// Oriented plane {p : dot(normal, p) + offset = 0} with unit normal, so
/// signed_distance is a true Euclidean distance.
struct Plane {
  Point3 normal;
  double offset = 0.0;

  /// Plane through three points, normal along (b-a) x (c-a).
  static Plane through(Point3 a, Point3 b, Point3 c);

  double signed_distance(Point3 p) const { return dot(normal, p) + offset; }
};

struct Triangle3 {
  std::array<Point3, 3> corners;

  Point3 centroid() const { return (corners[0] + corners[1] + corners[2]) / 3.0; }
  double diameter() const;
};

// Tolerances shared by the refinement and verification code.
inline constexpr double kDegenerateVolumeFactor = 1e-14;  // |V| <= f * h^3
inline constexpr double kInPlaneFactor = 1e-9;             // |dist| <= f * diam
inline constexpr double kInsideTolerance = 1e-12;          // barycentric slack

/// Local numbering: vertex i is opposite face i; edge k joins
/// kEdgeVertices[k], and the two faces meeting there are the faces opposite
/// the remaining two vertices.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<std::array<int, 3>, 4> kFaceVertices{
    {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};

std::array<int, 2> faces_at_edge(int edge);

/// Derived geometry of one tetrahedron. Face i is opposite vertex i.
struct TetGeometry {
  std::array<Point3, 4> vertices;
  double volume = 0.0;
  std::array<double, 4> face_areas{};
  std::array<Plane, 4> face_planes{};  // outward unit normals
  double diameter = 0.0;               // h_T, longest edge
  double insphere_diameter = 0.0;      // rho_T = 6|T| / sum |F|
  Point3 incenter;
  std::array<Point3, 4> face_touch_points{};
  std::array<double, 6> dihedral_angles{};  // interior, in (0, pi)
  std::array<double, 6> dihedral_cos{};
  std::array<double, 6> dihedral_sin{};

  double aspect_ratio() const { return diameter / insphere_diameter; }
  Triangle3 face(int i) const;
  /// Face plane, guaranteed to pass through the face's vertices.
  Plane face_plane(int i) const { return face_planes[static_cast<std::size_t>(i)]; }
};

double signed_volume(Point3 a, Point3 b, Point3 c, Point3 d);
double triangle_area(const Triangle3& t);
double longest_edge(Point3 a, Point3 b, Point3 c, Point3 d);

/// Throws DegenerateTet when |volume| <= 1e-14 * h^3. Either orientation is
/// accepted; face normals always point out of the tetrahedron.
TetGeometry tet_geometry(Point3 a, Point3 b, Point3 c, Point3 d);
TetGeometry tet_geometry(const std::array<Point3, 4>& v);

Point3 project_to_plane(Point3 p, const Plane& plane);

/// Barycentric coordinates of p (after projection into the plane of t).
/// Throws DegenerateTriangle for a zero-area triangle, NotInPlane if p sits
/// further than 1e-9 * diam from the plane.
std::array<double, 3> barycentric_in_triangle(Point3 p, const Triangle3& t);

/// Minimum distance from an in-triangle point to the three edge lines.
/// Throws NotInPlane or Outside.
double dist_to_triangle_boundary(Point3 p, const Triangle3& t);

/// Distance from p to the infinite line through a and b.
double dist_to_line(Point3 p, Point3 a, Point3 b);

struct SegmentHit {
  Point3 point;
  double t = 0.0;  // point = p1 + t (p2 - p1), t in (0, 1)
};

/// Throws NoCrossing unless p1 and p2 are strictly on opposite sides.
SegmentHit segment_plane_intersection(Point3 p1, Point3 p2, const Plane& plane);

}  // namespace wfsplit
