#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "wfsplit/error.hpp"
#include "wfsplit/geometry.hpp"

using namespace wfsplit;

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::array<Point3, 4> regular() {
  return {Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0.5, kSqrt3 / 2, 0},
          Point3{0.5, kSqrt3 / 6, std::sqrt(2.0 / 3.0)}};
}

std::array<Point3, 4> kuhn() { return {Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{1, 1, 0}, Point3{1, 1, 1}}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("regular tetrahedron closed forms") {
  const auto g = tet_geometry(regular());
  CHECK(g.volume == doctest::Approx(std::sqrt(2.0) / 12).epsilon(1e-14));
  CHECK(g.diameter == doctest::Approx(1.0).epsilon(1e-15));
  // Inradius sqrt(6)/12, so rho = sqrt(6)/6.
  CHECK(g.insphere_diameter == doctest::Approx(std::sqrt(6.0) / 6).epsilon(1e-14));
  CHECK(std::abs(g.aspect_ratio() - std::sqrt(6.0)) < 1e-12);
  for (double a : g.dihedral_angles) CHECK(a == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-14));
  for (double area : g.face_areas) CHECK(area == doctest::Approx(kSqrt3 / 4).epsilon(1e-14));
}

TEST_CASE("Kuhn tetrahedron closed forms") {
  const auto g = tet_geometry(kuhn());
  CHECK(g.volume == doctest::Approx(1.0 / 6));
  CHECK(std::abs(g.aspect_ratio() - kSqrt3 * (1 + std::sqrt(2.0))) < 1e-12);
  const double pi = std::acos(-1.0);
  double lo = 10, hi = 0;
  for (double a : g.dihedral_angles) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  CHECK(lo == doctest::Approx(pi / 4));
  CHECK(hi == doctest::Approx(pi / 2));
}

TEST_CASE("face planes point outward and touch points sit on faces") {
  for (auto v : {regular(), kuhn()}) {
    for (int flip = 0; flip < 2; ++flip) {
      if (flip) std::swap(v[2], v[3]);
      const auto g = tet_geometry(v);
      for (int i = 0; i < 4; ++i) {
        const auto& p = g.face_planes[static_cast<std::size_t>(i)];
        CHECK(p.signed_distance(g.vertices[static_cast<std::size_t>(i)]) < 0);
        for (const auto& c : g.face(i).corners) CHECK(std::abs(p.signed_distance(c)) < 1e-15);
        CHECK(p.signed_distance(g.incenter) == doctest::Approx(-g.insphere_diameter / 2));
        CHECK(std::abs(p.signed_distance(g.face_touch_points[static_cast<std::size_t>(i)])) < 1e-15);
      }
    }
  }
}

TEST_CASE("incenter, insphere and dihedral angles agree with independent routes") {
  oracle::TetSampler s(7);
  for (int k = 0; k < 2000; ++k) {
    const auto v = s.tet(200.0);
    const auto g = tet_geometry(v);
    const auto ref = oracle::insphere(v);
    const double h = g.diameter;
    CHECK(distance(g.incenter, ref.center) <= 1e-11 * h * g.aspect_ratio());
    CHECK(g.insphere_diameter == doctest::Approx(2 * ref.radius).epsilon(1e-10));
    for (int e = 0; e < 6; ++e) {
      const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
      const auto [f0, f1] = faces_at_edge(e);
      // faces_at_edge returns the off-edge vertices, i.e. the opposite faces.
      const double ref_angle = oracle::dihedral(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)],
                                                v[static_cast<std::size_t>(f0)], v[static_cast<std::size_t>(f1)]);
      CHECK(std::abs(g.dihedral_angles[static_cast<std::size_t>(e)] - ref_angle) < 1e-9);
    }
  }
}

TEST_CASE("geometry is invariant under rigid motions and scales with similarity") {
  oracle::TetSampler s(11);
  for (int k = 0; k < 500; ++k) {
    const auto v = s.tet(100.0);
    const double scale = std::pow(10.0, 3 * s.uniform());
    const auto m = oracle::random_motion(s, scale);
    std::array<Point3, 4> w{m(v[0]), m(v[1]), m(v[2]), m(v[3])};
    const auto g = tet_geometry(v), gw = tet_geometry(w);
    CHECK(gw.aspect_ratio() == doctest::Approx(g.aspect_ratio()).epsilon(1e-9));
    CHECK(gw.volume == doctest::Approx(g.volume * scale * scale * scale).epsilon(1e-9));
    CHECK(distance(gw.incenter, m(g.incenter)) <= 1e-9 * gw.diameter);
    for (std::size_t e = 0; e < 6; ++e) CHECK(std::abs(gw.dihedral_angles[e] - g.dihedral_angles[e]) < 1e-8);
  }
}

TEST_CASE("degenerate tetrahedra are rejected") {
  CHECK(code_of([] { tet_geometry(Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{1, 1, 0}); }) ==
        ErrorCode::DegenerateTet);
  CHECK(code_of([] { tet_geometry(Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0.3, 0.3, 1e-15}); }) ==
        ErrorCode::DegenerateTet);
  CHECK(code_of([] { tet_geometry(Point3{0, 0, 0}, Point3{0, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}); }) ==
        ErrorCode::DegenerateTet);
  CHECK(code_of([] { tet_geometry(Point3{NAN, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}); }) ==
        ErrorCode::DegenerateTet);
  CHECK_NOTHROW(tet_geometry(Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0.3, 0.3, 1e-9}));
}

TEST_CASE("barycentric coordinates and boundary distance") {
  const Triangle3 t{{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}}};
  const auto l = barycentric_in_triangle({0.2, 0.3, 0}, t);
  CHECK(l[0] == doctest::Approx(0.5));
  CHECK(l[1] == doctest::Approx(0.2));
  CHECK(l[2] == doctest::Approx(0.3));
  CHECK(dist_to_triangle_boundary({0.2, 0.3, 0}, t) == doctest::Approx(0.2));
  CHECK(dist_to_triangle_boundary({1.0 / 3, 1.0 / 3, 0}, t) == doctest::Approx(1.0 / (3 * std::sqrt(2.0))));
  CHECK(dist_to_triangle_boundary({0.5, 0.5, 0}, t) == doctest::Approx(0.0));
  CHECK(code_of([&] { dist_to_triangle_boundary({0.8, 0.8, 0}, t); }) == ErrorCode::Outside);
  CHECK(code_of([&] { barycentric_in_triangle({0.2, 0.2, 1e-3}, t); }) == ErrorCode::NotInPlane);
  CHECK_NOTHROW(barycentric_in_triangle({0.2, 0.2, 1e-12}, t));
  const Triangle3 flat{{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{2, 0, 0}}};
  CHECK(code_of([&] { barycentric_in_triangle({0.5, 0, 0}, flat); }) == ErrorCode::DegenerateTriangle);
  CHECK(code_of([&] { Plane::through({0, 0, 0}, {1, 1, 1}, {2, 2, 2}); }) == ErrorCode::DegenerateTriangle);
}

TEST_CASE("boundary distance matches segment distance for random interior points") {
  oracle::TetSampler s(3);
  for (int k = 0; k < 1000; ++k) {
    const Triangle3 t{{s.point(), s.point(), s.point()}};
    if (triangle_area(t) < 1e-3) continue;
    double w[3] = {s.uniform() + 1, s.uniform() + 1, s.uniform() + 1};
    const double sum = w[0] + w[1] + w[2];
    const Point3 p = (w[0] * t.corners[0] + w[1] * t.corners[1] + w[2] * t.corners[2]) / sum;
    const double ref = std::min({oracle::segment_distance(p, t.corners[0], t.corners[1]),
                                 oracle::segment_distance(p, t.corners[1], t.corners[2]),
                                 oracle::segment_distance(p, t.corners[2], t.corners[0])});
    CHECK(dist_to_triangle_boundary(p, t) == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("segment plane intersection") {
  const Plane z0 = Plane::through({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
  const auto hit = segment_plane_intersection({0, 0, 1}, {1, 1, -3}, z0);
  CHECK(hit.t == doctest::Approx(0.25));
  CHECK(hit.point.x == doctest::Approx(0.25));
  CHECK(std::abs(hit.point.z) < 1e-15);
  CHECK(code_of([&] { segment_plane_intersection({0, 0, 1}, {0, 0, 2}, z0); }) == ErrorCode::NoCrossing);
  CHECK(code_of([&] { segment_plane_intersection({0, 0, 0}, {0, 0, 2}, z0); }) == ErrorCode::NoCrossing);
}

TEST_CASE("edge and face numbering") {
  for (int f = 0; f < 4; ++f) {
    for (int v : kFaceVertices[static_cast<std::size_t>(f)]) CHECK(v != f);
  }
  for (int e = 0; e < 6; ++e) {
    const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
    const auto [a, b] = faces_at_edge(e);
    CHECK(a != i);
    CHECK(a != j);
    CHECK(b != i);
    CHECK(b != j);
    CHECK(a < b);
  }
}
