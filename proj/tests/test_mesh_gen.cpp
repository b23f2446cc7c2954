#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "wfsplit/error.hpp"
#include "wfsplit/mesh_gen.hpp"
#include "wfsplit/regularity.hpp"

using namespace wfsplit;

namespace {

double total_volume(const TetMesh& m) {
  double v = 0.0;
  for (std::size_t t = 0; t < m.tets.size(); ++t) v += m.signed_volume(t);
  return v;
}

bool all_positive(const TetMesh& m) {
  for (std::size_t t = 0; t < m.tets.size(); ++t)
    if (!(m.signed_volume(t) > 0.0)) return false;
  return true;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (int f = 0; f < 6; ++f) {
    const auto fam = static_cast<Family>(f);
    CHECK(parse_family(family_name(fam)) == fam);
  }
  CHECK_FALSE(parse_family("cube").has_value());
}

TEST_CASE("Kuhn cube fills the unit cube with congruent positive tets") {
  for (int n = 1; n <= 5; ++n) {
    const auto mesh = gen_cube_kuhn(n);
    CHECK(mesh.vertices.size() == static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)));
    CHECK(mesh.tets.size() == static_cast<std::size_t>(6 * n * n * n));
    CHECK(total_volume(mesh) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(all_positive(mesh));
    CHECK(validate(mesh).ok());
    for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
      CHECK(mesh.signed_volume(t) == doctest::Approx(1.0 / (6.0 * n * n * n)).epsilon(1e-12));
    }
  }
  CHECK(gen_cube_kuhn(2).vertices[1 + 3 * (2 + 3 * 1)] == Point3{0.5, 1.0, 0.5});
}

TEST_CASE("perturbation keeps boundary, orientation and volume") {
  const auto base = gen_cube_kuhn(3);
  for (double sigma : {0.1, 0.3, 0.45}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto mesh = perturb(base, sigma, seed);
      CHECK(mesh.tets == base.tets);
      CHECK(all_positive(mesh));
      CHECK(validate(mesh).ok());
      CHECK(total_volume(mesh) == doctest::Approx(1.0).epsilon(1e-12));
      std::size_t moved = 0;
      for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
        const Point3 p = base.vertices[v];
        const bool on_boundary = p.x == 0 || p.x == 1 || p.y == 0 || p.y == 1 || p.z == 0 || p.z == 1;
        if (on_boundary) CHECK(mesh.vertices[v] == p);
        moved += !(mesh.vertices[v] == p);
        // Shortest incident edge on this grid is 1/3.
        const Point3 d = mesh.vertices[v] - p;
        CHECK(std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)}) <= sigma / 3.0 + 1e-15);
      }
      CHECK(moved >= 1);
      CHECK(moved <= 8);
    }
  }
  CHECK(perturb(base, 0.0, 3) == base);
  CHECK(perturb(base, 0.2, 3) == perturb(base, 0.2, 3));
  CHECK_FALSE(perturb(base, 0.2, 3) == perturb(base, 0.2, 4));
}

TEST_CASE("sliver aspect ratio grows like 1/eps") {
  double prev = 0.0;
  for (double eps : {0.5, 0.1, 0.02, 0.004}) {
    const auto mesh = gen_sliver(eps);
    const double c0 = shape_constant(mesh);
    CHECK(c0 > prev);
    prev = c0;
    const auto ins = oracle::insphere(mesh.corners(0));
    CHECK(c0 == doctest::Approx(oracle::longest_edge(mesh.corners(0)) / (2 * ins.radius)).epsilon(1e-10));
  }
  const double r1 = shape_constant(gen_sliver(1e-3)), r2 = shape_constant(gen_sliver(1e-4));
  CHECK(r2 / r1 == doctest::Approx(10.0).epsilon(1e-2));
  CHECK_THROWS_AS(gen_sliver(1e-20), Error);
}

TEST_CASE("two-tet meshes") {
  const auto mirror = gen_two_tet_mirror();
  CHECK(all_positive(mirror));
  CHECK(validate(mirror).ok());
  CHECK(shape_constant(mirror) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-13));
  const auto skew = gen_two_tet_skew(0.3);
  CHECK(all_positive(skew));
  CHECK(validate(skew).ok());
  CHECK(skew.vertices[4].x == doctest::Approx(0.8));
  CHECK(shape_constant(skew) > shape_constant(mirror));
}

TEST_CASE("generate validates its arguments") {
  GenSpec spec;
  spec.n = 0;
  CHECK_THROWS_AS(generate(spec), Error);
  spec = {};
  spec.sigma = 0.5;
  CHECK_THROWS_AS(generate(spec), Error);
  spec = {};
  spec.eps = 0.0;
  CHECK_THROWS_AS(generate(spec), Error);
  spec = {};
  spec.family = Family::PerturbedCube;
  spec.n = 2;
  spec.sigma = 0.2;
  spec.seed = 11;
  CHECK(generate(spec) == perturb(gen_cube_kuhn(2), 0.2, 11));
  spec.family = Family::RegularTet;
  CHECK(generate(spec) == gen_regular_tet());
}
