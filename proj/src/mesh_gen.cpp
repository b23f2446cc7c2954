#include "wfsplit/mesh_gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "wfsplit/error.hpp"

namespace wfsplit {

namespace {

constexpr std::array<std::string_view, 6> kFamilyNames{
    "cube_kuhn", "perturbed_cube", "sliver", "two_tet_mirror", "two_tet_skew", "regular_tet"};

void orient_positive(TetMesh& mesh) {
  for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
    if (mesh.signed_volume(t) < 0.0) std::swap(mesh.tets[t][2], mesh.tets[t][3]);
  }
}

// Uniform in [-1, 1), built from the top 53 bits so that the mapping does
// not depend on the standard library's distribution implementation.
double symmetric_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

bool healthy(Point3 a, Point3 b, Point3 c, Point3 d, bool positive) {
  const double vol = signed_volume(a, b, c, d);
  const double h = longest_edge(a, b, c, d);
  return (vol > 0.0) == positive && std::abs(vol) > kDegenerateVolumeFactor * h * h * h;
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

std::string_view family_name(Family family) { return kFamilyNames[static_cast<std::size_t>(family)]; }

TetMesh gen_cube_kuhn(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cube_kuhn needs n >= 1");
  const auto side = static_cast<std::size_t>(n) + 1;
  auto id = [&](std::size_t i, std::size_t j, std::size_t k) {
    return static_cast<VertexId>(i + side * (j + side * k));
  };

  TetMesh mesh;
  mesh.vertices.reserve(side * side * side);
  for (std::size_t k = 0; k < side; ++k)
    for (std::size_t j = 0; j < side; ++j)
      for (std::size_t i = 0; i < side; ++i)
        mesh.vertices.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n,
                                 static_cast<double>(k) / n});

  // Each tet walks from the cell's low corner to its high corner one axis
  // at a time; the six axis orders give the six Kuhn tets.
  static constexpr std::array<std::array<int, 3>, 6> kOrders{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto cells = static_cast<std::size_t>(n);
  mesh.tets.reserve(6 * cells * cells * cells);
  for (std::size_t k = 0; k < cells; ++k)
    for (std::size_t j = 0; j < cells; ++j)
      for (std::size_t i = 0; i < cells; ++i)
        for (const auto& order : kOrders) {
          std::array<std::size_t, 3> c{i, j, k};
          Tet tet{};
          tet[0] = id(c[0], c[1], c[2]);
          for (std::size_t s = 0; s < 3; ++s) {
            ++c[static_cast<std::size_t>(order[s])];
            tet[s + 1] = id(c[0], c[1], c[2]);
          }
          mesh.tets.push_back(tet);
        }
  orient_positive(mesh);
  return mesh;
}

TetMesh perturb(const TetMesh& mesh, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0 && sigma < 0.5)) throw Error(ErrorCode::InvalidArgument, "sigma must lie in [0, 0.5)");
  TetMesh out = mesh;
  if (sigma == 0.0) return out;

  const auto faces = FaceTable::build(mesh);
  std::vector<bool> fixed(mesh.vertices.size(), false);
  for (const auto& f : faces.faces()) {
    if (f.boundary()) {
      for (VertexId v : f.key) fixed[v] = true;
    }
  }

  std::vector<std::size_t> start(mesh.vertices.size() + 1, 0);
  for (const auto& t : mesh.tets)
    for (VertexId v : t) ++start[v + 1];
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) start[v + 1] += start[v];
  std::vector<TetIndex> incident(start.back());
  {
    auto fill = start;
    for (std::size_t t = 0; t < mesh.tets.size(); ++t)
      for (VertexId v : mesh.tets[t]) incident[fill[v]++] = static_cast<TetIndex>(t);
  }
  std::vector<bool> positive(mesh.tets.size());
  for (std::size_t t = 0; t < mesh.tets.size(); ++t) positive[t] = mesh.signed_volume(t) > 0.0;

  std::mt19937_64 rng(seed);
  for (std::size_t v = 0; v < out.vertices.size(); ++v) {
    if (fixed[v] || start[v] == start[v + 1]) continue;
    const Point3 home = out.vertices[v];
    double shortest = std::numeric_limits<double>::infinity();
    for (std::size_t s = start[v]; s < start[v + 1]; ++s) {
      for (VertexId w : out.tets[incident[s]]) {
        if (w != v) shortest = std::min(shortest, distance(home, out.vertices[w]));
      }
    }
    const double amplitude = sigma * shortest;
    for (int attempt = 0; attempt < 100; ++attempt) {
      const Point3 offset{symmetric_unit(rng), symmetric_unit(rng), symmetric_unit(rng)};
      out.vertices[v] = home + amplitude * offset;
      bool ok = true;
      for (std::size_t s = start[v]; s < start[v + 1] && ok; ++s) {
        const auto c = out.corners(incident[s]);
        ok = healthy(c[0], c[1], c[2], c[3], positive[incident[s]]);
      }
      if (ok) break;
      out.vertices[v] = home;
    }
  }
  return out;
}

TetMesh gen_sliver(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "sliver needs eps > 0");
  TetMesh mesh;
  mesh.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {1.0 / 3.0, 1.0 / 3.0, eps}};
  mesh.tets = {{0, 1, 2, 3}};
  (void)tet_geometry(mesh.corners(0));  // DegenerateTet below the threshold
  return mesh;
}

TetMesh gen_two_tet_mirror() { return gen_two_tet_skew(0.0); }

TetMesh gen_two_tet_skew(double offset) {
  if (!std::isfinite(offset)) throw Error(ErrorCode::InvalidArgument, "skew offset must be finite");
  const double height = std::sqrt(2.0 / 3.0);
  TetMesh mesh;
  mesh.vertices = {{0.0, 0.0, 0.0},
                   {1.0, 0.0, 0.0},
                   {0.5, std::sqrt(3.0) / 2.0, 0.0},
                   {0.5, std::sqrt(3.0) / 6.0, height},
                   {0.5 + offset, std::sqrt(3.0) / 6.0, -height}};
  mesh.tets = {{0, 1, 2, 3}, {0, 2, 1, 4}};
  for (std::size_t t = 0; t < mesh.tets.size(); ++t) (void)tet_geometry(mesh.corners(t));
  return mesh;
}

TetMesh gen_regular_tet() {
  TetMesh mesh;
  mesh.vertices = {{0.0, 0.0, 0.0},
                   {1.0, 0.0, 0.0},
                   {0.5, std::sqrt(3.0) / 2.0, 0.0},
                   {0.5, std::sqrt(3.0) / 6.0, std::sqrt(2.0 / 3.0)}};
  mesh.tets = {{0, 1, 2, 3}};
  return mesh;
}

TetMesh generate(const GenSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (!(spec.sigma >= 0.0 && spec.sigma < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "sigma must lie in [0, 0.5)");
  }
  if (!(spec.eps > 0.0) || !std::isfinite(spec.eps)) throw Error(ErrorCode::InvalidArgument, "eps must be > 0");
  switch (spec.family) {
    case Family::CubeKuhn: return gen_cube_kuhn(spec.n);
    case Family::PerturbedCube: return perturb(gen_cube_kuhn(spec.n), spec.sigma, spec.seed);
    case Family::Sliver: return gen_sliver(spec.eps);
    case Family::TwoTetMirror: return gen_two_tet_mirror();
    case Family::TwoTetSkew: return gen_two_tet_skew(spec.eps);
    case Family::RegularTet: return gen_regular_tet();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace wfsplit
