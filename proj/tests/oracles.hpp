#pragma once

// Reference computations that take a different route from the library, in
// long double where it matters. Tests compare against these instead of
// against library output.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "wfsplit/geometry.hpp"
#include "wfsplit/tet_mesh.hpp"

namespace oracle {

using wfsplit::Point3;
using ld = long double;

struct Constants {
  ld frak_c2;
  ld c2;
  ld c1;
};

// Direct evaluation of the published formula, no algebraic rewriting.
inline Constants constants(ld c0) {
  const ld inner = std::sqrt(1.0L - 1.0L / (c0 * c0));
  const ld frak = std::sqrt(-1.0L + 2.0L / (1.0L + inner)) / (2.0L * c0);
  const ld c2 = std::min(frak, 1.0L / (3.0L * c0));
  const ld pi = 3.141592653589793238462643383279502884L;
  return {frak, c2, 2.0L * pi * c0 * c0 * c0 / c2};
}

struct Vec {
  ld x, y, z;
};
inline Vec lv(Point3 p) { return {p.x, p.y, p.z}; }
inline Vec sub(Vec a, Vec b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline ld dotl(Vec a, Vec b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec crossl(Vec a, Vec b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline ld norml(Vec a) { return std::sqrt(dotl(a, a)); }

struct Insphere {
  Point3 center;
  double radius;
};

// Solves n_i . x + d_i = r for the four inward unit face normals with
// Gaussian elimination, so neither the area-weighted formula nor 6V/sum|F|
// is involved.
inline Insphere insphere(const std::array<Point3, 4>& v) {
  static constexpr int kOpp[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  ld m[4][5];
  for (int i = 0; i < 4; ++i) {
    const Vec a = lv(v[kOpp[i][0]]), b = lv(v[kOpp[i][1]]), c = lv(v[kOpp[i][2]]);
    Vec n = crossl(sub(b, a), sub(c, a));
    const ld len = norml(n);
    n = {n.x / len, n.y / len, n.z / len};
    if (dotl(n, sub(lv(v[i]), a)) < 0) n = {-n.x, -n.y, -n.z};
    // n . (x - a) = r  ->  n.x - r = n.a
    m[i][0] = n.x;
    m[i][1] = n.y;
    m[i][2] = n.z;
    m[i][3] = -1.0L;
    m[i][4] = dotl(n, a);
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    for (int k = 0; k < 5; ++k) std::swap(m[col][k], m[piv][k]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const ld f = m[r][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
    }
  }
  const ld x = m[0][4] / m[0][0], y = m[1][4] / m[1][1], z = m[2][4] / m[2][2], r = m[3][4] / m[3][3];
  return {{static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)}, static_cast<double>(r)};
}

// Angle between the components of the two off-edge vertices orthogonal to
// the edge.
inline double dihedral(Point3 a, Point3 b, Point3 c, Point3 d) {
  const Vec e = sub(lv(b), lv(a));
  const ld ee = dotl(e, e);
  auto perp = [&](Point3 p) {
    const Vec w = sub(lv(p), lv(a));
    const ld s = dotl(w, e) / ee;
    return Vec{w.x - s * e.x, w.y - s * e.y, w.z - s * e.z};
  };
  const Vec u = perp(c), w = perp(d);
  ld cosv = dotl(u, w) / (norml(u) * norml(w));
  cosv = std::max(-1.0L, std::min(1.0L, cosv));
  return static_cast<double>(std::acos(cosv));
}

inline double longest_edge(const std::array<Point3, 4>& v) {
  double h = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) h = std::max(h, static_cast<double>(norml(sub(lv(v[i]), lv(v[j])))));
  return h;
}

inline double segment_distance(Point3 p, Point3 a, Point3 b) {
  const Vec ab = sub(lv(b), lv(a)), ap = sub(lv(p), lv(a));
  ld t = dotl(ap, ab) / dotl(ab, ab);
  t = std::max(0.0L, std::min(1.0L, t));
  const Vec q{ap.x - t * ab.x, ap.y - t * ab.y, ap.z - t * ab.z};
  return static_cast<double>(norml(q));
}

// Face multiplicities by brute force over all tets.
inline std::map<std::array<std::uint32_t, 3>, int> face_counts(const wfsplit::TetMesh& mesh) {
  std::map<std::array<std::uint32_t, 3>, int> counts;
  for (const auto& t : mesh.tets) {
    for (int skip = 0; skip < 4; ++skip) {
      std::array<std::uint32_t, 3> f{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[static_cast<std::size_t>(k++)] = t[static_cast<std::size_t>(i)];
      std::sort(f.begin(), f.end());
      ++counts[f];
    }
  }
  return counts;
}

// Random tetrahedron with coordinates in [-1,1)^3, rejection-sampled
// against the degeneracy threshold and, optionally, a cap on h/rho.
class TetSampler {
 public:
  explicit TetSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-52 - 1.0; }
  Point3 point() { return {uniform(), uniform(), uniform()}; }

  std::array<Point3, 4> tet(double max_aspect = 1e6) {
    for (;;) {
      std::array<Point3, 4> v{point(), point(), point(), point()};
      const double h = longest_edge(v);
      const double vol = std::fabs(wfsplit::signed_volume(v[0], v[1], v[2], v[3]));
      if (vol <= 1e-6 * h * h * h) continue;
      const Insphere s = insphere(v);
      if (h / (2.0 * s.radius) > max_aspect) continue;
      return v;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Rigid motion: rotation from a random unit quaternion plus translation.
struct Motion {
  std::array<double, 9> r{};
  Point3 shift;
  double scale = 1.0;

  Point3 operator()(Point3 p) const {
    return Point3{r[0] * p.x + r[1] * p.y + r[2] * p.z, r[3] * p.x + r[4] * p.y + r[5] * p.z,
                  r[6] * p.x + r[7] * p.y + r[8] * p.z} *
               scale +
           shift;
  }
};

inline Motion random_motion(TetSampler& s, double scale = 1.0) {
  double q[4];
  double len = 0.0;
  do {
    len = 0.0;
    for (double& c : q) {
      c = s.uniform();
      len += c * c;
    }
  } while (len < 1e-3 || len > 1.0);
  len = std::sqrt(len);
  for (double& c : q) c /= len;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Motion m;
  m.r = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
         2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
  m.shift = Point3{s.uniform(), s.uniform(), s.uniform()} * 10.0;
  m.scale = scale;
  return m;
}

}  // namespace oracle
