#include "wfsplit/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wfsplit/error.hpp"

namespace wfsplit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// cot(alpha/2) = (1 + cos)/sin = sin/(1 - cos); pick the form without
// cancellation.
double cot_half(double c, double s) { return c >= 0.0 ? (1.0 + c) / s : s / (1.0 - c); }

// Running minimum that remembers the first (lowest) index attaining it.
struct WorstTracker {
  double value = kInf;
  std::int64_t index = -1;

  void offer(double v, std::size_t i) {
    if (v < value || index < 0) {
      value = v;
      index = static_cast<std::int64_t>(i);
    }
  }
};

CheckRecord make_record(CheckId id, const WorstTracker& w, const std::string& scope,
                        const VerifyOptions& options) {
  CheckRecord rec;
  rec.id = id;
  rec.strict = id == CheckId::Prop22;
  rec.tolerance = rec.strict ? 0.0 : options.tolerance.value_or(default_tolerance(id));
  // No samples (e.g. no interior faces) passes vacuously.
  const bool empty = w.value == kInf;
  rec.worst_margin = empty ? 0.0 : w.value;
  rec.worst_index = w.index;
  rec.scope = scope;
  rec.pass = empty || (rec.strict ? rec.worst_margin > 0.0 : rec.worst_margin >= -rec.tolerance);
  return rec;
}

MeshSummary summarize(const TetMesh& mesh, const FaceTable& faces, const std::vector<TetGeometry>& geometry,
                      const std::vector<SplitPointInfo>& splits) {
  MeshSummary s;
  s.vertices = mesh.vertices.size();
  s.tets = mesh.tets.size();
  s.interior_faces = faces.interior_count();
  s.boundary_faces = faces.boundary_count();
  s.aspect_min = kInf;
  s.dihedral_min = kInf;
  s.min_face_touch_dist = kInf;
  s.min_split_dist = kInf;
  for (const auto& g : geometry) {
    s.aspect_min = std::min(s.aspect_min, g.aspect_ratio());
    s.aspect_max = std::max(s.aspect_max, g.aspect_ratio());
    for (double a : g.dihedral_angles) {
      s.dihedral_min = std::min(s.dihedral_min, a);
      s.dihedral_max = std::max(s.dihedral_max, a);
    }
    s.min_face_touch_dist = std::min(s.min_face_touch_dist, min_face_touch_distance(g));
  }
  s.c0 = s.aspect_max;
  for (const auto& sp : splits) {
    const Triangle3 tri{{mesh.vertices[sp.key[0]], mesh.vertices[sp.key[1]], mesh.vertices[sp.key[2]]}};
    s.min_split_dist = std::min(s.min_split_dist, dist_to_triangle_boundary(sp.point, tri));
  }
  return s;
}

}  // namespace

double shape_constant(const std::vector<TetGeometry>& geometry) {
  if (geometry.empty()) throw Error(ErrorCode::InvalidArgument, "no tetrahedra");
  double c0 = 0.0;
  for (const auto& g : geometry) c0 = std::max(c0, g.aspect_ratio());
  return c0;
}

double shape_constant(const TetMesh& mesh) {
  if (mesh.tets.empty()) throw Error(ErrorCode::InvalidArgument, "no tetrahedra");
  return shape_constant(compute_geometry(mesh));
}

TheoreticalConstants theoretical_constants(double c0) {
  if (!std::isfinite(c0) || !(c0 > 1.0)) {
    throw Error(ErrorCode::InvalidC0, "c0 must be finite and greater than 1 (got " + std::to_string(c0) + ")");
  }
  TheoreticalConstants k;
  k.c0 = c0;
  // -1 + 2/(1+s) = (1-s)/(1+s) and 1-s = c0^-2/(1+s), so the square root
  // collapses to 1/(c0 (1+s)); this avoids the cancellation at large c0.
  const double s = std::sqrt(1.0 - 1.0 / (c0 * c0));
  k.frak_c2 = 1.0 / (2.0 * c0 * c0 * (1.0 + s));
  k.c2 = std::min(k.frak_c2, 1.0 / (3.0 * c0));
  k.c1 = 2.0 * std::numbers::pi * c0 * c0 * c0 / k.c2;
  k.below_regular_minimum = c0 < kRegularAspect * (1.0 - 1e-12);
  return k;
}

double verify_prop21(const TetGeometry& g) {
  double worst = 0.0;
  for (const auto& plane : g.face_planes) {
    const double d = std::abs(plane.signed_distance(g.incenter));
    worst = std::max(worst, std::abs(2.0 * d - g.insphere_diameter) / g.insphere_diameter);
  }
  return worst;
}

double verify_prop22(const TetGeometry& g) {
  // height_i / rho = sum|F| / (2 |F_i|); written as a difference of areas
  // so the margin keeps its sign on very flat tets.
  double worst = kInf;
  for (std::size_t i = 0; i < 4; ++i) {
    double others = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != i) others += g.face_areas[j];
    }
    worst = std::min(worst, (others - g.face_areas[i]) / (2.0 * g.face_areas[i]));
  }
  return worst;
}

double face_touch_lower_bound(const TetGeometry& g) {
  double lower = kInf;
  for (std::size_t e = 0; e < 6; ++e) {
    lower = std::min(lower, 0.5 * g.insphere_diameter * cot_half(g.dihedral_cos[e], g.dihedral_sin[e]));
  }
  return lower;
}

double min_face_touch_distance(const TetGeometry& g) {
  double d = kInf;
  for (int f = 0; f < 4; ++f) {
    d = std::min(d, dist_to_triangle_boundary(g.face_touch_points[static_cast<std::size_t>(f)], g.face(f)));
  }
  return d;
}

double verify_lemma_dist_face(const TetGeometry& g) {
  return (min_face_touch_distance(g) - face_touch_lower_bound(g)) / g.diameter;
}

double verify_lemma_cos(const TetGeometry& g) {
  const double ratio = g.insphere_diameter / g.diameter;
  double worst = kInf;
  for (double s : g.dihedral_sin) worst = std::min(worst, s - ratio);
  return worst;
}

double verify_lemma_cos_global(const TetGeometry& g, double c0) {
  const double bound = std::sqrt(1.0 - 1.0 / (c0 * c0));
  double worst = kInf;
  for (double c : g.dihedral_cos) worst = std::min(worst, bound - std::abs(c));
  return worst;
}

std::vector<FaceMargins> verify_prop32_lemma33(const TetMesh& mesh, const FaceTable& faces,
                                               const std::vector<TetGeometry>& geometry,
                                               const std::vector<SplitPointInfo>& splits, double c2) {
  std::vector<FaceMargins> out;
  out.reserve(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& rec = faces[f];
    const Point3 m = splits[f].point;
    const Triangle3 tri{{mesh.vertices[rec.key[0]], mesh.vertices[rec.key[1]], mesh.vertices[rec.key[2]]}};
    double min_h = geometry[rec.tets[0]].diameter;
    if (!rec.boundary()) min_h = std::min(min_h, geometry[rec.tets[1]].diameter);

    FaceMargins fm;
    fm.face = f;
    fm.interior = !rec.boundary();
    fm.split_distance = dist_to_triangle_boundary(m, tri);
    fm.split_bound = (fm.split_distance - c2 * min_h) / min_h;
    if (fm.interior) {
      const Point3 z10 = geometry[rec.tets[0]].face_touch_points[rec.local[0]];
      const Point3 z20 = geometry[rec.tets[1]].face_touch_points[rec.local[1]];
      const Point3 d = z10 - z20;
      const double d2 = dot(d, d);
      if (std::sqrt(d2) <= 1e-14 * min_h) {
        fm.theta = 0.5;
        fm.collinearity = distance(m, z10) / min_h;
      } else {
        const double theta = dot(m - z20, d) / d2;
        fm.theta = theta;
        fm.collinearity = distance(m, z20 + theta * d) / min_h;
      }
      const double touch = std::min(dist_to_triangle_boundary(z10, tri), dist_to_triangle_boundary(z20, tri));
      fm.between_distance = (fm.split_distance - touch) / min_h;
    }
    out.push_back(fm);
  }
  return out;
}

Theorem31Result verify_theorem31(const RefinementOutput& refinement) {
  Theorem31Result r;
  r.constants = theoretical_constants(shape_constant(refinement.parent_geometry));
  r.bound = r.constants.c1;
  r.vol_margin = kInf;
  r.area_margin = kInf;
  const auto& children = refinement.refined;
  r.children = children.tets.size();
  WorstTracker vol, area;
  for (std::size_t c = 0; c < children.tets.size(); ++c) {
    const TetGeometry k = tet_geometry(children.corners(c));
    const double ratio = k.aspect_ratio();
    if (ratio > r.observed) {
      r.observed = ratio;
      r.worst_child = c;
    }
    const TetGeometry& parent = refinement.parent_geometry[refinement.parent_of[c].parent];
    const double rho = parent.insphere_diameter;
    const double h = parent.diameter;
    vol.offer((k.volume - r.constants.c2 / 12.0 * rho * rho * rho) / (h * h * h), c);
    double area_sum = 0.0;
    for (double a : k.face_areas) area_sum += a;
    const double hk2 = k.diameter * k.diameter;
    area.offer((std::numbers::pi * hk2 - area_sum) / hk2, c);
  }
  r.vol_margin = vol.value;
  r.vol_worst_child = static_cast<std::size_t>(std::max<std::int64_t>(vol.index, 0));
  r.area_margin = area.value;
  r.area_worst_child = static_cast<std::size_t>(std::max<std::int64_t>(area.index, 0));
  r.slack = r.observed > 0.0 ? r.bound / r.observed : kInf;
  return r;
}

Theorem31Result verify_theorem31(const TetMesh& mesh) { return verify_theorem31(worsey_farin(mesh)); }

const char* check_name(CheckId id) {
  switch (id) {
    case CheckId::Prop21: return "prop21";
    case CheckId::Prop22: return "prop22";
    case CheckId::LemmaDistFace: return "lemma_dist_face";
    case CheckId::LemmaCos: return "lemma_cos";
    case CheckId::Prop32: return "prop32";
    case CheckId::Lemma33: return "lemma33";
    case CheckId::Thm31: return "thm31";
    case CheckId::VolK: return "volK";
    case CheckId::AreaF: return "areaF";
  }
  return "unknown";
}

double default_tolerance(CheckId id) {
  switch (id) {
    case CheckId::Prop21: return 1e-10;
    case CheckId::Prop22: return 0.0;
    case CheckId::LemmaDistFace: return 1e-12;
    case CheckId::LemmaCos: return 1e-12;
    case CheckId::Prop32: return 1e-10;
    case CheckId::Lemma33: return 1e-10;
    case CheckId::Thm31: return 0.0;
    case CheckId::VolK: return 1e-10;
    case CheckId::AreaF: return 1e-10;
  }
  return 0.0;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord& VerificationReport::check(CheckId id) const {
  for (const auto& c : checks) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::InvalidArgument, std::string("report has no check ") + check_name(id));
}

MeshSummary analyze(const TetMesh& mesh) {
  if (mesh.tets.empty()) throw Error(ErrorCode::InvalidArgument, "no tetrahedra");
  const auto faces = FaceTable::build(mesh);
  const auto geometry = compute_geometry(mesh);
  const auto splits = compute_split_points(mesh, faces, geometry);
  return summarize(mesh, faces, geometry, splits);
}

VerificationReport verify_mesh(const TetMesh& mesh, const VerifyOptions& options) {
  if (mesh.tets.empty()) throw Error(ErrorCode::InvalidArgument, "no tetrahedra");
  const RefinementOutput refinement = worsey_farin(mesh);
  const auto& geometry = refinement.parent_geometry;
  const double c0 = shape_constant(geometry);

  WorstTracker prop21, prop22, dist_face, cos_bound;
  for (std::size_t t = 0; t < geometry.size(); ++t) {
    const auto& g = geometry[t];
    prop21.offer(-verify_prop21(g), t);
    prop22.offer(verify_prop22(g), t);
    dist_face.offer(verify_lemma_dist_face(g), t);
    cos_bound.offer(std::min(verify_lemma_cos(g), verify_lemma_cos_global(g, c0)), t);
  }

  const Theorem31Result thm = verify_theorem31(refinement);
  const auto margins = verify_prop32_lemma33(mesh, refinement.parent_faces, geometry, refinement.split_points,
                                             thm.constants.c2);
  WorstTracker prop32, lemma33;
  for (const auto& fm : margins) {
    lemma33.offer(fm.split_bound, fm.face);
    if (fm.interior) {
      const double theta = *fm.theta;
      prop32.offer(std::min({theta, 1.0 - theta, -fm.collinearity, *fm.between_distance}), fm.face);
    }
  }

  WorstTracker thm31, vol, area;
  thm31.offer((thm.bound - thm.observed) / thm.bound, 0);
  thm31.index = -1;
  vol.offer(thm.vol_margin, thm.vol_worst_child);
  area.offer(thm.area_margin, thm.area_worst_child);

  VerificationReport report;
  report.checks = {
      make_record(CheckId::Prop21, prop21, "tet", options),
      make_record(CheckId::Prop22, prop22, "tet", options),
      make_record(CheckId::LemmaDistFace, dist_face, "tet", options),
      make_record(CheckId::LemmaCos, cos_bound, "tet", options),
      make_record(CheckId::Prop32, prop32, "face", options),
      make_record(CheckId::Lemma33, lemma33, "face", options),
      make_record(CheckId::Thm31, thm31, "mesh", options),
      make_record(CheckId::VolK, vol, "child", options),
      make_record(CheckId::AreaF, area, "child", options),
  };

  report.mesh = summarize(mesh, refinement.parent_faces, geometry, refinement.split_points);
  report.refined.children = thm.children;
  report.refined.observed = thm.observed;
  report.refined.c1 = thm.bound;
  report.refined.c2 = thm.constants.c2;
  report.refined.slack = thm.slack;
  return report;
}

std::vector<double> geometric_grid(double from, double to, int steps) {
  if (!(from > 0.0) || !(to > 0.0) || steps < 1) {
    throw Error(ErrorCode::InvalidArgument, "geometric grid needs positive endpoints and steps >= 1");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) return {from};
  const double ratio = std::log(to / from);
  for (int i = 0; i < steps; ++i) {
    out.push_back(i == steps - 1 ? to : from * std::exp(ratio * i / (steps - 1)));
  }
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "slope fit needs two or more paired samples");
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

SweepResult sweep_sharpness(Family family, const std::vector<double>& params) {
  SweepResult result;
  for (double p : params) {
    GenSpec spec;
    spec.family = family;
    switch (family) {
      case Family::CubeKuhn: spec.n = static_cast<int>(std::lround(p)); break;
      case Family::PerturbedCube: spec.n = 2; spec.sigma = p; break;
      case Family::Sliver:
      case Family::TwoTetSkew: spec.eps = p; break;
      case Family::TwoTetMirror:
      case Family::RegularTet: break;
    }
    try {
      const TetMesh mesh = generate(spec);
      const Theorem31Result thm = verify_theorem31(mesh);
      result.records.push_back({p, thm.constants.c0, thm.observed, thm.bound, thm.slack});
      if (!(thm.slack > 1.0)) {
        result.notes.push_back("param " + std::to_string(p) + ": observed ratio reaches c1 (slack " +
                               std::to_string(thm.slack) + ")");
      } else if (!(thm.slack > 10.0)) {
        result.notes.push_back("param " + std::to_string(p) + ": slack " + std::to_string(thm.slack) +
                               " is not above 10");
      }
    } catch (const Error& e) {
      result.notes.push_back("param " + std::to_string(p) + ": skipped (" + to_string(e.code()) + ": " +
                             e.what() + ")");
    }
  }
  return result;
}

}  // namespace wfsplit
