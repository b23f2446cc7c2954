#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfsplit/geometry.hpp"
#include "wfsplit/mesh_gen.hpp"
#include "wfsplit/tet_mesh.hpp"
#include "wfsplit/wf_refine.hpp"

namespace wfsplit {

/// Smallest h/rho any tetrahedron can have (the regular one).
inline const double kRegularAspect = std::sqrt(6.0);

/// Max over tets of h_T / rho_T. Throws InvalidArgument on an empty mesh.
double shape_constant(const TetMesh& mesh);
double shape_constant(const std::vector<TetGeometry>& geometry);

/// Bounding constants of the refined mesh as functions of c0:
///   frak_c2 = (2 c0)^-1 sqrt(-1 + 2 / (1 + sqrt(1 - c0^-2)))
///   c2      = min(frak_c2, (3 c0)^-1)
///   c1      = 2 pi c0^3 / c2
struct TheoreticalConstants {
  double c0 = 0.0;
  double frak_c2 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  /// c0 below sqrt(6) cannot come from a real mesh.
  bool below_regular_minimum = false;
};

/// Throws InvalidC0 for c0 <= 1 or non-finite c0.
TheoreticalConstants theoretical_constants(double c0);

// Per-tet checks. Unless stated, a non-negative margin means the
// inequality holds; distances are normalized by h_T.

/// max_F |2 dist(z_T, P_F) - rho_T| / rho_T. This one is a residual.
double verify_prop21(const TetGeometry& g);
/// min_x (dist(x, P_x) - rho_T) / rho_T; the inequality is strict.
double verify_prop22(const TetGeometry& g);
/// min_F dist(z_{T,F}, dF) - min_e (rho_T/2) cot(alpha_e/2), over h_T.
double verify_lemma_dist_face(const TetGeometry& g);
/// min_e sin(alpha_e) - rho_T/h_T.
double verify_lemma_cos(const TetGeometry& g);
/// sqrt(1 - c0^-2) - max_e |cos(alpha_e)|.
double verify_lemma_cos_global(const TetGeometry& g, double c0);

/// Lower bound (rho_T/2) cot(alpha_e/2) minimized over the six edges.
double face_touch_lower_bound(const TetGeometry& g);
/// min over faces of dist(z_{T,F}, dF).
double min_face_touch_distance(const TetGeometry& g);

struct FaceMargins {
  std::size_t face = 0;
  bool interior = false;
  /// Interior only: m_F = theta z_{1,0} + (1 - theta) z_{2,0}.
  std::optional<double> theta;
  /// Interior only: distance of m_F from the line z_{1,0} z_{2,0}, over h.
  double collinearity = 0.0;
  /// Interior only: dist(m_F, dF) - min_i dist(z_{i,0}, dF), over h.
  std::optional<double> between_distance;
  /// dist(m_F, dF) - c2 min_{T' incident} h_T', over that min.
  double split_bound = 0.0;
  double split_distance = 0.0;  // dist(m_F, dF), unnormalized
};

std::vector<FaceMargins> verify_prop32_lemma33(const TetMesh& mesh, const FaceTable& faces,
                                               const std::vector<TetGeometry>& geometry,
                                               const std::vector<SplitPointInfo>& splits,
                                               double c2);

struct Theorem31Result {
  TheoreticalConstants constants;
  double observed = 0.0;  // max_K h_K / rho_K
  double bound = 0.0;     // c1
  double slack = 0.0;     // bound / observed
  std::size_t worst_child = 0;
  /// min_K (|K| - (c2/12) rho_T^3) / h_T^3
  double vol_margin = 0.0;
  std::size_t vol_worst_child = 0;
  /// min_K (pi h_K^2 - sum |F|) / h_K^2
  double area_margin = 0.0;
  std::size_t area_worst_child = 0;
  std::size_t children = 0;

  bool pass() const { return observed <= bound; }
};

Theorem31Result verify_theorem31(const TetMesh& mesh);
/// Uses an existing single-level refinement of `mesh`.
Theorem31Result verify_theorem31(const RefinementOutput& refinement);

enum class CheckId { Prop21, Prop22, LemmaDistFace, LemmaCos, Prop32, Lemma33, Thm31, VolK, AreaF };
inline constexpr int kCheckCount = 9;

const char* check_name(CheckId id);

struct CheckRecord {
  CheckId id = CheckId::Prop21;
  bool pass = false;
  double worst_margin = 0.0;  // signed; >= -tolerance passes (> 0 if strict)
  double tolerance = 0.0;
  bool strict = false;
  std::int64_t worst_index = -1;  // tet, face or child id; -1 for mesh-level
  std::string scope;              // "tet", "face", "child" or "mesh"
};

struct MeshSummary {
  std::size_t vertices = 0;
  std::size_t tets = 0;
  std::size_t interior_faces = 0;
  std::size_t boundary_faces = 0;
  double c0 = 0.0;
  double aspect_min = 0.0;
  double aspect_max = 0.0;
  double dihedral_min = 0.0;  // radians
  double dihedral_max = 0.0;
  double min_face_touch_dist = 0.0;  // min dist(z_{T,F}, dF)
  double min_split_dist = 0.0;       // min dist(m_F, dF)
};

struct RefinedSummary {
  std::size_t children = 0;
  double observed = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double slack = 0.0;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;
  MeshSummary mesh;
  RefinedSummary refined;

  bool all_pass() const;
  const CheckRecord& check(CheckId id) const;
};

struct VerifyOptions {
  /// Replaces every non-strict tolerance when set.
  std::optional<double> tolerance;
};

double default_tolerance(CheckId id);

/// Geometry, split point and refinement statistics for a valid mesh.
MeshSummary analyze(const TetMesh& mesh);

/// Runs all nine checks on the mesh and its Worsey-Farin refinement.
VerificationReport verify_mesh(const TetMesh& mesh, const VerifyOptions& options = {});

struct SweepRecord {
  double param = 0.0;
  double c0 = 0.0;
  double observed = 0.0;
  double c1 = 0.0;
  double slack = 0.0;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<std::string> notes;  // skipped parameters, flagged rows
};

/// One record per parameter value; members that fail to generate or
/// refine are skipped with a note.
SweepResult sweep_sharpness(Family family, const std::vector<double>& params);

/// `steps` values from `from` to `to`, evenly spaced in log scale.
std::vector<double> geometric_grid(double from, double to, int steps);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace wfsplit
