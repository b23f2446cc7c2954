#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "wfsplit/error.hpp"
#include "wfsplit/mesh_gen.hpp"
#include "wfsplit/mesh_io.hpp"
#include "wfsplit/regularity.hpp"
#include "wfsplit/report.hpp"
#include "wfsplit/wf_refine.hpp"
#include "wfsplit/wfsplit.h"

struct wf_mesh {
  wfsplit::TetMesh mesh;
};

struct wf_refinement {
  wfsplit::RefinementOutput out;  // `refined` moved into `mesh`
  wf_mesh mesh;
  double volume_residual = 0.0;
};

namespace {

thread_local std::string g_last_error;

wf_status to_status(wfsplit::ErrorCode code) {
  using wfsplit::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return WF_ERR_INVALID_ARGUMENT;
    case ErrorCode::DegenerateTet: return WF_ERR_DEGENERATE_TET;
    case ErrorCode::DegenerateTriangle: return WF_ERR_DEGENERATE_TRIANGLE;
    case ErrorCode::NotInPlane: return WF_ERR_NOT_IN_PLANE;
    case ErrorCode::Outside: return WF_ERR_OUTSIDE;
    case ErrorCode::NoCrossing: return WF_ERR_NO_CROSSING;
    case ErrorCode::NonManifold: return WF_ERR_NON_MANIFOLD;
    case ErrorCode::NonConforming: return WF_ERR_NON_CONFORMING;
    case ErrorCode::ParseError: return WF_ERR_PARSE;
    case ErrorCode::IndexOutOfRange: return WF_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::UnsupportedVersion: return WF_ERR_UNSUPPORTED_VERSION;
    case ErrorCode::IoError: return WF_ERR_IO;
    case ErrorCode::SplitPointOutsideFace: return WF_ERR_SPLIT_POINT_OUTSIDE_FACE;
    case ErrorCode::InvalidC0: return WF_ERR_INVALID_C0;
  }
  return WF_ERR_INTERNAL;
}

wf_status fail(wf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class Fn>
wf_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const wfsplit::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WF_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* wf_status_string(wf_status status) {
  switch (status) {
    case WF_OK: return "ok";
    case WF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WF_ERR_DEGENERATE_TET: return "degenerate tetrahedron";
    case WF_ERR_DEGENERATE_TRIANGLE: return "degenerate triangle";
    case WF_ERR_NOT_IN_PLANE: return "point not in plane";
    case WF_ERR_OUTSIDE: return "point outside triangle";
    case WF_ERR_NO_CROSSING: return "segment does not cross plane";
    case WF_ERR_NON_MANIFOLD: return "non-manifold mesh";
    case WF_ERR_NON_CONFORMING: return "non-conforming mesh";
    case WF_ERR_PARSE: return "parse error";
    case WF_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case WF_ERR_UNSUPPORTED_VERSION: return "unsupported file version";
    case WF_ERR_IO: return "i/o error";
    case WF_ERR_SPLIT_POINT_OUTSIDE_FACE: return "split point outside face";
    case WF_ERR_INVALID_C0: return "invalid shape constant";
    case WF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* wf_last_error(void) { return g_last_error.c_str(); }

void wf_string_free(char* s) { std::free(s); }

int wf_family_from_name(const char* name, wf_family* out) {
  if (name == nullptr || out == nullptr) return 0;
  const auto family = wfsplit::parse_family(name);
  if (!family) return 0;
  *out = static_cast<wf_family>(*family);
  return 1;
}

wf_status wf_mesh_create(const double* coords, size_t num_vertices, const uint32_t* tets, size_t num_tets,
                         wf_mesh** out) {
  return guarded([&] {
    if (out == nullptr || (num_vertices > 0 && coords == nullptr) || (num_tets > 0 && tets == nullptr)) {
      return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    }
    auto handle = std::make_unique<wf_mesh>();
    handle->mesh.vertices.resize(num_vertices);
    for (size_t i = 0; i < num_vertices; ++i) {
      handle->mesh.vertices[i] = {coords[3 * i], coords[3 * i + 1], coords[3 * i + 2]};
    }
    handle->mesh.tets.resize(num_tets);
    for (size_t t = 0; t < num_tets; ++t) {
      for (size_t k = 0; k < 4; ++k) {
        if (tets[4 * t + k] >= num_vertices) {
          return fail(WF_ERR_INDEX_OUT_OF_RANGE, "tet " + std::to_string(t) + " references a missing vertex");
        }
        handle->mesh.tets[t][k] = tets[4 * t + k];
      }
    }
    *out = handle.release();
    return WF_OK;
  });
}

void wf_mesh_destroy(wf_mesh* mesh) { delete mesh; }

wf_status wf_mesh_read_tmesh(const char* path, wf_mesh** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    *out = new wf_mesh{wfsplit::load_tmesh(path)};
    return WF_OK;
  });
}

wf_status wf_mesh_parse_tmesh(const char* text, wf_mesh** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    *out = new wf_mesh{wfsplit::read_tmesh(text)};
    return WF_OK;
  });
}

wf_status wf_mesh_read_msh(const char* path, wf_mesh** out, char** warnings) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    auto imported = wfsplit::load_msh(path);
    if (warnings != nullptr) {
      std::string joined;
      for (const auto& w : imported.warnings) joined += w + "\n";
      *warnings = dup_string(joined);
    }
    *out = new wf_mesh{std::move(imported.mesh)};
    return WF_OK;
  });
}

wf_status wf_mesh_write_tmesh(const wf_mesh* mesh, const char* path) {
  return guarded([&] {
    if (mesh == nullptr || path == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    wfsplit::save_tmesh(mesh->mesh, path);
    return WF_OK;
  });
}

wf_status wf_mesh_to_tmesh(const wf_mesh* mesh, char** text) {
  return guarded([&] {
    if (mesh == nullptr || text == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    *text = dup_string(wfsplit::write_tmesh(mesh->mesh));
    return WF_OK;
  });
}

wf_status wf_mesh_write_vtk(const wf_mesh* mesh, const char* path) {
  return guarded([&] {
    if (mesh == nullptr || path == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    wfsplit::save_vtk_legacy(mesh->mesh, path);
    return WF_OK;
  });
}

size_t wf_mesh_num_vertices(const wf_mesh* mesh) { return mesh ? mesh->mesh.vertices.size() : 0; }

size_t wf_mesh_num_tets(const wf_mesh* mesh) { return mesh ? mesh->mesh.tets.size() : 0; }

wf_status wf_mesh_vertex(const wf_mesh* mesh, size_t index, double xyz[3]) {
  if (mesh == nullptr || xyz == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (index >= mesh->mesh.vertices.size()) return fail(WF_ERR_INDEX_OUT_OF_RANGE, "vertex index out of range");
  const auto& p = mesh->mesh.vertices[index];
  xyz[0] = p.x;
  xyz[1] = p.y;
  xyz[2] = p.z;
  return WF_OK;
}

wf_status wf_mesh_tet(const wf_mesh* mesh, size_t index, uint32_t ids[4]) {
  if (mesh == nullptr || ids == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (index >= mesh->mesh.tets.size()) return fail(WF_ERR_INDEX_OUT_OF_RANGE, "tet index out of range");
  for (size_t k = 0; k < 4; ++k) ids[k] = mesh->mesh.tets[index][k];
  return WF_OK;
}

wf_status wf_mesh_total_volume(const wf_mesh* mesh, double* out) {
  return guarded([&] {
    if (mesh == nullptr || out == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    double total = 0.0;
    for (size_t t = 0; t < mesh->mesh.tets.size(); ++t) total += std::abs(mesh->mesh.signed_volume(t));
    *out = total;
    return WF_OK;
  });
}

wf_status wf_mesh_validate(wf_mesh* mesh, wf_validation* report) {
  return guarded([&] {
    if (mesh == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    const auto v = wfsplit::validate(mesh->mesh);
    if (report != nullptr) {
      report->ok = v.ok() ? 1 : 0;
      report->conforming = v.conforming() ? 1 : 0;
      report->orientation_fixes = v.orientation_fixes.size();
      report->degenerate = v.degenerate.size();
      report->nonmanifold_faces = v.nonmanifold_faces.size();
      report->hanging_nodes = v.hanging.size();
    }
    if (!v.indices_ok) return fail(WF_ERR_INDEX_OUT_OF_RANGE, v.message);
    if (!v.degenerate.empty()) return fail(WF_ERR_DEGENERATE_TET, v.message);
    if (!v.conforming()) return fail(WF_ERR_NON_CONFORMING, v.message);
    wfsplit::canonicalize_orientation(mesh->mesh);
    return WF_OK;
  });
}

wf_status wf_generate(const wf_gen_spec* spec, wf_mesh** out) {
  return guarded([&] {
    if (spec == nullptr || out == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    if (spec->family < WF_FAMILY_CUBE_KUHN || spec->family > WF_FAMILY_REGULAR_TET) {
      return fail(WF_ERR_INVALID_ARGUMENT, "unknown family");
    }
    wfsplit::GenSpec g;
    g.family = static_cast<wfsplit::Family>(spec->family);
    g.n = spec->n;
    g.sigma = spec->sigma;
    g.eps = spec->eps;
    g.seed = spec->seed;
    *out = new wf_mesh{wfsplit::generate(g)};
    return WF_OK;
  });
}

wf_status wf_refine(const wf_mesh* mesh, int levels, wf_refinement** out) {
  return guarded([&] {
    if (mesh == nullptr || out == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    auto handle = std::make_unique<wf_refinement>();
    handle->out = wfsplit::refine_k(mesh->mesh, levels);
    handle->volume_residual = wfsplit::volume_conservation_residual(mesh->mesh, handle->out);
    handle->mesh.mesh = std::move(handle->out.refined);
    *out = handle.release();
    return WF_OK;
  });
}

void wf_refinement_destroy(wf_refinement* refinement) { delete refinement; }

const wf_mesh* wf_refinement_mesh(const wf_refinement* refinement) {
  return refinement ? &refinement->mesh : nullptr;
}

size_t wf_refinement_root_parent(const wf_refinement* refinement, size_t child) {
  if (refinement == nullptr || child >= refinement->out.root_parent.size()) return SIZE_MAX;
  return refinement->out.root_parent[child];
}

double wf_refinement_volume_residual(const wf_refinement* refinement) {
  return refinement ? refinement->volume_residual : -1.0;
}

wf_status wf_refinement_write_provenance(const wf_refinement* refinement, const char* path) {
  return guarded([&] {
    if (refinement == nullptr || path == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    wfsplit::write_text_file(path, wfsplit::provenance_csv(refinement->out));
    return WF_OK;
  });
}

wf_status wf_shape_constant(const wf_mesh* mesh, double* out) {
  return guarded([&] {
    if (mesh == nullptr || out == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    *out = wfsplit::shape_constant(mesh->mesh);
    return WF_OK;
  });
}

wf_status wf_theoretical_constants(double c0, wf_constants* out) {
  return guarded([&] {
    if (out == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    const auto k = wfsplit::theoretical_constants(c0);
    *out = {k.c0, k.frak_c2, k.c2, k.c1};
    return WF_OK;
  });
}

wf_status wf_analyze(const wf_mesh* mesh, wf_report_format format, char** report) {
  return guarded([&] {
    if (mesh == nullptr || report == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    const auto summary = wfsplit::analyze(mesh->mesh);
    *report = dup_string(format == WF_REPORT_CSV ? wfsplit::analyze_report_csv(summary)
                                                 : wfsplit::analyze_report_json(summary));
    return WF_OK;
  });
}

wf_status wf_verify(const wf_mesh* mesh, double tolerance, int* all_pass, char** report_json,
                    char** summary_text) {
  return guarded([&] {
    if (mesh == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    wfsplit::VerifyOptions options;
    if (tolerance >= 0.0) options.tolerance = tolerance;
    const auto report = wfsplit::verify_mesh(mesh->mesh, options);
    if (all_pass != nullptr) *all_pass = report.all_pass() ? 1 : 0;
    if (report_json != nullptr) *report_json = dup_string(wfsplit::verification_report_json(report));
    if (summary_text != nullptr) *summary_text = dup_string(wfsplit::verification_report_text(report));
    return WF_OK;
  });
}

wf_status wf_sweep_sliver(double eps_from, double eps_to, int steps, char** csv, char** notes) {
  return guarded([&] {
    if (csv == nullptr) return fail(WF_ERR_INVALID_ARGUMENT, "null pointer argument");
    const auto grid = wfsplit::geometric_grid(eps_from, eps_to, steps);
    const auto sweep = wfsplit::sweep_sharpness(wfsplit::Family::Sliver, grid);
    *csv = dup_string(wfsplit::sweep_csv(sweep));
    if (notes != nullptr) {
      std::string joined;
      for (const auto& n : sweep.notes) joined += n + "\n";
      *notes = dup_string(joined);
    }
    return WF_OK;
  });
}

}  // extern "C"
