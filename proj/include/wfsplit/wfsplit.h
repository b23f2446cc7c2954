/* C interface to the wfsplit library.
 *
 * Objects are opaque handles created by *_create / *_read / wf_generate /
 * wf_refine and released with the matching *_destroy. Every fallible call
 * returns a wf_status; on failure wf_last_error() holds a message for the
 * calling thread. Strings handed out by the library are released with
 * wf_string_free.
 */
#ifndef WFSPLIT_WFSPLIT_H
#define WFSPLIT_WFSPLIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WFSPLIT_BUILDING)
#    define WF_API __declspec(dllexport)
#  else
#    define WF_API __declspec(dllimport)
#  endif
#else
#  define WF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wf_status {
  WF_OK = 0,
  WF_ERR_INVALID_ARGUMENT = 1,
  WF_ERR_DEGENERATE_TET = 2,
  WF_ERR_DEGENERATE_TRIANGLE = 3,
  WF_ERR_NOT_IN_PLANE = 4,
  WF_ERR_OUTSIDE = 5,
  WF_ERR_NO_CROSSING = 6,
  WF_ERR_NON_MANIFOLD = 7,
  WF_ERR_NON_CONFORMING = 8,
  WF_ERR_PARSE = 9,
  WF_ERR_INDEX_OUT_OF_RANGE = 10,
  WF_ERR_UNSUPPORTED_VERSION = 11,
  WF_ERR_IO = 12,
  WF_ERR_SPLIT_POINT_OUTSIDE_FACE = 13,
  WF_ERR_INVALID_C0 = 14,
  WF_ERR_INTERNAL = 99
} wf_status;

typedef enum wf_family {
  WF_FAMILY_CUBE_KUHN = 0,
  WF_FAMILY_PERTURBED_CUBE = 1,
  WF_FAMILY_SLIVER = 2,
  WF_FAMILY_TWO_TET_MIRROR = 3,
  WF_FAMILY_TWO_TET_SKEW = 4,
  WF_FAMILY_REGULAR_TET = 5
} wf_family;

typedef enum wf_report_format {
  WF_REPORT_JSON = 0,
  WF_REPORT_CSV = 1
} wf_report_format;

typedef struct wf_mesh wf_mesh;
typedef struct wf_refinement wf_refinement;

typedef struct wf_gen_spec {
  wf_family family;
  int n;
  double sigma;
  double eps;
  uint64_t seed;
} wf_gen_spec;

typedef struct wf_validation {
  int ok;
  int conforming;
  size_t orientation_fixes;
  size_t degenerate;
  size_t nonmanifold_faces;
  size_t hanging_nodes;
} wf_validation;

typedef struct wf_constants {
  double c0;
  double frak_c2;
  double c2;
  double c1;
} wf_constants;

WF_API const char* wf_status_string(wf_status status);
WF_API const char* wf_last_error(void);
WF_API void wf_string_free(char* s);
WF_API int wf_family_from_name(const char* name, wf_family* out);

/* Meshes */
WF_API wf_status wf_mesh_create(const double* coords, size_t num_vertices,
                                const uint32_t* tets, size_t num_tets, wf_mesh** out);
WF_API void wf_mesh_destroy(wf_mesh* mesh);
WF_API wf_status wf_mesh_read_tmesh(const char* path, wf_mesh** out);
WF_API wf_status wf_mesh_parse_tmesh(const char* text, wf_mesh** out);
/* Gmsh MSH 2.2 ASCII; warnings (may be NULL) receive a newline-joined list. */
WF_API wf_status wf_mesh_read_msh(const char* path, wf_mesh** out, char** warnings);
WF_API wf_status wf_mesh_write_tmesh(const wf_mesh* mesh, const char* path);
WF_API wf_status wf_mesh_to_tmesh(const wf_mesh* mesh, char** text);
WF_API wf_status wf_mesh_write_vtk(const wf_mesh* mesh, const char* path);
WF_API size_t wf_mesh_num_vertices(const wf_mesh* mesh);
WF_API size_t wf_mesh_num_tets(const wf_mesh* mesh);
WF_API wf_status wf_mesh_vertex(const wf_mesh* mesh, size_t index, double xyz[3]);
WF_API wf_status wf_mesh_tet(const wf_mesh* mesh, size_t index, uint32_t ids[4]);
WF_API wf_status wf_mesh_total_volume(const wf_mesh* mesh, double* out);

/* Reports problems in *report and reorients negative tets in place.
 * Returns WF_ERR_NON_CONFORMING, WF_ERR_DEGENERATE_TET or
 * WF_ERR_INDEX_OUT_OF_RANGE when the mesh cannot be used. */
WF_API wf_status wf_mesh_validate(wf_mesh* mesh, wf_validation* report);

WF_API wf_status wf_generate(const wf_gen_spec* spec, wf_mesh** out);

/* Refinement */
WF_API wf_status wf_refine(const wf_mesh* mesh, int levels, wf_refinement** out);
WF_API void wf_refinement_destroy(wf_refinement* refinement);
/* Borrowed; valid until the refinement is destroyed. */
WF_API const wf_mesh* wf_refinement_mesh(const wf_refinement* refinement);
WF_API size_t wf_refinement_root_parent(const wf_refinement* refinement, size_t child);
WF_API double wf_refinement_volume_residual(const wf_refinement* refinement);
WF_API wf_status wf_refinement_write_provenance(const wf_refinement* refinement, const char* path);

/* Regularity */
WF_API wf_status wf_shape_constant(const wf_mesh* mesh, double* out);
WF_API wf_status wf_theoretical_constants(double c0, wf_constants* out);
WF_API wf_status wf_analyze(const wf_mesh* mesh, wf_report_format format, char** report);
/* tolerance < 0 keeps the per-check defaults. */
WF_API wf_status wf_verify(const wf_mesh* mesh, double tolerance, int* all_pass,
                           char** report_json, char** summary_text);
WF_API wf_status wf_sweep_sliver(double eps_from, double eps_to, int steps, char** csv,
                                 char** notes);

#ifdef __cplusplus
}
#endif

#endif
