// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "wfsplit/wfsplit.h"

namespace {

wf_mesh* generated(wf_family family, int n = 1, double eps = 0.1) {
  wf_gen_spec spec{family, n, 0.0, eps, 0};
  wf_mesh* mesh = nullptr;
  REQUIRE(wf_generate(&spec, &mesh) == WF_OK);
  return mesh;
}

}  // namespace

TEST_CASE("create, query and destroy") {
  const double coords[] = {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1};
  const uint32_t tets[] = {0, 1, 3, 2};
  wf_mesh* mesh = nullptr;
  REQUIRE(wf_mesh_create(coords, 4, tets, 1, &mesh) == WF_OK);
  CHECK(wf_mesh_num_vertices(mesh) == 4);
  CHECK(wf_mesh_num_tets(mesh) == 1);
  double xyz[3];
  CHECK(wf_mesh_vertex(mesh, 1, xyz) == WF_OK);
  CHECK(xyz[0] == 1.0);
  CHECK(wf_mesh_vertex(mesh, 4, xyz) == WF_ERR_INDEX_OUT_OF_RANGE);

  wf_validation v{};
  CHECK(wf_mesh_validate(mesh, &v) == WF_OK);
  CHECK(v.ok == 1);
  CHECK(v.orientation_fixes == 1);
  uint32_t ids[4];
  CHECK(wf_mesh_tet(mesh, 0, ids) == WF_OK);
  CHECK(ids[2] == 2);
  CHECK(ids[3] == 3);
  double vol = 0;
  CHECK(wf_mesh_total_volume(mesh, &vol) == WF_OK);
  CHECK(vol == doctest::Approx(1.0 / 6));
  wf_mesh_destroy(mesh);
  wf_mesh_destroy(nullptr);
}

TEST_CASE("errors carry a status and a message") {
  const double coords[] = {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0};
  const uint32_t bad_index[] = {0, 1, 2, 9};
  wf_mesh* mesh = nullptr;
  CHECK(wf_mesh_create(coords, 4, bad_index, 1, &mesh) == WF_ERR_INDEX_OUT_OF_RANGE);
  CHECK(mesh == nullptr);
  CHECK(std::strlen(wf_last_error()) > 0);

  const uint32_t flat[] = {0, 1, 2, 3};
  REQUIRE(wf_mesh_create(coords, 4, flat, 1, &mesh) == WF_OK);
  wf_validation v{};
  CHECK(wf_mesh_validate(mesh, &v) == WF_ERR_DEGENERATE_TET);
  CHECK(v.degenerate == 1);
  wf_refinement* r = nullptr;
  CHECK(wf_refine(mesh, 1, &r) == WF_ERR_DEGENERATE_TET);
  CHECK(r == nullptr);
  wf_mesh_destroy(mesh);

  CHECK(wf_mesh_parse_tmesh("1 0\n0 0\n", &mesh) == WF_ERR_PARSE);
  CHECK(std::string(wf_last_error()).find("line 2") != std::string::npos);
  CHECK(wf_mesh_read_tmesh("/nonexistent/x.tmesh", &mesh) == WF_ERR_IO);
  CHECK(wf_refine(nullptr, 1, &r) == WF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(wf_status_string(WF_ERR_SPLIT_POINT_OUTSIDE_FACE)).size() > 0);

  wf_constants k{};
  CHECK(wf_theoretical_constants(1.0, &k) == WF_ERR_INVALID_C0);
  wf_gen_spec spec{WF_FAMILY_CUBE_KUHN, 0, 0.0, 1.0, 0};
  CHECK(wf_generate(&spec, &mesh) == WF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("refinement through the C interface") {
  wf_mesh* cube = generated(WF_FAMILY_CUBE_KUHN, 3);
  wf_refinement* r = nullptr;
  REQUIRE(wf_refine(cube, 1, &r) == WF_OK);
  const wf_mesh* refined = wf_refinement_mesh(r);
  CHECK(wf_mesh_num_tets(refined) == 1944);
  CHECK(wf_mesh_num_vertices(refined) == 64 + 162 + 378);
  CHECK(wf_refinement_volume_residual(r) < 1e-10);
  CHECK(wf_refinement_root_parent(r, 1943) == 161);
  wf_refinement_destroy(r);

  REQUIRE(wf_refine(cube, 2, &r) == WF_OK);
  CHECK(wf_mesh_num_tets(wf_refinement_mesh(r)) == 162 * 144);
  wf_refinement_destroy(r);
  CHECK(wf_refine(cube, 0, &r) == WF_ERR_INVALID_ARGUMENT);
  wf_mesh_destroy(cube);
}

TEST_CASE("regularity through the C interface") {
  wf_mesh* reg = generated(WF_FAMILY_REGULAR_TET);
  double c0 = 0;
  CHECK(wf_shape_constant(reg, &c0) == WF_OK);
  CHECK(std::abs(c0 - std::sqrt(6.0)) < 1e-12);
  wf_constants k{};
  CHECK(wf_theoretical_constants(c0, &k) == WF_OK);
  CHECK(k.c1 == doctest::Approx(2119.6963745297).epsilon(1e-12));

  int pass = 0;
  char* json = nullptr;
  char* text = nullptr;
  CHECK(wf_verify(reg, -1.0, &pass, &json, &text) == WF_OK);
  CHECK(pass == 1);
  CHECK(std::string(json).find("\"observed_wf_ratio\"") != std::string::npos);
  CHECK(std::string(text).find("c1_bound=2119.69637") != std::string::npos);
  wf_string_free(json);
  wf_string_free(text);

  char* csv = nullptr;
  CHECK(wf_analyze(reg, WF_REPORT_CSV, &csv) == WF_OK);
  CHECK(std::string(csv).rfind("vertices,tets,", 0) == 0);
  wf_string_free(csv);
  wf_mesh_destroy(reg);

  char* notes = nullptr;
  CHECK(wf_sweep_sliver(0.5, 0.05, 3, &csv, &notes) == WF_OK);
  CHECK(std::string(csv).rfind("eps,c0,observed,c1,slack\n0.5,", 0) == 0);
  CHECK(std::string(notes).empty());
  wf_string_free(csv);
  wf_string_free(notes);
}

TEST_CASE("tmesh text round trip and family names") {
  wf_mesh* mesh = generated(WF_FAMILY_TWO_TET_SKEW, 1, 0.25);
  char* text = nullptr;
  REQUIRE(wf_mesh_to_tmesh(mesh, &text) == WF_OK);
  wf_mesh* back = nullptr;
  REQUIRE(wf_mesh_parse_tmesh(text, &back) == WF_OK);
  char* again = nullptr;
  REQUIRE(wf_mesh_to_tmesh(back, &again) == WF_OK);
  CHECK(std::string(text) == std::string(again));
  wf_string_free(text);
  wf_string_free(again);
  wf_mesh_destroy(mesh);
  wf_mesh_destroy(back);

  wf_family f{};
  CHECK(wf_family_from_name("sliver", &f) == 1);
  CHECK(f == WF_FAMILY_SLIVER);
  CHECK(wf_family_from_name("nope", &f) == 0);
}
