#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"
#include "wfsplit/mesh_gen.hpp"
#include "wfsplit/report.hpp"

using namespace wfsplit;
using nlohmann::json;

TEST_CASE("nine significant digits") {
  CHECK(format_sig9(2119.6963745297151792) == "2119.69637");
  CHECK(format_sig9(0.5) == "0.5");
  CHECK(format_sig9(2.5000006250003125e-7) == "2.50000063e-07");
}

TEST_CASE("verification json fields") {
  const auto report = verify_mesh(gen_two_tet_skew(0.2));
  const auto j = json::parse(verification_report_json(report));
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].size() == 9);
  const auto& first = j["checks"][0];
  for (const char* key : {"id", "status", "worst_margin", "tolerance", "strict", "scope", "worst_index"}) {
    CHECK(first.contains(key));
  }
  CHECK(j["checks"][6]["id"] == "thm31");
  CHECK(j["checks"][6]["scope"] == "mesh");
  const auto& r = j["refined"];
  for (const char* key : {"children", "observed_wf_ratio", "c1_bound", "c2", "slack"}) CHECK(r.contains(key));
  CHECK(r["children"] == 24);
  CHECK(j["mesh"].contains("c0"));
  // Numbers are rounded to the printed precision.
  const double c1 = r["c1_bound"];
  CHECK(format_sig9(c1) == format_sig9(report.refined.c1));
  CHECK(std::stod(format_sig9(c1)) == c1);
}

TEST_CASE("verification text") {
  const auto text = verification_report_text(verify_mesh(gen_regular_tet()));
  CHECK(text.rfind("prop21 ", 0) == 0);
  CHECK(text.find("\nareaF ") != std::string::npos);
  CHECK(text.find("c0=2.44948974 observed_wf_ratio=") != std::string::npos);
  CHECK(text.find(" c1_bound=2119.69637 slack=") != std::string::npos);
}

TEST_CASE("analyze csv and json") {
  const auto s = analyze(gen_cube_kuhn(1));
  const auto csv = analyze_report_csv(s);
  CHECK(csv.rfind("vertices,tets,interior_faces,boundary_faces,c0,h_over_rho_min,h_over_rho_max,"
                  "dihedral_min,dihedral_max,min_face_touch_dist,min_split_dist\n8,6,6,12,4.18154055,",
                  0) == 0);
  const auto j = nlohmann::ordered_json::parse(analyze_report_json(s));
  CHECK(j["tets"] == 6);
  CHECK(j.begin().key() == "vertices");
}

TEST_CASE("sweep and provenance csv") {
  SweepResult sweep;
  sweep.records.push_back({0.5, 4.2, 15.75, 33134.2, 2103.2});
  CHECK(sweep_csv(sweep) == "eps,c0,observed,c1,slack\n0.5,4.2,15.75,33134.2,2103.2\n");
  const auto out = refine_k(gen_two_tet_mirror(), 2);
  const auto csv = provenance_csv(out);
  CHECK(csv.rfind("child_id,parent_id\n0,0\n", 0) == 0);
  CHECK(csv.find("\n287,1\n") != std::string::npos);
  CHECK(csv.substr(csv.size() - 6) == "287,1\n");
}

TEST_CASE("reports are byte-identical across runs") {
  const auto mesh = perturb(gen_cube_kuhn(2), 0.3, 8);
  CHECK(verification_report_json(verify_mesh(mesh)) == verification_report_json(verify_mesh(mesh)));
  CHECK(analyze_report_csv(analyze(mesh)) == analyze_report_csv(analyze(mesh)));
}
