#include "wfsplit/report.hpp"

#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace wfsplit {

namespace {

using ojson = nlohmann::ordered_json;

double round9(double v) { return std::strtod(format_sig9(v).c_str(), nullptr); }

ojson summary_json(const MeshSummary& s) {
  ojson j;
  j["vertices"] = s.vertices;
  j["tets"] = s.tets;
  j["interior_faces"] = s.interior_faces;
  j["boundary_faces"] = s.boundary_faces;
  j["c0"] = round9(s.c0);
  j["h_over_rho_min"] = round9(s.aspect_min);
  j["h_over_rho_max"] = round9(s.aspect_max);
  j["dihedral_min"] = round9(s.dihedral_min);
  j["dihedral_max"] = round9(s.dihedral_max);
  j["min_face_touch_dist"] = round9(s.min_face_touch_dist);
  j["min_split_dist"] = round9(s.min_split_dist);
  return j;
}

}  // namespace

std::string format_sig9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string analyze_report_json(const MeshSummary& summary) { return summary_json(summary).dump(2) + "\n"; }

std::string analyze_report_csv(const MeshSummary& s) {
  std::string out =
      "vertices,tets,interior_faces,boundary_faces,c0,h_over_rho_min,h_over_rho_max,dihedral_min,"
      "dihedral_max,min_face_touch_dist,min_split_dist\n";
  out += std::to_string(s.vertices) + "," + std::to_string(s.tets) + "," + std::to_string(s.interior_faces) + "," +
         std::to_string(s.boundary_faces) + "," + format_sig9(s.c0) + "," + format_sig9(s.aspect_min) + "," +
         format_sig9(s.aspect_max) + "," + format_sig9(s.dihedral_min) + "," + format_sig9(s.dihedral_max) + "," +
         format_sig9(s.min_face_touch_dist) + "," + format_sig9(s.min_split_dist) + "\n";
  return out;
}

std::string verification_report_json(const VerificationReport& report) {
  ojson j;
  j["pass"] = report.all_pass();
  ojson checks = ojson::array();
  for (const auto& c : report.checks) {
    ojson cj;
    cj["id"] = check_name(c.id);
    cj["status"] = c.pass ? "pass" : "fail";
    cj["worst_margin"] = round9(c.worst_margin);
    cj["tolerance"] = c.tolerance;
    cj["strict"] = c.strict;
    cj["scope"] = c.scope;
    cj["worst_index"] = c.worst_index;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["mesh"] = summary_json(report.mesh);
  ojson r;
  r["children"] = report.refined.children;
  r["observed_wf_ratio"] = round9(report.refined.observed);
  r["c1_bound"] = round9(report.refined.c1);
  r["c2"] = round9(report.refined.c2);
  r["slack"] = round9(report.refined.slack);
  j["refined"] = std::move(r);
  return j.dump(2) + "\n";
}

std::string verification_report_text(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-16s %-4s worst_margin=%s\n", check_name(c.id), c.pass ? "pass" : "FAIL",
                  format_sig9(c.worst_margin).c_str());
    out += line;
  }
  out += "c0=" + format_sig9(report.mesh.c0) + " observed_wf_ratio=" + format_sig9(report.refined.observed) +
         " c1_bound=" + format_sig9(report.refined.c1) + " slack=" + format_sig9(report.refined.slack) + "\n";
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "eps,c0,observed,c1,slack\n";
  for (const auto& r : sweep.records) {
    out += format_sig9(r.param) + "," + format_sig9(r.c0) + "," + format_sig9(r.observed) + "," + format_sig9(r.c1) +
           "," + format_sig9(r.slack) + "\n";
  }
  return out;
}

std::string provenance_csv(const RefinementOutput& out) {
  std::string csv = "child_id,parent_id\n";
  csv.reserve(csv.size() + 16 * out.root_parent.size());
  for (std::size_t c = 0; c < out.root_parent.size(); ++c) {
    csv += std::to_string(c);
    csv += ',';
    csv += std::to_string(out.root_parent[c]);
    csv += '\n';
  }
  return csv;
}

}  // namespace wfsplit
