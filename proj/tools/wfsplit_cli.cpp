// wfsplit command-line front end. Talks to the library only through the C
// interface in wfsplit/wfsplit.h.
//
// Exit codes: 0 success, 1 domain failure, 2 usage or I/O problem.

#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wfsplit/wfsplit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct MeshDeleter {
  void operator()(wf_mesh* m) const { wf_mesh_destroy(m); }
};
struct RefinementDeleter {
  void operator()(wf_refinement* r) const { wf_refinement_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { wf_string_free(s); }
};
using MeshPtr = std::unique_ptr<wf_mesh, MeshDeleter>;
using RefinementPtr = std::unique_ptr<wf_refinement, RefinementDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void report_error(const std::string& context, wf_status status) {
  std::fprintf(stderr, "wfsplit: %s: %s: %s\n", context.c_str(), wf_status_string(status), wf_last_error());
}

bool is_io_status(wf_status s) { return s == WF_ERR_IO; }

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Reads .msh through the Gmsh importer and everything else as .tmesh.
wf_status load_mesh(const std::string& path, MeshPtr& out) {
  wf_mesh* raw = nullptr;
  wf_status status;
  if (ends_with(path, ".msh")) {
    char* warnings = nullptr;
    status = wf_mesh_read_msh(path.c_str(), &raw, &warnings);
    StringPtr owned(warnings);
    if (warnings != nullptr && *warnings != '\0') std::fprintf(stderr, "wfsplit: warning: %s", warnings);
  } else {
    status = wf_mesh_read_tmesh(path.c_str(), &raw);
  }
  out.reset(raw);
  return status;
}

// Validation plus orientation canonicalization. Returns an exit code.
int prepare_mesh(wf_mesh* mesh, bool reject_inverted) {
  wf_validation v{};
  const wf_status status = wf_mesh_validate(mesh, &v);
  if (status != WF_OK) {
    report_error("validation failed", status);
    return kExitDomain;
  }
  if (v.orientation_fixes > 0) {
    if (reject_inverted) {
      std::fprintf(stderr, "wfsplit: validation failed: %zu inverted tetrahedra\n", v.orientation_fixes);
      return kExitDomain;
    }
    std::fprintf(stderr, "wfsplit: reoriented %zu tetrahedra\n", v.orientation_fixes);
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  int n = 1;
  double sigma = 0.0;
  double eps = 0.1;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_generate(const GenerateArgs& a) {
  wf_gen_spec spec{};
  if (!wf_family_from_name(a.family.c_str(), &spec.family)) {
    std::fprintf(stderr, "wfsplit: unknown family '%s'\n", a.family.c_str());
    return kExitUsage;
  }
  if (a.n < 1 || !(a.sigma >= 0.0 && a.sigma < 0.5) || !(a.eps > 0.0) || !std::isfinite(a.eps)) {
    std::fprintf(stderr, "wfsplit: need --n >= 1, 0 <= --sigma < 0.5 and --eps > 0\n");
    return kExitUsage;
  }
  spec.n = a.n;
  spec.sigma = a.sigma;
  spec.eps = a.eps;
  spec.seed = a.seed;
  wf_mesh* raw = nullptr;
  wf_status status = wf_generate(&spec, &raw);
  MeshPtr mesh(raw);
  if (status != WF_OK) {
    report_error("generation failed", status);
    return kExitDomain;
  }
  status = wf_mesh_write_tmesh(mesh.get(), a.output.c_str());
  if (status != WF_OK) {
    report_error("cannot write " + a.output, status);
    return kExitUsage;
  }
  std::printf("wrote %zu vertices, %zu tets to %s\n", wf_mesh_num_vertices(mesh.get()),
              wf_mesh_num_tets(mesh.get()), a.output.c_str());
  return kExitOk;
}

struct RefineArgs {
  std::string input;
  std::string output;
  std::string vtk;
  std::string provenance;
  int levels = 1;
};

int cmd_refine(const RefineArgs& a) {
  MeshPtr mesh;
  wf_status status = load_mesh(a.input, mesh);
  if (status != WF_OK) {
    report_error("cannot read " + a.input, status);
    return kExitDomain;
  }
  if (int code = prepare_mesh(mesh.get(), false); code != kExitOk) return code;

  wf_refinement* raw = nullptr;
  status = wf_refine(mesh.get(), a.levels, &raw);
  RefinementPtr refinement(raw);
  if (status != WF_OK) {
    report_error("refinement failed", status);
    return kExitDomain;
  }
  const wf_mesh* refined = wf_refinement_mesh(refinement.get());
  if ((status = wf_mesh_write_tmesh(refined, a.output.c_str())) != WF_OK) {
    report_error("cannot write " + a.output, status);
    return kExitUsage;
  }
  if (!a.vtk.empty() && (status = wf_mesh_write_vtk(refined, a.vtk.c_str())) != WF_OK) {
    report_error("cannot write " + a.vtk, status);
    return kExitUsage;
  }
  if (!a.provenance.empty() &&
      (status = wf_refinement_write_provenance(refinement.get(), a.provenance.c_str())) != WF_OK) {
    report_error("cannot write " + a.provenance, status);
    return kExitUsage;
  }
  std::printf("levels: %d\n", a.levels);
  std::printf("parent_tets: %zu\n", wf_mesh_num_tets(mesh.get()));
  std::printf("children: %zu\n", wf_mesh_num_tets(refined));
  std::printf("vertices: %zu\n", wf_mesh_num_vertices(refined));
  std::printf("volume_residual: %.9g\n", wf_refinement_volume_residual(refinement.get()));
  return kExitOk;
}

int cmd_analyze(const std::string& input, const std::string& format) {
  MeshPtr mesh;
  wf_status status = load_mesh(input, mesh);
  if (status != WF_OK) {
    report_error("cannot read " + input, status);
    return is_io_status(status) ? kExitUsage : kExitDomain;
  }
  if (wf_mesh_num_tets(mesh.get()) == 0) {
    std::fprintf(stderr, "wfsplit: no tetrahedra in %s\n", input.c_str());
    return kExitDomain;
  }
  if (int code = prepare_mesh(mesh.get(), false); code != kExitOk) return code;
  char* report = nullptr;
  status = wf_analyze(mesh.get(), format == "csv" ? WF_REPORT_CSV : WF_REPORT_JSON, &report);
  StringPtr owned(report);
  if (status != WF_OK) {
    report_error("analysis failed", status);
    return kExitDomain;
  }
  std::fputs(report, stdout);
  return kExitOk;
}

int cmd_verify(const std::string& input, std::optional<double> tolerance, const std::string& json_path) {
  MeshPtr mesh;
  wf_status status = load_mesh(input, mesh);
  if (status != WF_OK) {
    report_error("cannot read " + input, status);
    return kExitUsage;
  }
  if (wf_mesh_num_tets(mesh.get()) == 0) {
    std::fprintf(stderr, "wfsplit: no tetrahedra in %s\n", input.c_str());
    return kExitDomain;
  }
  if (int code = prepare_mesh(mesh.get(), true); code != kExitOk) return code;

  int all_pass = 0;
  char* json = nullptr;
  char* text = nullptr;
  status = wf_verify(mesh.get(), tolerance.value_or(-1.0), &all_pass, &json, &text);
  StringPtr owned_json(json), owned_text(text);
  if (status != WF_OK) {
    report_error("verification failed", status);
    return kExitDomain;
  }
  std::fputs(text, stdout);
  if (!json_path.empty()) {
    std::FILE* f = std::fopen(json_path.c_str(), "wb");
    if (f == nullptr || std::fputs(json, f) < 0) {
      if (f) std::fclose(f);
      std::fprintf(stderr, "wfsplit: cannot write %s\n", json_path.c_str());
      return kExitUsage;
    }
    std::fclose(f);
  }
  if (!all_pass) {
    std::fprintf(stderr, "wfsplit: one or more checks failed\n");
    return kExitDomain;
  }
  return kExitOk;
}

struct SweepArgs {
  std::string family = "sliver";
  double eps_from = 0.5;
  double eps_to = 0.005;
  int steps = 8;
  std::string out;
};

int cmd_sweep(const SweepArgs& a) {
  if (a.family != "sliver") {
    std::fprintf(stderr, "wfsplit: sweep supports --family sliver only\n");
    return kExitUsage;
  }
  if (!(a.eps_from > 0.0) || !(a.eps_to > 0.0) || a.steps < 1) {
    std::fprintf(stderr, "wfsplit: need positive --eps-from/--eps-to and --steps >= 1\n");
    return kExitUsage;
  }
  char* csv = nullptr;
  char* notes = nullptr;
  const wf_status status = wf_sweep_sliver(a.eps_from, a.eps_to, a.steps, &csv, &notes);
  StringPtr owned_csv(csv), owned_notes(notes);
  if (status != WF_OK) {
    report_error("sweep failed", status);
    return kExitDomain;
  }
  if (notes != nullptr && *notes != '\0') std::fputs(notes, stderr);
  if (a.out.empty()) {
    std::fputs(csv, stdout);
    return kExitOk;
  }
  std::FILE* f = std::fopen(a.out.c_str(), "wb");
  if (f == nullptr || std::fputs(csv, f) < 0) {
    if (f) std::fclose(f);
    std::fprintf(stderr, "wfsplit: cannot write %s\n", a.out.c_str());
    return kExitUsage;
  }
  std::fclose(f);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Worsey-Farin refinement and shape-regularity verification for tetrahedral meshes"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated mesh as .tmesh");
  generate->add_option("--family", gen.family,
                       "cube_kuhn, perturbed_cube, sliver, two_tet_mirror, two_tet_skew or regular_tet")
      ->required();
  generate->add_option("--n", gen.n, "Cells per cube side");
  generate->add_option("--sigma", gen.sigma, "Perturbation as a fraction of the local edge length");
  generate->add_option("--eps", gen.eps, "Sliver height or skew offset");
  generate->add_option("--seed", gen.seed, "Perturbation seed");
  generate->add_option("-o,--output", gen.output, "Output .tmesh")->required();

  RefineArgs ref;
  auto* refine = app.add_subcommand("refine", "Apply Worsey-Farin refinement");
  refine->add_option("-i,--input", ref.input, "Input .tmesh or .msh")->required();
  refine->add_option("-o,--output", ref.output, "Output .tmesh")->required();
  refine->add_option("--vtk", ref.vtk, "Also write a legacy VTK file");
  refine->add_option("--provenance", ref.provenance, "Write child_id,parent_id CSV");
  refine->add_option("--levels", ref.levels, "Number of refinement levels")->check(CLI::PositiveNumber);

  std::string analyze_input, analyze_format = "json";
  auto* analyze = app.add_subcommand("analyze", "Report shape statistics of a mesh");
  analyze->add_option("-i,--input", analyze_input, "Input .tmesh or .msh")->required();
  analyze->add_option("--report", analyze_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string verify_input, verify_json;
  std::optional<double> verify_tolerance;
  auto* verify = app.add_subcommand("verify", "Check every inequality on a mesh and its refinement");
  verify->add_option("-i,--input", verify_input, "Input .tmesh or .msh")->required();
  verify->add_option("--tolerance", verify_tolerance, "Override the per-check tolerances")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--json", verify_json, "Also write the JSON report here");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Tabulate observed regularity against the bound");
  sweep->add_option("--family", sw.family, "Only sliver is supported");
  sweep->add_option("--eps-from", sw.eps_from, "First eps");
  sweep->add_option("--eps-to", sw.eps_to, "Last eps");
  sweep->add_option("--steps", sw.steps, "Number of geometrically spaced values");
  sweep->add_option("--out", sw.out, "CSV output (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (generate->parsed()) return cmd_generate(gen);
  if (refine->parsed()) return cmd_refine(ref);
  if (analyze->parsed()) return cmd_analyze(analyze_input, analyze_format);
  if (verify->parsed()) return cmd_verify(verify_input, verify_tolerance, verify_json);
  if (sweep->parsed()) return cmd_sweep(sw);
  return kExitUsage;
}
