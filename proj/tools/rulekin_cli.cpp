// Command line front end: curve-spec ingestion, invariant reports, relation
// verification, and ruled-surface mesh export. Reports go to stdout or -o;
// diagnostics go to stderr. Exit codes: 0 success, 1 validation error,
// 2 verification failures present in the report.
#include <rulekin/rulekin.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

struct Cmd {
  std::string file;
  std::string out;
  std::string surface;
  double phi = 0.0;
  double phistar = 0.0;
  double tol_abs = 1e-8;
  double tol_rel = 1e-6;
  double half_width = 1.0;
  std::size_t samples = 0;
  CLI::Option* phi_opt = nullptr;
  CLI::Option* phistar_opt = nullptr;
  CLI::Option* samples_opt = nullptr;
};

// File phi is the default; explicit flags override it part by part.
rulekin::DualScalar resolve_phi(const rulekin::CurveFile& cf, const Cmd& cmd) {
  rulekin::DualScalar phi = cf.phi.value_or(rulekin::DualScalar{});
  if (cmd.phi_opt != nullptr && cmd.phi_opt->count() > 0) phi.real = cmd.phi;
  if (cmd.phistar_opt != nullptr && cmd.phistar_opt->count() > 0) phi.dual = cmd.phistar;
  return phi;
}

ordered_json curve_summary(const rulekin::CurveSpec& spec, std::size_t samples) {
  ordered_json j;
  j["family"] = std::holds_alternative<rulekin::HyperboloidCircle>(spec.director)
                    ? "hyperboloid_circle"
                    : "fourier";
  j["samples"] = samples;
  j["period"] = spec.period;
  return j;
}

void emit_doc(const ordered_json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    rulekin::write_text_atomic(out_path, text);
  }
}

rulekin::SampledFrame frame_of(const rulekin::CurveFile& cf, std::size_t n) {
  return rulekin::frenet(rulekin::sample_curve(cf.spec, n), cf.spec.period);
}

int run_invariants(const Cmd& cmd) {
  const rulekin::CurveFile cf = rulekin::load_curve_file(cmd.file);
  const rulekin::SampledFrame f = frame_of(cf, cf.samples);

  const rulekin::InvariantTriple u1 = rulekin::axis_invariants(f, rulekin::UAxis::U1);
  const rulekin::InvariantTriple u2 = rulekin::axis_invariants(f, rulekin::UAxis::U2);
  const rulekin::InvariantTriple u3 = rulekin::axis_invariants(f, rulekin::UAxis::U3);
  std::optional<rulekin::InvariantTriple> c;
  std::string c_issue;
  try {
    c = rulekin::pfaff_axis_invariants(f, rulekin::pfaffian(f));
  } catch (const rulekin::Error& e) {
    c_issue = e.what();
  }

  ordered_json doc;
  doc["version"] = rulekin::kVersion;
  doc["command"] = "invariants";
  doc["curve"] = curve_summary(cf.spec, cf.samples);
  ordered_json lam;
  lam["Lambda_U1"] = rulekin::detail::dual_json(u1.Lambda);
  lam["Lambda_U2"] = rulekin::detail::dual_json(u2.Lambda);
  lam["Lambda_U3"] = rulekin::detail::dual_json(u3.Lambda);
  if (c) lam["Lambda_C"] = rulekin::detail::dual_json(c->Lambda);
  doc["invariants"] = std::move(lam);
  ordered_json surfaces = ordered_json::array();
  surfaces.push_back(rulekin::detail::triple_json(u1));
  surfaces.push_back(rulekin::detail::triple_json(u2));
  surfaces.push_back(rulekin::detail::triple_json(u3));
  if (c) surfaces.push_back(rulekin::detail::triple_json(*c));
  doc["surfaces"] = std::move(surfaces);
  if (!c_issue.empty()) doc["notes"] = ordered_json::array({"C: " + c_issue});
  doc["relations"] = ordered_json::array();

  emit_doc(doc, cmd.out);
  if (!c_issue.empty()) {
    std::cerr << "note: stationary axis surface unavailable: " << c_issue << '\n';
  }
  return 0;
}

int run_parallel(const Cmd& cmd) {
  const rulekin::CurveFile cf = rulekin::load_curve_file(cmd.file);
  const rulekin::SampledFrame f = frame_of(cf, cf.samples);
  const rulekin::DualScalar phi = resolve_phi(cf, cmd);
  const rulekin::ParallelFrame p = rulekin::parallel_frame(f, {phi});

  const rulekin::InvariantTriple v1 = rulekin::v_axis_invariants(p, rulekin::VAxis::V1);
  const rulekin::InvariantTriple v2 = rulekin::v_axis_invariants(p, rulekin::VAxis::V2);
  const rulekin::InvariantTriple v3 = rulekin::v_axis_invariants(p, rulekin::VAxis::V3);
  std::optional<rulekin::InvariantTriple> cb;
  std::string cb_issue;
  try {
    cb = rulekin::cbar_invariants(p);
  } catch (const rulekin::Error& e) {
    cb_issue = e.what();
  }

  ordered_json doc;
  doc["version"] = rulekin::kVersion;
  doc["command"] = "parallel";
  doc["curve"] = curve_summary(cf.spec, cf.samples);
  doc["phi"] = rulekin::detail::dual_json(phi);
  ordered_json lam;
  lam["Lambda_V1"] = rulekin::detail::dual_json(v1.Lambda);
  lam["Lambda_V2"] = rulekin::detail::dual_json(v2.Lambda);
  lam["Lambda_V3"] = rulekin::detail::dual_json(v3.Lambda);
  if (cb) lam["Lambda_Cbar"] = rulekin::detail::dual_json(cb->Lambda);
  doc["invariants"] = std::move(lam);
  ordered_json surfaces = ordered_json::array();
  surfaces.push_back(rulekin::detail::triple_json(v1));
  surfaces.push_back(rulekin::detail::triple_json(v2));
  surfaces.push_back(rulekin::detail::triple_json(v3));
  if (cb) surfaces.push_back(rulekin::detail::triple_json(*cb));
  doc["surfaces"] = std::move(surfaces);
  if (!cb_issue.empty()) doc["notes"] = ordered_json::array({"Cbar: " + cb_issue});
  doc["relations"] = ordered_json::array();

  emit_doc(doc, cmd.out);
  if (!cb_issue.empty()) {
    std::cerr << "note: parallel axis surface unavailable: " << cb_issue << '\n';
  }
  return 0;
}

int run_verify(const Cmd& cmd) {
  const rulekin::CurveFile cf = rulekin::load_curve_file(cmd.file);
  const std::size_t n = cmd.samples_opt->count() > 0 ? cmd.samples : cf.samples;
  const rulekin::DualScalar phi = resolve_phi(cf, cmd);
  const rulekin::RelationReport r =
      rulekin::verify_relations(cf.spec, {phi}, n, cmd.tol_abs, cmd.tol_rel);

  const ordered_json base = rulekin::report_json(r);
  ordered_json doc;
  doc["version"] = base.at("version");
  doc["command"] = base.at("command");
  doc["curve"] = curve_summary(cf.spec, n);
  doc["phi"] = rulekin::detail::dual_json(phi);
  doc["samples"] = base.at("samples");
  doc["tolerances"] = base.at("tolerances");
  doc["summary"] = base.at("summary");
  doc["relations"] = base.at("relations");

  emit_doc(doc, cmd.out);
  if (r.failures() > 0) {
    std::cerr << r.failures() << " relation(s) failed out of " << r.entries.size() << '\n';
    return 2;
  }
  return 0;
}

int run_mesh(const Cmd& cmd) {
  const rulekin::CurveFile cf = rulekin::load_curve_file(cmd.file);
  const rulekin::SampledFrame f = frame_of(cf, cf.samples);

  std::vector<rulekin::DualVec3> rulings;
  if (cmd.surface == "U1") {
    rulings = f.U1;
  } else if (cmd.surface == "C") {
    rulings = rulekin::pfaffian(f).axis;
  } else {
    const rulekin::DualScalar phi = resolve_phi(cf, cmd);
    const rulekin::ParallelFrame p = rulekin::parallel_frame(f, {phi});
    if (cmd.surface == "V1") {
      rulings = p.V1;
    } else {
      if (p.cbar.empty()) {
        std::cerr << "error: Cbar axis unavailable: " << p.case_bar_issue << '\n';
        return 1;
      }
      rulings = p.cbar;
    }
  }

  rulekin::write_ruled_mesh(cmd.out, rulings, cmd.half_width);
  std::cerr << "wrote " << rulings.size() << " rulings to " << cmd.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral invariants of closed ruled surfaces, computed on the dual Lorentzian unit sphere"};
  app.require_subcommand(1);

  Cmd inv, par, ver, mesh;

  CLI::App* c_inv = app.add_subcommand(
      "invariants", "pitch, dual angle of pitch, and drall of the frame axis surfaces");
  c_inv->add_option("file", inv.file, "curve spec JSON file")->required();
  c_inv->add_option("-o,--output", inv.out, "write the report here instead of stdout");

  CLI::App* c_par = app.add_subcommand(
      "parallel", "the same invariants for the offset frame at dual angle phi");
  c_par->add_option("file", par.file, "curve spec JSON file")->required();
  par.phi_opt = c_par->add_option("--phi", par.phi, "offset angle, real part (overrides the file)");
  par.phistar_opt =
      c_par->add_option("--phistar", par.phistar, "offset angle, dual part (overrides the file)");
  c_par->add_option("-o,--output", par.out, "write the report here instead of stdout");

  CLI::App* c_ver = app.add_subcommand(
      "verify", "recompute every cataloged identity along two independent paths");
  c_ver->add_option("file", ver.file, "curve spec JSON file")->required();
  ver.phi_opt = c_ver->add_option("--phi", ver.phi, "offset angle, real part (overrides the file)");
  ver.phistar_opt =
      c_ver->add_option("--phistar", ver.phistar, "offset angle, dual part (overrides the file)");
  ver.samples_opt =
      c_ver->add_option("--samples", ver.samples, "grid size (overrides the file)");
  c_ver->add_option("--tol-abs", ver.tol_abs, "absolute tolerance (default 1e-8)");
  c_ver->add_option("--tol-rel", ver.tol_rel, "relative tolerance (default 1e-6)");
  c_ver->add_option("-o,--output", ver.out, "write the report here instead of stdout");

  CLI::App* c_mesh =
      app.add_subcommand("mesh", "export one ruled surface as a Wavefront OBJ mesh");
  c_mesh->add_option("file", mesh.file, "curve spec JSON file")->required();
  c_mesh->add_option("--surface", mesh.surface, "which ruled surface to export")
      ->required()
      ->check(CLI::IsMember({"U1", "V1", "C", "Cbar"}));
  c_mesh->add_option("--half-width", mesh.half_width, "ruling half length (default 1.0)")
      ->check(CLI::PositiveNumber);
  mesh.phi_opt =
      c_mesh->add_option("--phi", mesh.phi, "offset angle, real part (overrides the file)");
  mesh.phistar_opt =
      c_mesh->add_option("--phistar", mesh.phistar, "offset angle, dual part (overrides the file)");
  c_mesh->add_option("-o,--output", mesh.out, "output OBJ path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_inv->parsed()) return run_invariants(inv);
    if (c_par->parsed()) return run_parallel(par);
    if (c_ver->parsed()) return run_verify(ver);
    if (c_mesh->parsed()) return run_mesh(mesh);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
