#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "cxp/errors.hpp"
#include "cxp/io/catalog.hpp"
#include "cxp/io/indices.hpp"
#include "cxp/io/mesh.hpp"
#include "cxp/io/report.hpp"
#include "cxp/io/verify.hpp"

namespace cxp::cli {

namespace {

using io::Json;

// Bad input attributed to one flag.
struct FlagError {
  std::string flag;
  std::string message;
};

struct SelectionFlags {
  std::string group;
  std::string indices;
  bool sigma_scale = false;
  bool chiral = false;
};

struct OutputFlags {
  std::string mesh;
  std::string report;
  bool normalize = false;
};

void add_selection(CLI::App* app, SelectionFlags& f, bool required) {
  auto* g = app->add_option("--group", f.group, "a3, b3 or h3");
  auto* i = app->add_option("--indices", f.indices, "A1,A2,A3; tokens tau, sigma, sqrt2 and '*' allowed");
  if (required) {
    g->required();
    i->required();
  }
  app->add_flag("--sigma-scale", f.sigma_scale, "H3 only: sigma-scaled convention, (0 1 0) is a unit vector");
}

void add_output(CLI::App* app, OutputFlags& f) {
  app->add_option("--mesh", f.mesh, "output mesh, .off or .obj");
  app->add_option("--report", f.report, "output JSON report");
  app->add_flag("--normalize-circumradius", f.normalize, "rescale the mesh to a unit circumsphere");
}

io::Selection make_selection(const SelectionFlags& f) {
  const auto d = parse_diagram(f.group);
  if (!d) throw FlagError{"--group", "unknown group '" + f.group + "' (use a3, b3 or h3)"};
  if (f.sigma_scale && *d != Diagram::H3) throw FlagError{"--sigma-scale", "only applies to h3"};
  io::Selection sel;
  try {
    sel.indices = io::parse_indices(f.indices, *d, f.sigma_scale);
  } catch (const InvalidIndices& e) {
    throw FlagError{"--indices", e.what()};
  }
  sel.chiral = f.chiral;
  sel.entry = io::match_entry(sel.indices, sel.chiral);
  sel.label = std::string(diagram_name(*d)) + " " + f.indices + (f.sigma_scale ? " sigma" : "") +
              (f.chiral ? " chiral" : "");
  return sel;
}

Json input_json(const std::string& command, const io::Selection& sel, const std::string& indices_text,
                const OutputFlags& out) {
  return {{"command", command},
          {"name", sel.entry ? Json(sel.entry->name) : Json(nullptr)},
          {"group", std::string(diagram_name(sel.indices.group))},
          {"indices_text", indices_text},
          {"indices", Json::array({sel.indices.a1, sel.indices.a2, sel.indices.a3})},
          {"sigma_scale", sel.indices.sigma_scaled()},
          {"chiral", sel.chiral},
          {"normalize_circumradius", out.normalize}};
}

std::optional<io::MeshFormat> mesh_format(const OutputFlags& out) {
  if (out.mesh.empty()) return std::nullopt;
  try {
    return io::format_for_path(out.mesh);
  } catch (const Error& e) {
    throw FlagError{"--mesh", e.what()};
  }
}

double circumradius(const Polyhedron& p) {
  double r = 0.0;
  for (const auto& v : p.vertices) r = std::max(r, v.norm());
  return r;
}

void append(Json& checks, const std::vector<io::CheckResult>& more) {
  for (auto& c : io::checks_json(more)) checks.push_back(c);
}

bool any_failed(const Json& checks) {
  return std::any_of(checks.begin(), checks.end(), [](const Json& c) { return c.at("status") == "fail"; });
}

// Fills the geometry part of a report from a mesh, applying the optional rescale.
Polyhedron fill_geometry(io::ReportDocument& doc, const Polyhedron& mesh, bool normalize) {
  const double factor = normalize ? 1.0 / circumradius(mesh) : 1.0;
  Polyhedron out = normalize ? io::scaled(mesh, factor) : mesh;
  doc.input["mesh_scale"] = factor;
  doc.vertices = io::vertices_json(out);
  doc.edges = io::edges_json(out);
  doc.faces = io::faces_json(out);
  doc.census = io::census_json(census(out));
  return out;
}

int finish(const io::ReportDocument& doc, const Polyhedron& mesh, const OutputFlags& out,
           std::optional<io::MeshFormat> format, std::ostream& os) {
  if (format) io::write_atomic(out.mesh, io::export_mesh(mesh, *format));
  if (!out.report.empty()) io::write_atomic(out.report, doc.serialize());
  const bool failed = any_failed(doc.checks);
  os << "V=" << mesh.V() << " E=" << mesh.E() << " F=" << mesh.F() << " chi=" << mesh.euler_characteristic()
     << (failed ? " checks=FAIL" : " checks=ok");
  if (!doc.conflicts.empty()) os << " conflicts=" << doc.conflicts.size();
  os << "\n";
  return failed ? 2 : 0;
}

int run_generate(const io::Selection& sel, const std::string& command, const std::string& indices_text,
                 const OutputFlags& out, std::ostream& os) {
  const auto format = mesh_format(out);
  const ReflectionGroup group = generate_group(build_system(sel.indices.group));
  io::ReportDocument doc;
  doc.input = input_json(command, sel, indices_text, out);
  append(doc.checks, io::group_checks(group));

  Polyhedron primal;
  if (sel.chiral) {
    const Quaternion lambda = indices_to_vector(group.system(), sel.indices);
    primal = polyhedron_from_hull(orbit(named_subgroup(group, Subgroup::Chiral), lambda).vertices);
    append(doc.checks, io::primal_checks(group, sel, primal));
    append(doc.checks, io::chiral_checks(group, sel.indices));
  } else {
    primal = build_polyhedron(group, sel.indices);
    append(doc.checks, io::primal_checks(group, sel, primal));
    const auto conflicts = io::known_conflicts(group.system(), sel.indices, primal, nullptr);
    doc.conflicts = io::conflicts_json(conflicts);
  }
  const Polyhedron mesh = fill_geometry(doc, primal, out.normalize);
  return finish(doc, mesh, out, format, os);
}

int run_dual(const io::Selection& sel, const std::string& indices_text, const OutputFlags& out,
             std::ostream& os) {
  if (sel.chiral) throw FlagError{"--chiral", "no dual is built for rotation-subgroup orbits"};
  const auto format = mesh_format(out);
  const ReflectionGroup group = generate_group(build_system(sel.indices.group));
  const Polyhedron primal = build_polyhedron(group, sel.indices);
  const DualSolid dual = build_dual(primal, group, sel.indices);

  io::ReportDocument doc;
  doc.input = input_json("dual", sel, indices_text, out);
  append(doc.checks, io::group_checks(group));
  append(doc.checks, io::primal_checks(group, sel, primal));
  append(doc.checks, io::dual_checks(group, sel, primal, dual));
  const auto t = face_transitivity_check(dual, group);
  doc.dual = io::dual_json(dual, group.system(), sel.indices, t, max_orthogonality_error(primal, dual),
                           max_dual_planarity_error(dual));
  doc.conflicts = io::conflicts_json(io::known_conflicts(group.system(), sel.indices, primal, &dual));
  const Polyhedron mesh = fill_geometry(doc, dual.mesh, out.normalize);
  doc.dual["provenance"] = dual.provenance;
  os << "scale factors:";
  for (int k : dual.spec.contributing_weights) os << " w" << k << "=" << dual.spec.factor(k);
  os << "\n";
  return finish(doc, mesh, out, format, os);
}

std::string catalog_names() {
  std::string s;
  for (const auto& e : io::catalog()) s += (s.empty() ? "" : ", ") + e.name;
  return s;
}

std::string format_indices(const WeightIndices& w) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", w.a1, w.a2, w.a3);
  return buf;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit polyhedra of the A3, B3 and H3 reflection groups"};
  app.require_subcommand(1);

  SelectionFlags gen_sel, dual_sel, ver_sel;
  OutputFlags gen_out, dual_out, cat_out;
  auto* gen = app.add_subcommand("generate", "orbit polyhedron of the given indices");
  add_selection(gen, gen_sel, true);
  gen->add_flag("--chiral", gen_sel.chiral, "orbit of the rotation subgroup; faces from the convex hull");
  add_output(gen, gen_out);

  auto* dual = app.add_subcommand("dual", "dual of the orbit polyhedron");
  add_selection(dual, dual_sel, true);
  dual->add_flag("--chiral", dual_sel.chiral, "not supported for duals");
  add_output(dual, dual_out);

  bool list = false;
  std::string name;
  auto* cat = app.add_subcommand("catalog", "named solids");
  auto* list_opt = cat->add_flag("--list", list, "print every name");
  cat->add_option("--name", name, "entry to build")->excludes(list_opt);
  add_output(cat, cat_out);

  bool all_catalog = false;
  std::string verify_report;
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  add_selection(ver, ver_sel, false);
  ver->add_flag("--chiral", ver_sel.chiral, "rotation-subgroup orbit");
  ver->add_flag("--all-catalog", all_catalog, "every catalog entry");
  ver->add_option("--report", verify_report, "write the JSON result here instead of stdout");

  if (argc > 1 && argv[1][0] != '-') {
    const std::string command = argv[1];
    if (command != "generate" && command != "dual" && command != "catalog" && command != "verify") {
      err << "error: unknown command '" << command << "' (use generate, dual, catalog or verify)\n";
      return 1;
    }
  }
  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) return run_generate(make_selection(gen_sel), "generate", gen_sel.indices, gen_out, out);
    if (dual->parsed()) return run_dual(make_selection(dual_sel), dual_sel.indices, dual_out, out);
    if (cat->parsed()) {
      if (list) {
        for (const auto& e : io::catalog()) out << e.name << "\n";
        return 0;
      }
      if (name.empty()) throw FlagError{"--name", "give --list or --name NAME"};
      const auto* entry = io::find_entry(name);
      if (!entry) throw FlagError{"--name", "unknown catalog name '" + name + "'; valid names: " + catalog_names()};
      io::Selection sel{entry->indices, entry->chiral, entry, entry->name};
      return run_generate(sel, "catalog", format_indices(entry->indices), cat_out, out);
    }
    if (ver->parsed()) {
      std::vector<io::VerifyResult> results;
      if (all_catalog) {
        if (!ver_sel.group.empty() || !ver_sel.indices.empty())
          throw FlagError{"--all-catalog", "cannot be combined with --group/--indices"};
        results = io::verify_catalog();
      } else {
        if (ver_sel.group.empty()) throw FlagError{"--group", "required unless --all-catalog is given"};
        if (ver_sel.indices.empty()) throw FlagError{"--indices", "required unless --all-catalog is given"};
        results.push_back(io::verify_selection(make_selection(ver_sel)));
      }
      const Json j = io::verify_json(results);
      if (verify_report.empty()) {
        out << io::serialize_json(j) << "\n";
      } else {
        io::write_atomic(verify_report, io::serialize_json(j) + "\n");
        const auto& s = j.at("summary");
        out << "verify: " << s.at("entries") << " entries, " << s.at("passed") << " passed, " << s.at("failed")
            << " failed, " << s.at("flagged") << " flagged, " << s.at("skipped") << " skipped\n";
      }
      return j.at("summary").at("ok").get<bool>() ? 0 : 2;
    }
  } catch (const FlagError& e) {
    err << "error: " << e.flag << ": " << e.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cxp::cli
