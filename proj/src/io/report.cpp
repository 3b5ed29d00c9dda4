#include "cxp/io/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "cxp/errors.hpp"

namespace cxp::io {

namespace {

void write_number(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
  // Keep floats recognisable as floats after a round trip.
  if (!std::strpbrk(buf, ".eE")) out += ".0";
}

void write(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        write(out, it.value());
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        write(out, item);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

Json point(const Quaternion& v) { return Json::array({v.q1, v.q2, v.q3}); }

constexpr const char* kKeys[] = {"input", "vertices", "edges", "faces", "census", "dual", "checks", "conflicts"};

}  // namespace

std::string serialize_json(const Json& value) {
  std::string out;
  write(out, value);
  return out;
}

Json ReportDocument::to_json() const {
  Json j = Json::object();
  j["input"] = input;
  j["vertices"] = vertices;
  j["edges"] = edges;
  j["faces"] = faces;
  j["census"] = census;
  j["dual"] = dual;
  j["checks"] = checks;
  j["conflicts"] = conflicts;
  return j;
}

ReportDocument ReportDocument::from_json(const Json& j) {
  if (!j.is_object()) throw Error("report: top level is not an object");
  for (const char* key : kKeys)
    if (!j.contains(key)) throw Error(std::string("report: missing key ") + key);
  ReportDocument d;
  d.input = j.at("input");
  d.vertices = j.at("vertices");
  d.edges = j.at("edges");
  d.faces = j.at("faces");
  d.census = j.at("census");
  d.dual = j.at("dual");
  d.checks = j.at("checks");
  d.conflicts = j.at("conflicts");
  return d;
}

ReportDocument ReportDocument::parse(std::string_view text) {
  try {
    return from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw Error(std::string("report: ") + e.what());
  }
}

Json vertices_json(const Polyhedron& poly) {
  Json out = Json::array();
  for (const auto& v : poly.vertices) out.push_back(point(v));
  return out;
}

Json edges_json(const Polyhedron& poly) {
  Json out = Json::array();
  for (const auto& e : poly.edges) out.push_back({{"a", e.a}, {"b", e.b}, {"tag", e.tag}, {"length", e.length}});
  return out;
}

Json faces_json(const Polyhedron& poly) {
  Json out = Json::array();
  for (const auto& f : poly.faces) {
    out.push_back({{"cycle", f.cycle},
                   {"kind", f.kind.label()},
                   {"weight_class", f.weight_class},
                   {"edge_lengths", f.kind.edge_lengths},
                   {"interior_angles", f.kind.interior_angles}});
  }
  return out;
}

Json census_json(const Census& c) {
  Json kinds = Json::object();
  for (const auto& [k, n] : c.face_kinds) kinds[k] = n;
  Json tags = Json::object();
  for (const auto& [t, n] : c.edge_tags) tags[std::to_string(t)] = n;
  return {{"V", c.V},           {"E", c.E},          {"F", c.F},
          {"chi", c.chi},       {"euler_ok", c.euler_ok}, {"face_kinds", kinds},
          {"edge_tags", tags},  {"sphere_radii", c.sphere_radii}};
}

Json dual_json(const DualSolid& dual, const CoxeterSystem& system, const WeightIndices& w,
               const TransitivityResult& transitivity, double orthogonality_error,
               double planarity_error) {
  Json radii = Json::array();
  for (std::size_t i = 0; i < dual.spec.contributing_weights.size(); ++i) {
    radii.push_back({{"weight", dual.spec.contributing_weights[i]},
                     {"scale", dual.spec.factor(dual.spec.contributing_weights[i])},
                     {"radius", dual.sphere_radii[i]}});
  }
  Json formulas = Json::array();
  for (const auto& f : closed_form_scale_validation(system, w)) {
    formulas.push_back({{"name", f.name},
                        {"weight", f.weight},
                        {"reference", f.reference},
                        {"published", f.published},
                        {"solved", f.solved},
                        {"abs_diff", f.abs_diff}});
  }
  Json kinds = Json::object();
  for (const auto& [k, n] : census(dual.mesh).face_kinds) kinds[k] = n;
  Json failing = nullptr;
  if (transitivity.failing_pair)
    failing = Json::array({transitivity.failing_pair->first, transitivity.failing_pair->second});
  return {{"reference_weight", dual.spec.reference_weight},
          {"contributing_weights", dual.spec.contributing_weights},
          {"scale_factors", dual.spec.scale_factors},
          {"sphere_radii", radii},
          {"formulas", formulas},
          {"face_kinds", kinds},
          {"expected_face_kind", shape_label(dual.spec.face_kind_expected, dual.spec.expected_sides)},
          {"face_transitive", transitivity.transitive},
          {"failing_pair", failing},
          {"orthogonality_error", orthogonality_error},
          {"planarity_error", planarity_error}};
}

}  // namespace cxp::io
