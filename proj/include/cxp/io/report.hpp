#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cxp/dual.hpp"
#include "cxp/polyhedron.hpp"

namespace cxp::io {

using Json = nlohmann::ordered_json;

/// Compact JSON with every floating-point number written to 17 significant
/// digits. Non-finite numbers become null.
std::string serialize_json(const Json& value);

struct ReportDocument {
  Json input = Json::object();
  Json vertices = Json::array();
  Json edges = Json::array();
  Json faces = Json::array();
  Json census = Json::object();
  Json dual = nullptr;
  Json checks = Json::array();
  Json conflicts = Json::array();

  Json to_json() const;
  static ReportDocument from_json(const Json& j);  // throws Error on missing keys

  std::string serialize() const { return serialize_json(to_json()) + "\n"; }
  static ReportDocument parse(std::string_view text);

  bool operator==(const ReportDocument&) const = default;
};

Json vertices_json(const Polyhedron& poly);
Json edges_json(const Polyhedron& poly);
Json faces_json(const Polyhedron& poly);
Json census_json(const Census& c);
Json dual_json(const DualSolid& dual, const CoxeterSystem& system, const WeightIndices& w,
               const TransitivityResult& transitivity, double orthogonality_error,
               double planarity_error);

}  // namespace cxp::io
