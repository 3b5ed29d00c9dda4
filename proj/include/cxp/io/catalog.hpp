#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cxp/coxeter.hpp"
#include "cxp/orbit.hpp"

namespace cxp::io {

struct ExpectedCensus {
  std::size_t V = 0;
  std::size_t E = 0;
  std::size_t F = 0;
  std::map<std::string, std::size_t> face_kinds;
};

/// Radius s_k |w_k| of the dual vertices coming from w_k.
struct ExpectedRadius {
  int weight = 0;
  double value = 0.0;
  double tol = 0.0;
};

/// Dual scale factor s_k, with the reference weight normalised to 1.
struct ExpectedScale {
  int weight = 0;
  int reference = 0;
  double value = 0.0;
  double tol = 0.0;
};

/// Geometry every face of the given kind must have.
struct ExpectedFaceGeometry {
  std::string kind;
  std::optional<double> interior_angle;  // degrees
  std::optional<double> edge_ratio;      // longest / shortest edge
  std::optional<double> edge_length;     // every edge
  double angle_tol = 1e-9;
  double ratio_tol = 1e-6;
  double length_tol = 1e-9;
};

struct CatalogEntry {
  std::string name;
  WeightIndices indices;
  bool chiral = false;  // orbit of the rotation subgroup; faces from the hull
  ExpectedCensus expected;
  std::vector<ExpectedRadius> dual_radii;
  std::vector<ExpectedScale> scale_factors;
  std::vector<ExpectedFaceGeometry> face_geometry;
  std::string notes;
};

const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_entry(std::string_view name);

/// Entry with the same group, convention, chirality and (to 1e-12) indices.
const CatalogEntry* match_entry(const WeightIndices& w, bool chiral);

}  // namespace cxp::io
