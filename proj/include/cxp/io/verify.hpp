#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxp/dual.hpp"
#include "cxp/io/catalog.hpp"
#include "cxp/io/report.hpp"

namespace cxp::io {

enum class CheckStatus { Pass, Fail, Flagged, Skipped };

std::string status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

/// A place where the published numbers disagree with each other; reported,
/// never counted as a failure.
struct Conflict {
  std::string id;
  std::string description;
  Json published;
  Json computed;
};

struct Selection {
  WeightIndices indices;
  bool chiral = false;
  const CatalogEntry* entry = nullptr;  // expectations to check, if any
  std::string label;
};

struct VerifyResult {
  std::string label;
  Json input;
  std::vector<CheckResult> checks;
  std::vector<Conflict> conflicts;

  bool ok() const;  // no Fail
};

/// Conflicts that apply to this primal (and dual, when given).
std::vector<Conflict> known_conflicts(const CoxeterSystem& system, const WeightIndices& w,
                                      const Polyhedron& primal, const DualSolid* dual);

/// Group-level checks: order and star split, Coxeter relations, Cartan and weights.
std::vector<CheckResult> group_checks(const ReflectionGroup& group);

/// Primal checks: Euler, hull equality, orbit-size law, closed-form orbit, catalog census
/// and face geometry.
std::vector<CheckResult> primal_checks(const ReflectionGroup& group, const Selection& sel,
                                       const Polyhedron& primal);

/// Dual checks: formulas, printed values, radii, face kinds, transitivity,
/// orthogonality and planarity.
std::vector<CheckResult> dual_checks(const ReflectionGroup& group, const Selection& sel,
                                     const Polyhedron& primal, const DualSolid& dual);

/// The three chiral-pair properties (equal nearest-neighbour distances,
/// r1 swaps the two orbits, no star element preserves either).
std::vector<CheckResult> chiral_checks(const ReflectionGroup& group, const WeightIndices& w);

VerifyResult verify_selection(const Selection& sel);

std::vector<VerifyResult> verify_catalog();

Json checks_json(const std::vector<CheckResult>& checks);
Json conflicts_json(const std::vector<Conflict>& conflicts);
Json verify_json(const std::vector<VerifyResult>& results);

}  // namespace cxp::io
