#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cxp/coxeter.hpp"
#include "cxp/orbit.hpp"
#include "cxp/polyhedron.hpp"

namespace cxp {

/// Multipliers s_k on the fundamental weights whose orbits carry the dual
/// vertices. The reference weight has s = 1 and every contributing pair
/// satisfies (s_i w_i - s_k w_k) . Lambda = 0.
struct DualSpec {
  std::array<double, 3> scale_factors{0.0, 0.0, 0.0};  // 0 for non-contributing weights
  std::vector<int> contributing_weights;                // 1-based, ascending
  int reference_weight = 0;                             // 1-based
  FaceShape face_kind_expected = FaceShape::Irregular;
  int expected_sides = 0;

  double factor(int k) const { return scale_factors[static_cast<std::size_t>(k - 1)]; }
};

/// Weight classes (1-based) of the faces present in the polyhedron.
std::vector<int> face_classes(const Polyhedron& poly);

/// Reference weight the published closed form uses for this index pattern,
/// or 0 when the pattern has no published dual formula.
int published_reference_weight(const WeightIndices& w);

/// Published reference if any, otherwise the contributing weight with the
/// largest projection on Lambda.
int default_reference_weight(const CoxeterSystem& system, const WeightIndices& w,
                             const std::vector<int>& classes);

/// s_r = 1, s_i = (w_r . Lambda) / (w_i . Lambda). Throws ZeroProjection if
/// some contributing weight is orthogonal to Lambda, Error if the reference
/// is not contributing.
DualSpec solve_scale_factors(const CoxeterSystem& system, const WeightIndices& w,
                             const std::vector<int>& classes,
                             std::optional<int> reference = std::nullopt);

/// One published closed-form scale factor next to the solver's value.
struct FormulaCheck {
  std::string name;   // e.g. "b3-a10a3-eta"
  int weight = 0;     // which w_k the factor multiplies
  int reference = 0;  // which weight is normalised to 1
  double published = 0.0;
  double solved = 0.0;
  double abs_diff = 0.0;
};

/// Evaluates every published scale-factor formula whose index family
/// contains w, against the solver in the same normalisation. Empty when no
/// formula applies.
std::vector<FormulaCheck> closed_form_scale_validation(const CoxeterSystem& system,
                                                       const WeightIndices& w);

struct DualSolid {
  Polyhedron mesh;                 // face i is dual to primal vertex i
  std::vector<int> provenance;     // weight class of each dual vertex
  DualSpec spec;
  std::vector<double> sphere_radii;  // s_k |w_k| for each contributing k, in order
};

/// Dual vertices: union over contributing k of s_k O(w_k). Dual face for
/// primal vertex v: the scaled centres of the faces at v, ordered about v.
/// Throws NonCoplanarDualFace if those centres are not coplanar.
DualSolid build_dual(const Polyhedron& primal, const DualSpec& spec, const ReflectionGroup& group);

/// Convenience: polyhedron -> classes -> default reference -> dual.
DualSolid build_dual(const Polyhedron& primal, const ReflectionGroup& group, const WeightIndices& w);

/// s_k |w_k| per contributing weight.
std::vector<double> sphere_radii(const DualSolid& dual, const CoxeterSystem& system);

struct TransitivityResult {
  bool transitive = false;
  /// witness[f] = index into group.elements() of an element mapping face 0
  /// onto face f (nullopt where none exists).
  std::vector<std::optional<std::size_t>> witness;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

TransitivityResult face_transitivity_check(const DualSolid& dual, const ReflectionGroup& group);

/// max over primal vertices v of |n x v| / (|n| |v|), n the normal of v's dual face.
double max_orthogonality_error(const Polyhedron& primal, const DualSolid& dual);

/// max over dual faces of the out-of-plane deviation divided by the face's circumradius.
double max_dual_planarity_error(const DualSolid& dual);

}  // namespace cxp
