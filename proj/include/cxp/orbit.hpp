#pragma once

#include <cstddef>
#include <vector>

#include "cxp/coxeter.hpp"
#include "cxp/quaternion.hpp"

namespace cxp {

/// Dynkin-style indices (a1 a2 a3) of Lambda = a1 w1 + a2 w2 + a3 w3.
///
/// `h3_sigma_scale` selects the H3 convention in which (0 1 0) is a unit
/// vector: Lambda = 1/2 [-s a1 e1 - s a3 e2 + (t a1 + 2 a2 + a3) e3]
/// (t = tau, s = sigma). It is ignored for A3 and B3.
struct WeightIndices {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  Diagram group = Diagram::A3;
  bool h3_sigma_scale = false;

  double operator[](std::size_t i) const { return i == 0 ? a1 : i == 1 ? a2 : a3; }

  /// Throws InvalidIndices for negative, non-finite, or all-zero indices.
  void validate() const;

  bool sigma_scaled() const { return group == Diagram::H3 && h3_sigma_scale; }
};

/// The dominant vector for the given indices.
Quaternion indices_to_vector(const CoxeterSystem& system, const WeightIndices& w);

/// Multiplier turning a_i into the edge length |Lambda - r_i Lambda|:
/// sqrt2 for the weight convention, |sigma| for the sigma-scaled H3 convention.
double edge_length_factor(const WeightIndices& w);

/// Overall factor relating the returned vector to a1 w1 + a2 w2 + a3 w3.
double weight_scale(const WeightIndices& w);

struct Orbit {
  Quaternion seed;
  std::vector<Quaternion> vertices;
  std::size_t size() const { return vertices.size(); }
};

/// {g seed : g in elements}, deduplicated and canonically sorted.
Orbit orbit(const std::vector<GroupElement>& elements, const Quaternion& seed);
Orbit orbit(const ReflectionGroup& group, const Quaternion& seed);

/// Lexicographic order on coordinates rounded to the global tolerance.
void canonical_sort(std::vector<Quaternion>& points);

/// Removes duplicates (within the global tolerance), preserving first occurrence.
std::vector<Quaternion> dedup(const std::vector<Quaternion>& points);

/// Largest distance from a point of either set to the nearest point of the
/// other (Hausdorff distance). Infinity if exactly one set is empty.
double set_distance(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b);

/// Cartesian closed form of the W(A3) orbit: the six coordinate patterns
/// of (alpha, beta, gamma) with an even number of minus signs, where
/// alpha = (a1 - a3)/2, beta = (a1 + a3)/2, gamma = (a1 + 2 a2 + a3)/2.
/// Returns all 24 entries including repetitions.
std::vector<Quaternion> closed_form_A3(const WeightIndices& w);

/// Cartesian closed form of the W(B3) orbit: all signs of the six patterns
/// with alpha = a1 + a2 + a3/sqrt2, beta = a2 + a3/sqrt2, gamma = a3/sqrt2.
/// Returns all 48 entries including repetitions.
std::vector<Quaternion> closed_form_B3(const WeightIndices& w);

/// Orthogonal map taking the closed-form B3 frame to the generator frame,
/// fixed once from the three fundamental orbits. Throws Error if the fitted
/// map is not orthogonal.
Matrix3 closed_form_alignment_B3(const CoxeterSystem& system);

Quaternion transform(const Matrix3& m, const Quaternion& v);

/// The two 12-vertex orbits of the A3 rotation subgroup through Lambda and
/// through r1 Lambda.
struct ChiralPair {
  Quaternion seed;
  std::vector<Quaternion> first;
  std::vector<Quaternion> second;
};

ChiralPair chiral_orbit_pair(const ReflectionGroup& group,
                             const WeightIndices& w = WeightIndices{GoldenConstants::tau, 1.0,
                                                                    GoldenConstants::tau,
                                                                    Diagram::A3, false});

/// The two printed icosahedral vertex sets, +-e1 +- t e2 (and cyclic), and
/// +-t e1 +- e2 (and cyclic).
std::vector<Quaternion> icosahedron_set_a();
std::vector<Quaternion> icosahedron_set_b();

}  // namespace cxp
