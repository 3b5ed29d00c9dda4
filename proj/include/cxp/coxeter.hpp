#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cxp/point_index.hpp"
#include "cxp/quaternion.hpp"

namespace cxp {

enum class Diagram { A3, B3, H3 };

std::string_view diagram_name(Diagram d);
std::optional<Diagram> parse_diagram(std::string_view text);

struct GoldenConstants {
  static constexpr double tau = 1.6180339887498948482;    // (1 + sqrt5) / 2
  static constexpr double sigma = -0.6180339887498948482; // (1 - sqrt5) / 2
};

inline constexpr double kSqrt2 = 1.4142135623730950488;

using Matrix3 = std::array<std::array<double, 3>, 3>;

Matrix3 inverse(const Matrix3& m);
Matrix3 multiply(const Matrix3& a, const Matrix3& b);
Matrix3 transpose(const Matrix3& m);
double max_abs_diff(const Matrix3& a, const Matrix3& b);

/// Cartan matrix and its inverse exactly as tabulated for each diagram.
const Matrix3& tabulated_cartan(Diagram d);
const Matrix3& tabulated_cartan_inverse(Diagram d);

/// Rank-3 Coxeter system: signed simple roots (squared norm 2), Cartan data,
/// fundamental weights (dual basis to the roots) and the reflection
/// generators r_i = [a_i, -a_i]*.
struct CoxeterSystem {
  Diagram name = Diagram::A3;
  std::array<Quaternion, 3> simple_roots;
  Matrix3 cartan{};
  Matrix3 cartan_inverse{};
  std::array<Quaternion, 3> weights;
  std::array<GroupElement, 3> generators;
};

/// Builds the system from the generator quaternions, resolving root signs by
/// searching the 2^3 assignments for the one that reproduces the tabulated
/// Cartan matrix. Throws ConstructionInconsistency if none does.
CoxeterSystem build_system(Diagram d);

/// Order of the full reflection group: 24, 48, 120.
std::size_t expected_order(Diagram d);

/// Finite reflection group generated by a system's three reflections.
class ReflectionGroup {
 public:
  ReflectionGroup(CoxeterSystem system, std::vector<GroupElement> elements);

  const CoxeterSystem& system() const { return system_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  std::optional<std::size_t> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g).has_value(); }

 private:
  CoxeterSystem system_;
  std::vector<GroupElement> elements_;
  QuantizedIndex<8> plain_;
  QuantizedIndex<8> starred_;
  std::vector<std::size_t> plain_pos_;
  std::vector<std::size_t> starred_pos_;
};

/// Breadth-first closure over the generators with canonical dedup.
/// Throws ClosureOverflow if the element count exceeds twice the expected order.
ReflectionGroup generate_group(const CoxeterSystem& system);

enum class Subgroup { Chiral, Pyritohedral };

/// chiral: the non-star (rotation) elements.
/// pyritohedral: [p, conj p] and [p, conj p]* with p in the binary
/// tetrahedral group; defined for B3 and H3 only (UnsupportedSubgroup otherwise).
std::vector<GroupElement> named_subgroup(const ReflectionGroup& group, Subgroup which);

/// All elements fixing v (within the global tolerance).
std::vector<GroupElement> stabilizer(const ReflectionGroup& group, const Quaternion& v);
std::vector<GroupElement> stabilizer(const std::vector<GroupElement>& elements, const Quaternion& v);

/// Smallest k >= 1 with g^k v = v for the probe vector; 0 if none up to `limit`.
int action_order(const GroupElement& g, const Quaternion& probe, int limit = 64);

/// Order of r_i r_j measured on a probe vector.
int generator_pair_order(const CoxeterSystem& system, std::size_t i, std::size_t j,
                         const Quaternion& probe);

/// True if p is a unit quaternion of the binary tetrahedral group
/// (+-1, +-e_i, or 1/2(+-1 +-e1 +-e2 +-e3)).
bool in_binary_tetrahedral(const Quaternion& p, double eps);

}  // namespace cxp
