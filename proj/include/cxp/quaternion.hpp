#pragma once

/**
 * Real quaternions q = q0 + q1 e1 + q2 e2 + q3 e3 with e_i e_j = -delta_ij + eps_ijk e_k.
 *
 * 3D vectors are pure-imaginary quaternions (q0 == 0); there is no separate
 * vector type. Reflections and rotations act through quaternion pairs:
 *
 *   [p, q]  v = p v q
 *   [p, q]* v = p conj(v) q
 *
 * A reflection in the plane orthogonal to a root alpha is [a, -a]* with
 * a = alpha / |alpha|.
 */

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <string>

namespace cxp {

struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w, double x, double y, double z) : q0(w), q1(x), q2(y), q3(z) {}

  /// Pure-imaginary quaternion x e1 + y e2 + z e3.
  static constexpr Quaternion vector(double x, double y, double z) { return {0.0, x, y, z}; }
  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

  constexpr double operator[](std::size_t i) const {
    return i == 0 ? q0 : i == 1 ? q1 : i == 2 ? q2 : q3;
  }

  constexpr Quaternion conj() const { return {q0, -q1, -q2, -q3}; }
  constexpr double norm_sq() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
  double norm() const { return std::sqrt(norm_sq()); }

  constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.q0 - b.q0, a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3};
}
constexpr Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
constexpr Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.q0, s * a.q1, s * a.q2, s * a.q3};
}
constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }
constexpr Quaternion operator/(const Quaternion& a, double s) {
  return {a.q0 / s, a.q1 / s, a.q2 / s, a.q3 / s};
}

/// Hamilton product.
constexpr Quaternion multiply(const Quaternion& a, const Quaternion& b) {
  return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
          a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
          a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
          a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return multiply(a, b); }

/// (a, b) = 1/2 (conj(a) b + conj(b) a); the Euclidean dot product in R^4.
constexpr double scalar_product(const Quaternion& a, const Quaternion& b) {
  return a.q0 * b.q0 + a.q1 * b.q1 + a.q2 * b.q2 + a.q3 * b.q3;
}

/// Vector part cross product (both arguments treated as 3-vectors).
constexpr Quaternion cross(const Quaternion& a, const Quaternion& b) {
  return Quaternion::vector(a.q2 * b.q3 - a.q3 * b.q2, a.q3 * b.q1 - a.q1 * b.q3,
                            a.q1 * b.q2 - a.q2 * b.q1);
}

double distance(const Quaternion& a, const Quaternion& b);
Quaternion normalized(const Quaternion& a);

bool is_vector(const Quaternion& a, double eps);
bool is_unit(const Quaternion& a, double eps);
bool approx_equal(const Quaternion& a, const Quaternion& b, double eps);

std::string to_string(const Quaternion& a);

/// Orthogonal transformation of R^3 as a quaternion pair, optionally
/// conjugating the argument first (orientation-reversing elements).
///
/// (p, q, star) and (-p, -q, star) act identically; instances produced by
/// `make` are canonical: the first component of `left` whose magnitude
/// exceeds the tolerance is positive.
class GroupElement {
 public:
  GroupElement() = default;

  /// Validates unit-ness and canonicalizes the sign.
  static GroupElement make(const Quaternion& left, const Quaternion& right, bool star);
  static GroupElement identity();

  /// Reflection in the plane orthogonal to `root` (any nonzero vector).
  static GroupElement reflection(const Quaternion& root);

  const Quaternion& left() const { return left_; }
  const Quaternion& right() const { return right_; }
  bool star() const { return star_; }

  /// Raw pair access for hashing: (left, right) flattened.
  std::array<double, 8> components() const;

 private:
  GroupElement(const Quaternion& l, const Quaternion& r, bool s) : left_(l), right_(r), star_(s) {}

  Quaternion left_ = Quaternion::one();
  Quaternion right_ = Quaternion::one();
  bool star_ = false;
};

/// p v q, or p conj(v) q for star elements. Throws NonVectorInput when
/// |v.q0| exceeds the global tolerance.
Quaternion apply(const GroupElement& g, const Quaternion& v);

/// Element whose action is apply(g, apply(h, .)).
GroupElement compose(const GroupElement& g, const GroupElement& h);

GroupElement inverse(const GroupElement& g);

/// Field-wise comparison of canonical elements within eps.
bool same_element(const GroupElement& a, const GroupElement& b, double eps);

}  // namespace cxp
