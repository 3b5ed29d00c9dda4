#include "cxp/quaternion.hpp"

#include <cstdio>

#include "cxp/errors.hpp"
#include "cxp/tolerance.hpp"

namespace cxp {

double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

Quaternion normalized(const Quaternion& a) {
  const double n = a.norm();
  if (n == 0.0) return a;
  return a / n;
}

bool is_vector(const Quaternion& a, double eps) { return std::abs(a.q0) <= eps; }

bool is_unit(const Quaternion& a, double eps) { return std::abs(a.norm() - 1.0) <= eps; }

bool approx_equal(const Quaternion& a, const Quaternion& b, double eps) {
  return distance(a, b) <= eps;
}

std::string to_string(const Quaternion& a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", a.q0, a.q1, a.q2, a.q3);
  return buf;
}

GroupElement GroupElement::make(const Quaternion& left, const Quaternion& right, bool star) {
  const double eps = epsilon();
  // Products of unit quaternions drift by ~1e-16 per step; 1e3 * eps is
  // loose enough to never trip on closure arithmetic.
  if (!is_unit(left, 1e3 * eps) || !is_unit(right, 1e3 * eps)) {
    throw Error("group element components must be unit quaternions: " + to_string(left) + ", " +
                to_string(right));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const double c = left[i];
    if (std::abs(c) > eps) {
      if (c < 0.0) return GroupElement(-left, -right, star);
      break;
    }
  }
  return GroupElement(left, right, star);
}

GroupElement GroupElement::identity() { return make(Quaternion::one(), Quaternion::one(), false); }

GroupElement GroupElement::reflection(const Quaternion& root) {
  const Quaternion a = normalized(Quaternion::vector(root.q1, root.q2, root.q3));
  return make(a, -a, true);
}

std::array<double, 8> GroupElement::components() const {
  return {left_.q0, left_.q1, left_.q2, left_.q3, right_.q0, right_.q1, right_.q2, right_.q3};
}

Quaternion apply(const GroupElement& g, const Quaternion& v) {
  if (!is_vector(v, epsilon())) {
    throw NonVectorInput("apply expects a vector quaternion, got " + to_string(v));
  }
  const Quaternion arg = g.star() ? v.conj() : v;
  Quaternion out = g.left() * arg * g.right();
  out.q0 = 0.0;
  return out;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  // g(h(v)) with h(v) = p' v q' (or p' conj(v) q'):
  //   g plain: p p' (.) q' q
  //   g star : p conj(q') conj(.) conj(p') q
  const bool star = g.star() != h.star();
  if (g.star()) {
    return GroupElement::make(g.left() * h.right().conj(), h.left().conj() * g.right(), star);
  }
  return GroupElement::make(g.left() * h.left(), h.right() * g.right(), star);
}

GroupElement inverse(const GroupElement& g) {
  if (g.star()) return GroupElement::make(g.right(), g.left(), true);
  return GroupElement::make(g.left().conj(), g.right().conj(), false);
}

bool same_element(const GroupElement& a, const GroupElement& b, double eps) {
  if (a.star() != b.star()) return false;
  const auto x = a.components();
  const auto y = b.components();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > eps) return false;
  }
  return true;
}

}  // namespace cxp
