#include "cxp/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "cxp/errors.hpp"
#include "cxp/point_index.hpp"
#include "cxp/tolerance.hpp"

namespace cxp {

namespace {

constexpr double kTau = GoldenConstants::tau;
constexpr double kSigma = GoldenConstants::sigma;

// The six coordinate patterns shared by both closed forms.
std::array<std::array<double, 3>, 6> patterns(double alpha, double beta, double gamma) {
  return {{{alpha, beta, gamma},
           {beta, gamma, alpha},
           {gamma, alpha, beta},
           {alpha, gamma, beta},
           {gamma, beta, alpha},
           {beta, alpha, gamma}}};
}

std::vector<Quaternion> cyclic_pm_set(double first, double second) {
  std::vector<Quaternion> out;
  for (int axis = 0; axis < 3; ++axis) {
    for (double s1 : {1.0, -1.0}) {
      for (double s2 : {1.0, -1.0}) {
        double c[3] = {0.0, 0.0, 0.0};
        c[axis] = s1 * first;
        c[(axis + 1) % 3] = s2 * second;
        out.push_back(Quaternion::vector(c[0], c[1], c[2]));
      }
    }
  }
  return out;
}

}  // namespace

void WeightIndices::validate() const {
  const double v[3] = {a1, a2, a3};
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(v[i])) throw InvalidIndices("index a" + std::to_string(i + 1) + " is not finite");
    if (v[i] < 0.0) throw InvalidIndices("index a" + std::to_string(i + 1) + " is negative");
  }
  if (a1 == 0.0 && a2 == 0.0 && a3 == 0.0) throw InvalidIndices("indices are all zero");
}

Quaternion indices_to_vector(const CoxeterSystem& system, const WeightIndices& w) {
  if (w.sigma_scaled()) {
    return Quaternion::vector(-0.5 * kSigma * w.a1, -0.5 * kSigma * w.a3,
                              0.5 * (kTau * w.a1 + 2.0 * w.a2 + w.a3));
  }
  return w.a1 * system.weights[0] + w.a2 * system.weights[1] + w.a3 * system.weights[2];
}

double weight_scale(const WeightIndices& w) { return w.sigma_scaled() ? -kSigma / kSqrt2 : 1.0; }

double edge_length_factor(const WeightIndices& w) { return kSqrt2 * weight_scale(w); }

void canonical_sort(std::vector<Quaternion>& points) {
  const double eps = epsilon();
  auto key = [eps](const Quaternion& v) {
    return std::make_tuple(std::llround(v.q1 / eps), std::llround(v.q2 / eps),
                           std::llround(v.q3 / eps));
  };
  std::stable_sort(points.begin(), points.end(),
                   [&](const Quaternion& a, const Quaternion& b) { return key(a) < key(b); });
}

std::vector<Quaternion> dedup(const std::vector<Quaternion>& points) {
  VectorSet set(epsilon());
  for (const auto& p : points) set.insert(p);
  return set.items();
}

Orbit orbit(const std::vector<GroupElement>& elements, const Quaternion& seed) {
  VectorSet set(epsilon());
  for (const auto& g : elements) set.insert(apply(g, seed));
  Orbit out{seed, set.items()};
  canonical_sort(out.vertices);
  return out;
}

Orbit orbit(const ReflectionGroup& group, const Quaternion& seed) {
  return orbit(group.elements(), seed);
}

double set_distance(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto one_way = [](const std::vector<Quaternion>& from, const std::vector<Quaternion>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

std::vector<Quaternion> closed_form_A3(const WeightIndices& w) {
  const double alpha = 0.5 * (w.a1 - w.a3);
  const double beta = 0.5 * (w.a1 + w.a3);
  const double gamma = 0.5 * (w.a1 + 2.0 * w.a2 + w.a3);
  static constexpr double kEvenSigns[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<Quaternion> out;
  out.reserve(24);
  for (const auto& p : patterns(alpha, beta, gamma)) {
    for (const auto& s : kEvenSigns) {
      out.push_back(Quaternion::vector(s[0] * p[0], s[1] * p[1], s[2] * p[2]));
    }
  }
  return out;
}

std::vector<Quaternion> closed_form_B3(const WeightIndices& w) {
  const double gamma = w.a3 / kSqrt2;
  const double beta = w.a2 + gamma;
  const double alpha = w.a1 + beta;
  std::vector<Quaternion> out;
  out.reserve(48);
  for (const auto& p : patterns(alpha, beta, gamma)) {
    for (int mask = 0; mask < 8; ++mask) {
      const double sx = mask & 1 ? -1.0 : 1.0;
      const double sy = mask & 2 ? -1.0 : 1.0;
      const double sz = mask & 4 ? -1.0 : 1.0;
      out.push_back(Quaternion::vector(sx * p[0], sy * p[1], sz * p[2]));
    }
  }
  return out;
}

Quaternion transform(const Matrix3& m, const Quaternion& v) {
  return Quaternion::vector(m[0][0] * v.q1 + m[0][1] * v.q2 + m[0][2] * v.q3,
                            m[1][0] * v.q1 + m[1][1] * v.q2 + m[1][2] * v.q3,
                            m[2][0] * v.q1 + m[2][1] * v.q2 + m[2][2] * v.q3);
}

Matrix3 closed_form_alignment_B3(const CoxeterSystem& system) {
  // Columns: closed-form seed of each fundamental orbit / the weight it must map to.
  Matrix3 seeds{};
  Matrix3 targets{};
  for (std::size_t k = 0; k < 3; ++k) {
    WeightIndices unit{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0, Diagram::B3,
                       false};
    const Quaternion seed = closed_form_B3(unit).front();
    const Quaternion& target = system.weights[k];
    for (std::size_t r = 0; r < 3; ++r) {
      seeds[r][k] = seed[r + 1];
      targets[r][k] = target[r + 1];
    }
  }
  const Matrix3 m = multiply(targets, inverse(seeds));
  const Matrix3 identity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  if (max_abs_diff(multiply(transpose(m), m), identity) > 1e-12) {
    throw Error("closed-form B3 frame is not isometric to the generator frame");
  }
  return m;
}

ChiralPair chiral_orbit_pair(const ReflectionGroup& group, const WeightIndices& w) {
  if (group.system().name != Diagram::A3) {
    throw UnsupportedSubgroup("the chiral orbit pair is defined on W(A3)");
  }
  w.validate();
  const auto rotations = named_subgroup(group, Subgroup::Chiral);
  const Quaternion seed = indices_to_vector(group.system(), w);
  ChiralPair pair;
  pair.seed = seed;
  pair.first = orbit(rotations, seed).vertices;
  pair.second = orbit(rotations, apply(group.system().generators[0], seed)).vertices;
  return pair;
}

std::vector<Quaternion> icosahedron_set_a() { return cyclic_pm_set(1.0, kTau); }
std::vector<Quaternion> icosahedron_set_b() { return cyclic_pm_set(kTau, 1.0); }

}  // namespace cxp
