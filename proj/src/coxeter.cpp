#include "cxp/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "cxp/errors.hpp"
#include "cxp/tolerance.hpp"

namespace cxp {

namespace {

constexpr double kTau = GoldenConstants::tau;
constexpr double kSigma = GoldenConstants::sigma;
constexpr double kInvSqrt2 = 1.0 / kSqrt2;

// Unit quaternions a_i of the generators r_i = [a_i, -a_i]*.
std::array<Quaternion, 3> generator_axes(Diagram d) {
  switch (d) {
    case Diagram::A3:
      return {Quaternion::vector(kInvSqrt2, kInvSqrt2, 0.0),
              Quaternion::vector(0.0, -kInvSqrt2, kInvSqrt2),
              Quaternion::vector(-kInvSqrt2, kInvSqrt2, 0.0)};
    case Diagram::B3:
      return {Quaternion::vector(kInvSqrt2, -kInvSqrt2, 0.0),
              Quaternion::vector(0.0, kInvSqrt2, -kInvSqrt2),
              Quaternion::vector(0.0, 0.0, 1.0)};
    case Diagram::H3:
      return {Quaternion::vector(1.0, 0.0, 0.0),
              Quaternion::vector(0.5 * kTau, 0.5, 0.5 * kSigma),
              Quaternion::vector(0.0, 1.0, 0.0)};
  }
  throw Error("unknown diagram");
}

bool in_unit_interval_set(double x, double eps) {
  const double a = std::abs(x);
  return a <= eps || std::abs(a - 0.5) <= eps || std::abs(a - 1.0) <= eps;
}

}  // namespace

std::string_view diagram_name(Diagram d) {
  switch (d) {
    case Diagram::A3: return "A3";
    case Diagram::B3: return "B3";
    case Diagram::H3: return "H3";
  }
  return "?";
}

std::optional<Diagram> parse_diagram(std::string_view text) {
  if (text == "a3" || text == "A3") return Diagram::A3;
  if (text == "b3" || text == "B3") return Diagram::B3;
  if (text == "h3" || text == "H3") return Diagram::H3;
  return std::nullopt;
}

Matrix3 inverse(const Matrix3& m) {
  const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  const double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  const double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
  if (std::abs(det) < 1e-300) throw Error("singular 3x3 matrix");
  Matrix3 r{};
  r[0][0] = c00 / det;
  r[1][0] = c01 / det;
  r[2][0] = c02 / det;
  r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return r;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Matrix3 transpose(const Matrix3& m) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

double max_abs_diff(const Matrix3& a, const Matrix3& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
  return worst;
}

const Matrix3& tabulated_cartan(Diagram d) {
  static const Matrix3 a3{{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
  static const Matrix3 b3{{{2, -1, 0}, {-1, 2, -kSqrt2}, {0, -kSqrt2, 2}}};
  static const Matrix3 h3{{{2, -kTau, 0}, {-kTau, 2, -1}, {0, -1, 2}}};
  switch (d) {
    case Diagram::A3: return a3;
    case Diagram::B3: return b3;
    case Diagram::H3: return h3;
  }
  throw Error("unknown diagram");
}

const Matrix3& tabulated_cartan_inverse(Diagram d) {
  static const Matrix3 a3{{{0.75, 0.5, 0.25}, {0.5, 1.0, 0.5}, {0.25, 0.5, 0.75}}};
  static const Matrix3 b3{{{1, 1, kInvSqrt2}, {1, 2, kSqrt2}, {kInvSqrt2, kSqrt2, 1.5}}};
  static const Matrix3 h3 = [] {
    const double t2 = kTau * kTau;
    const double t3 = t2 * kTau;
    return Matrix3{{{1.5 * t2, t3, 0.5 * t3}, {t3, 2 * t2, t2}, {0.5 * t3, t2, 0.5 * (kTau + 2)}}};
  }();
  switch (d) {
    case Diagram::A3: return a3;
    case Diagram::B3: return b3;
    case Diagram::H3: return h3;
  }
  throw Error("unknown diagram");
}

CoxeterSystem build_system(Diagram d) {
  const auto axes = generator_axes(d);
  const Matrix3& target = tabulated_cartan(d);

  CoxeterSystem sys;
  sys.name = d;
  for (std::size_t i = 0; i < 3; ++i) sys.generators[i] = GroupElement::make(axes[i], -axes[i], true);

  bool found = false;
  for (int mask = 0; mask < 8 && !found; ++mask) {
    std::array<Quaternion, 3> roots;
    for (std::size_t i = 0; i < 3; ++i) {
      const double sign = (mask >> i) & 1 ? -1.0 : 1.0;
      roots[i] = (sign * kSqrt2) * axes[i];
    }
    Matrix3 gram{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) gram[i][j] = scalar_product(roots[i], roots[j]);
    if (max_abs_diff(gram, target) < 1e-12) {
      sys.simple_roots = roots;
      sys.cartan = gram;
      found = true;
    }
  }
  if (!found) {
    throw ConstructionInconsistency("no root sign assignment reproduces the " +
                                    std::string(diagram_name(d)) + " Cartan matrix");
  }

  sys.cartan_inverse = inverse(sys.cartan);
  for (std::size_t i = 0; i < 3; ++i) {
    Quaternion w;
    for (std::size_t j = 0; j < 3; ++j) w = w + sys.cartan_inverse[i][j] * sys.simple_roots[j];
    sys.weights[i] = w;
  }
  return sys;
}

std::size_t expected_order(Diagram d) {
  switch (d) {
    case Diagram::A3: return 24;
    case Diagram::B3: return 48;
    case Diagram::H3: return 120;
  }
  return 0;
}

ReflectionGroup::ReflectionGroup(CoxeterSystem system, std::vector<GroupElement> elements)
    : system_(std::move(system)),
      elements_(std::move(elements)),
      plain_(epsilon()),
      starred_(epsilon()) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& g = elements_[i];
    if (g.star()) {
      if (starred_.insert(g.components()).second) starred_pos_.push_back(i);
    } else {
      if (plain_.insert(g.components()).second) plain_pos_.push_back(i);
    }
  }
}

std::optional<std::size_t> ReflectionGroup::index_of(const GroupElement& g) const {
  const auto& index = g.star() ? starred_ : plain_;
  const auto& pos = g.star() ? starred_pos_ : plain_pos_;
  auto hit = index.find(g.components());
  if (!hit) return std::nullopt;
  return pos[*hit];
}

ReflectionGroup generate_group(const CoxeterSystem& system) {
  const double eps = epsilon();
  const std::size_t limit = 2 * expected_order(system.name);

  std::vector<GroupElement> elements;
  QuantizedIndex<8> plain(eps);
  QuantizedIndex<8> starred(eps);
  auto add = [&](const GroupElement& g) {
    auto& index = g.star() ? starred : plain;
    if (!index.insert(g.components()).second) return false;
    elements.push_back(g);
    if (elements.size() > limit) {
      throw ClosureOverflow("closure of " + std::string(diagram_name(system.name)) +
                            " exceeded " + std::to_string(limit) + " elements");
    }
    return true;
  };

  std::deque<std::size_t> frontier;
  add(GroupElement::identity());
  frontier.push_back(0);
  while (!frontier.empty()) {
    const GroupElement current = elements[frontier.front()];
    frontier.pop_front();
    for (const auto& r : system.generators) {
      if (add(compose(r, current))) frontier.push_back(elements.size() - 1);
    }
  }
  return ReflectionGroup(system, std::move(elements));
}

bool in_binary_tetrahedral(const Quaternion& p, double eps) {
  int ones = 0;
  int halves = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!in_unit_interval_set(p[i], eps)) return false;
    const double a = std::abs(p[i]);
    if (std::abs(a - 1.0) <= eps) ++ones;
    if (std::abs(a - 0.5) <= eps) ++halves;
  }
  return (ones == 1 && halves == 0) || halves == 4;
}

std::vector<GroupElement> named_subgroup(const ReflectionGroup& group, Subgroup which) {
  const double eps = epsilon();
  std::vector<GroupElement> out;
  if (which == Subgroup::Chiral) {
    for (const auto& g : group.elements())
      if (!g.star()) out.push_back(g);
    return out;
  }
  if (group.system().name == Diagram::A3) {
    throw UnsupportedSubgroup("pyritohedral subgroup is defined for B3 and H3 only");
  }
  for (const auto& g : group.elements()) {
    if (!approx_equal(g.right(), g.left().conj(), eps)) continue;
    if (!in_binary_tetrahedral(g.left(), eps)) continue;
    out.push_back(g);
  }
  return out;
}

std::vector<GroupElement> stabilizer(const std::vector<GroupElement>& elements, const Quaternion& v) {
  const double eps = epsilon();
  std::vector<GroupElement> out;
  for (const auto& g : elements)
    if (approx_equal(apply(g, v), v, eps)) out.push_back(g);
  return out;
}

std::vector<GroupElement> stabilizer(const ReflectionGroup& group, const Quaternion& v) {
  return stabilizer(group.elements(), v);
}

int action_order(const GroupElement& g, const Quaternion& probe, int limit) {
  const double eps = epsilon();
  Quaternion v = probe;
  for (int k = 1; k <= limit; ++k) {
    v = apply(g, v);
    if (approx_equal(v, probe, eps)) return k;
  }
  return 0;
}

int generator_pair_order(const CoxeterSystem& system, std::size_t i, std::size_t j,
                         const Quaternion& probe) {
  return action_order(compose(system.generators[i], system.generators[j]), probe);
}

}  // namespace cxp
