#include "cxp/dual.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "cxp/errors.hpp"
#include "cxp/point_index.hpp"
#include "cxp/tolerance.hpp"

namespace cxp {

namespace {

constexpr double kTau = GoldenConstants::tau;
constexpr double kSigma = GoldenConstants::sigma;

bool positive(double a) { return a > 0.0; }

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Coxeter exponent m_ij read off the Cartan entry C_ij = -2 cos(pi / m_ij).
int coxeter_exponent(const CoxeterSystem& system, std::size_t i, std::size_t j) {
  const double c = std::clamp(-system.cartan[i][j] / 2.0, -1.0, 1.0);
  return static_cast<int>(std::lround(std::numbers::pi / std::acos(c)));
}

// Face classes implied by the index pattern: the <r_i, r_j> orbit of Lambda
// is a polygon when both indices are positive, or when one is and the
// reflections do not commute.
std::vector<int> classes_from_indices(const CoxeterSystem& system, const WeightIndices& w) {
  static constexpr std::size_t kPairs[3][3] = {{1, 2, 0}, {0, 2, 1}, {0, 1, 2}};
  std::vector<int> out;
  for (const auto& p : kPairs) {
    const bool pi = positive(w[p[0]]);
    const bool pj = positive(w[p[1]]);
    const bool commuting = coxeter_exponent(system, p[0], p[1]) == 2;
    if ((pi && pj) || (!commuting && (pi || pj))) out.push_back(static_cast<int>(p[2] + 1));
  }
  return out;
}

void set_expected_kind(const CoxeterSystem& system, const WeightIndices& w, DualSpec& spec) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < 3; ++i)
    if (!positive(w[i])) zeros.push_back(i);
  if (zeros.empty()) {
    spec.face_kind_expected = FaceShape::ScaleneTriangle;
    spec.expected_sides = 3;
  } else if (zeros.size() == 1) {
    const bool three = spec.contributing_weights.size() >= 3;
    spec.face_kind_expected = three ? FaceShape::Kite : FaceShape::IsoscelesTriangle;
    spec.expected_sides = three ? 4 : 3;
  } else {
    // Lambda on w_k, fixed by the dihedral group <r_i, r_j> of order 2m. If one
    // of r_i, r_j commutes with r_k it fixes the edges at Lambda and the vertex
    // has m faces; otherwise it has 2m, alternating between two weight classes.
    const std::size_t k = 3 - zeros[0] - zeros[1];
    const int m = coxeter_exponent(system, zeros[0], zeros[1]);
    const bool halved = coxeter_exponent(system, zeros[0], k) == 2 || coxeter_exponent(system, zeros[1], k) == 2;
    if (halved) {
      spec.expected_sides = m;
      spec.face_kind_expected = m == 3   ? FaceShape::EquilateralTriangle
                                : m == 4 ? FaceShape::Square
                                         : FaceShape::RegularPolygon;
    } else {
      spec.expected_sides = 2 * m;
      bool equal_radii = spec.contributing_weights.size() == 2;
      if (equal_radii) {
        const auto r = [&](int c) {
          return spec.factor(c) * system.weights[static_cast<std::size_t>(c - 1)].norm();
        };
        equal_radii = nearly_equal(r(spec.contributing_weights[0]), r(spec.contributing_weights[1]));
      }
      if (m == 2) {
        spec.face_kind_expected = equal_radii ? FaceShape::Square : FaceShape::Kite;
      } else {
        spec.face_kind_expected = equal_radii ? FaceShape::RegularPolygon : FaceShape::Irregular;
      }
    }
  }
}

struct PublishedFormula {
  const char* name;
  int weight;
  int reference;
  double (*value)(double, double, double);
};

// Published closed forms, grouped by family. Each lambda takes (a1, a2, a3).
const std::vector<PublishedFormula>& formulas_for(Diagram d, const char* family) {
  static const std::map<std::string, std::vector<PublishedFormula>> table = {
      {"A3:a1a20",
       {{"a3-a1a20-lambda", 1, 3, [](double a1, double a2, double) { return (a1 + 2 * a2) / (3 * a1 + 2 * a2); }}}},
      {"A3:a10a3",
       {{"a3-a10a3-lambda", 1, 2, [](double a1, double, double a3) { return (2 * a1 + 2 * a3) / (3 * a1 + a3); }},
        {"a3-a10a3-eta", 3, 2, [](double a1, double, double a3) { return (2 * a1 + 2 * a3) / (a1 + 3 * a3); }}}},
      {"A3:generic",
       {{"a3-generic-lambda", 1, 3,
         [](double a1, double a2, double a3) { return (a1 + 2 * a2 + 3 * a3) / (3 * a1 + 2 * a2 + a3); }},
        {"a3-generic-eta", 2, 3,
         [](double a1, double a2, double a3) { return (a1 + 2 * a2 + 3 * a3) / (2 * a1 + 4 * a2 + 2 * a3); }}}},
      {"A3:a1a2a1",
       {{"a3-a1a2a1-lambda", 2, 1, [](double a1, double a2, double) { return (2 * a1 + a2) / (2 * (a1 + a2)); }}}},
      {"B3:a1a20",
       {{"b3-a1a20-lambda", 1, 3,
         [](double a1, double a2, double) { return (a1 + 2 * a2) / (kSqrt2 * (a1 + a2)); }}}},
      {"B3:a10a3",
       {{"b3-a10a3-lambda", 1, 2,
         [](double a1, double, double a3) { return (kSqrt2 * a1 + 2 * a3) / (kSqrt2 * a1 + a3); }},
        {"b3-a10a3-eta", 3, 2,
         [](double a1, double, double a3) { return (2 * a1 + 2 * kSqrt2 * a3) / (kSqrt2 * a1 + 3 * a3); }}}},
      {"B3:0a2a3",
       {{"b3-0a2a3-lambda", 3, 1,
         [](double, double a2, double a3) { return (2 * a2 + kSqrt2 * a3) / (2 * kSqrt2 * a2 + 3 * a3); }}}},
      {"B3:generic",
       {{"b3-generic-lambda", 1, 3,
         [](double a1, double a2, double a3) {
           return (kSqrt2 * a1 + 2 * kSqrt2 * a2 + 3 * a3) / (2 * a1 + 2 * a2 + kSqrt2 * a3);
         }},
        {"b3-generic-eta", 2, 3,
         [](double a1, double a2, double a3) {
           return (kSqrt2 * a1 + 2 * kSqrt2 * a2 + 3 * a3) / (2 * a1 + 4 * a2 + 2 * kSqrt2 * a3);
         }}}},
      {"H3:a1a20",
       {{"h3-a1a20-lambda", 1, 3,
         [](double a1, double a2, double) { return (kTau * a1 + 2 * a2) / (3 * a1 + 2 * kTau * a2); }}}},
      {"H3:a10a3",
       {{"h3-a10a3-lambda", 1, 2,
         [](double a1, double, double a3) { return (2 * kTau * a1 + 2 * a3) / (3 * a1 + kTau * a3); }},
        {"h3-a10a3-eta", 3, 2,
         [](double a1, double, double a3) {
           return (2 * kTau * a1 + 2 * a3) / (kTau * a1 + (kSigma + 2) * a3);
         }}}},
      {"H3:0a2a3",
       {{"h3-0a2a3-lambda", 3, 1,
         [](double, double a2, double a3) { return kTau * (2 * a2 + a3) / (2 * a2 + (kSigma + 2) * a3); }}}},
      {"H3:generic",
       {{"h3-generic-lambda", 1, 3,
         [](double a1, double a2, double a3) {
           return (kTau * a1 + 2 * a2 + (2 + kSigma) * a3) / (3 * a1 + 2 * kTau * a2 + kTau * a3);
         }},
        {"h3-generic-eta", 2, 3,
         [](double a1, double a2, double a3) {
           return (kTau * a1 + 2 * a2 + (2 + kSigma) * a3) / (2 * kTau * a1 + 4 * a2 + 2 * a3);
         }}}},
  };
  static const std::vector<PublishedFormula> none;
  auto it = table.find(std::string(diagram_name(d)) + ":" + family);
  return it == table.end() ? none : it->second;
}

// Published families containing w, most specific last.
std::vector<const char*> families_of(const WeightIndices& w) {
  const bool p1 = positive(w.a1), p2 = positive(w.a2), p3 = positive(w.a3);
  std::vector<const char*> out;
  if (p1 && p2 && !p3) out.push_back("a1a20");
  if (p1 && !p2 && p3) out.push_back("a10a3");
  if (!p1 && p2 && p3 && w.group != Diagram::A3) out.push_back("0a2a3");
  if (p1 && p2 && p3) {
    out.push_back("generic");
    if (w.group == Diagram::A3 && nearly_equal(w.a1, w.a3)) out.push_back("a1a2a1");
  }
  return out;
}

Quaternion lambda_direction(const CoxeterSystem& system, const WeightIndices& w) {
  // The sigma-scaled H3 vector is a positive multiple of the weight combination.
  return w.a1 * system.weights[0] + w.a2 * system.weights[1] + w.a3 * system.weights[2];
}

}  // namespace

std::vector<int> face_classes(const Polyhedron& poly) {
  std::set<int> seen;
  for (const auto& f : poly.faces)
    if (f.weight_class > 0) seen.insert(f.weight_class);
  return {seen.begin(), seen.end()};
}

int published_reference_weight(const WeightIndices& w) {
  const auto families = families_of(w);
  if (families.empty()) return 0;
  // The a1 a2 a1 family is normalised on w1; every other family agrees with its first formula.
  const char* family = families.back();
  const auto& formulas = formulas_for(w.group, family);
  return formulas.empty() ? 0 : formulas.front().reference;
}

int default_reference_weight(const CoxeterSystem& system, const WeightIndices& w,
                             const std::vector<int>& classes) {
  if (const int published = published_reference_weight(w);
      published != 0 && std::find(classes.begin(), classes.end(), published) != classes.end()) {
    return published;
  }
  const Quaternion lambda = lambda_direction(system, w);
  int best = 0;
  double best_projection = -1.0;
  for (int k : classes) {
    const double p = scalar_product(system.weights[static_cast<std::size_t>(k - 1)], lambda);
    if (p > best_projection + 1e-12) {
      best_projection = p;
      best = k;
    }
  }
  return best;
}

DualSpec solve_scale_factors(const CoxeterSystem& system, const WeightIndices& w,
                             const std::vector<int>& classes, std::optional<int> reference) {
  w.validate();
  if (classes.empty()) throw Error("no face classes to build a dual from");
  DualSpec spec;
  spec.contributing_weights = classes;
  std::sort(spec.contributing_weights.begin(), spec.contributing_weights.end());
  spec.reference_weight = reference ? *reference : default_reference_weight(system, w, classes);
  if (std::find(classes.begin(), classes.end(), spec.reference_weight) == classes.end()) {
    throw Error("reference weight w" + std::to_string(spec.reference_weight) + " is not a face class");
  }

  const Quaternion lambda = lambda_direction(system, w);
  const double scale = lambda.norm();
  auto projection = [&](int k) {
    const Quaternion& wk = system.weights[static_cast<std::size_t>(k - 1)];
    const double p = scalar_product(wk, lambda);
    if (p <= 1e-12 * scale * wk.norm()) {
      throw ZeroProjection("weight w" + std::to_string(k) + " is orthogonal to Lambda");
    }
    return p;
  };
  const double ref = projection(spec.reference_weight);
  for (int k : spec.contributing_weights) spec.scale_factors[static_cast<std::size_t>(k - 1)] = ref / projection(k);
  set_expected_kind(system, w, spec);
  return spec;
}

std::vector<FormulaCheck> closed_form_scale_validation(const CoxeterSystem& system,
                                                       const WeightIndices& w) {
  std::vector<FormulaCheck> out;
  const auto classes = classes_from_indices(system, w);
  for (const char* family : families_of(w)) {
    for (const auto& f : formulas_for(system.name, family)) {
      const DualSpec spec = solve_scale_factors(system, w, classes, f.reference);
      FormulaCheck check;
      check.name = f.name;
      check.weight = f.weight;
      check.reference = f.reference;
      check.published = f.value(w.a1, w.a2, w.a3);
      check.solved = spec.factor(f.weight);
      check.abs_diff = std::abs(check.published - check.solved);
      out.push_back(check);
    }
  }
  return out;
}

DualSolid build_dual(const Polyhedron& primal, const DualSpec& spec, const ReflectionGroup& group) {
  const auto& system = group.system();
  const double eps = epsilon();

  DualSolid dual;
  dual.spec = spec;
  VectorSet index(eps);
  for (int k : spec.contributing_weights) {
    const Quaternion& wk = system.weights[static_cast<std::size_t>(k - 1)];
    const double s = spec.factor(k);
    dual.sphere_radii.push_back(s * wk.norm());
    for (const auto& v : orbit(group, s * wk).vertices) {
      if (index.insert(v).second) dual.provenance.push_back(k);
    }
  }
  {
    // Same vertex order as orbits.
    auto sorted = index.items();
    canonical_sort(sorted);
    VectorSet reindexed(eps);
    std::vector<int> provenance;
    for (const auto& v : sorted) {
      provenance.push_back(dual.provenance[*index.find(v)]);
      reindexed.insert(v);
    }
    dual.provenance = std::move(provenance);
    index = std::move(reindexed);
  }
  dual.mesh.vertices = index.items();

  // Dual vertex of every primal face.
  std::vector<std::size_t> dual_of_face(primal.F());
  std::vector<std::vector<std::size_t>> faces_at(primal.V());
  for (std::size_t f = 0; f < primal.F(); ++f) {
    const Face& face = primal.faces[f];
    if (face.weight_class <= 0) throw Error("dual construction needs faces with a weight class");
    const Quaternion& wk = system.weights[static_cast<std::size_t>(face.weight_class - 1)];
    const Quaternion centre =
        (spec.factor(face.weight_class) * wk.norm()) * normalized(centroid(face_points(primal, face)));
    auto hit = index.find(centre);
    if (!hit) throw Error("face centre " + to_string(centre) + " is not in the scaled weight orbits");
    dual_of_face[f] = *hit;
    for (auto v : face.cycle) faces_at[v].push_back(f);
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t v = 0; v < primal.V(); ++v) {
    std::vector<std::size_t> ids;
    for (auto f : faces_at[v]) ids.push_back(dual_of_face[f]);

    const Quaternion axis = normalized(primal.vertices[v]);
    std::vector<Quaternion> pts;
    for (auto id : ids) pts.push_back(dual.mesh.vertices[id]);
    const Quaternion c = centroid(pts);
    double radius = 0.0;
    for (const auto& p : pts) radius = std::max(radius, distance(p, c));
    for (const auto& p : pts) {
      if (std::abs(scalar_product(p - c, axis)) > 1e-8 * std::max(radius, eps)) {
        throw NonCoplanarDualFace("dual face of vertex " + std::to_string(v) +
                                  " is not orthogonal to it");
      }
    }

    Face face;
    face.cycle = order_cycle(dual.mesh.vertices, ids);
    face.kind = classify_face(face_points(dual.mesh, face));
    for (std::size_t i = 0; i < face.cycle.size(); ++i) {
      std::size_t a = face.cycle[i];
      std::size_t b = face.cycle[(i + 1) % face.cycle.size()];
      if (a > b) std::swap(a, b);
      if (seen.emplace(a, b).second)
        dual.mesh.edges.push_back({a, b, 0, distance(dual.mesh.vertices[a], dual.mesh.vertices[b])});
    }
    dual.mesh.faces.push_back(std::move(face));
  }
  std::sort(dual.mesh.edges.begin(), dual.mesh.edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return dual;
}

DualSolid build_dual(const Polyhedron& primal, const ReflectionGroup& group, const WeightIndices& w) {
  const DualSpec spec = solve_scale_factors(group.system(), w, face_classes(primal));
  return build_dual(primal, spec, group);
}

std::vector<double> sphere_radii(const DualSolid& dual, const CoxeterSystem& system) {
  std::vector<double> out;
  for (int k : dual.spec.contributing_weights)
    out.push_back(dual.spec.factor(k) * system.weights[static_cast<std::size_t>(k - 1)].norm());
  return out;
}

TransitivityResult face_transitivity_check(const DualSolid& dual, const ReflectionGroup& group) {
  TransitivityResult result;
  const auto& mesh = dual.mesh;
  result.witness.assign(mesh.F(), std::nullopt);
  if (mesh.F() == 0) return result;

  VectorSet index(epsilon());
  for (const auto& v : mesh.vertices) index.insert(v);
  std::map<std::vector<std::size_t>, std::size_t> face_by_set;
  for (std::size_t f = 0; f < mesh.F(); ++f) {
    auto ids = mesh.faces[f].cycle;
    std::sort(ids.begin(), ids.end());
    face_by_set.emplace(std::move(ids), f);
  }

  const auto base = face_points(mesh, mesh.faces[0]);
  for (std::size_t gi = 0; gi < group.order(); ++gi) {
    std::vector<std::size_t> image;
    bool complete = true;
    for (const auto& p : base) {
      auto hit = index.find(apply(group.elements()[gi], p));
      if (!hit) {
        complete = false;
        break;
      }
      image.push_back(*hit);
    }
    if (!complete) continue;
    std::sort(image.begin(), image.end());
    auto it = face_by_set.find(image);
    if (it != face_by_set.end() && !result.witness[it->second]) result.witness[it->second] = gi;
  }

  result.transitive = true;
  for (std::size_t f = 0; f < mesh.F(); ++f) {
    if (!result.witness[f]) {
      result.transitive = false;
      result.failing_pair = std::make_pair(std::size_t{0}, f);
      break;
    }
  }
  return result;
}

double max_orthogonality_error(const Polyhedron& primal, const DualSolid& dual) {
  double worst = 0.0;
  for (std::size_t v = 0; v < primal.V() && v < dual.mesh.F(); ++v) {
    const Quaternion n = polygon_normal(face_points(dual.mesh, dual.mesh.faces[v]));
    const Quaternion& p = primal.vertices[v];
    worst = std::max(worst, cross(n, p).norm() / (n.norm() * p.norm()));
  }
  return worst;
}

double max_dual_planarity_error(const DualSolid& dual) {
  double worst = 0.0;
  for (const auto& face : dual.mesh.faces) {
    const auto pts = face_points(dual.mesh, face);
    const Quaternion c = centroid(pts);
    const Quaternion n = normalized(polygon_normal(pts));
    double radius = 0.0;
    for (const auto& p : pts) radius = std::max(radius, distance(p, c));
    for (const auto& p : pts) worst = std::max(worst, std::abs(scalar_product(p - c, n)) / radius);
  }
  return worst;
}

}  // namespace cxp
