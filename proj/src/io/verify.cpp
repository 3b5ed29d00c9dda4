#include "cxp/io/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "cxp/errors.hpp"

namespace cxp::io {

namespace {

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

CheckResult pass_if(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

// Coxeter exponents for the pairs (1,2), (2,3), (1,3).
std::array<int, 3> coxeter_exponents(Diagram d) {
  switch (d) {
    case Diagram::A3: return {3, 3, 2};
    case Diagram::B3: return {3, 4, 2};
    case Diagram::H3: return {5, 3, 2};
  }
  return {0, 0, 0};
}

bool proportional_to(const WeightIndices& w, double b1, double b2, double b3) {
  if (w.a1 <= 0.0) return false;
  const double t = 1e-12 * std::max(1.0, w.a1);
  return std::abs(w.a2 - b2 / b1 * w.a1) <= t * b2 && std::abs(w.a3 - b3 / b1 * w.a1) <= t * b3;
}

bool pairwise_distinct_nonzero(const WeightIndices& w) {
  std::vector<double> nz;
  for (std::size_t i = 0; i < 3; ++i)
    if (w[i] > 0.0) nz.push_back(w[i]);
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j)
      if (std::abs(nz[i] - nz[j]) <= 1e-12 * std::max(nz[i], nz[j])) return false;
  return true;
}

std::size_t count_sides(const Polyhedron& poly, std::size_t sides) {
  return static_cast<std::size_t>(std::count_if(poly.faces.begin(), poly.faces.end(),
                                                [&](const Face& f) { return f.cycle.size() == sides; }));
}

Json selection_json(const Selection& sel) {
  return {{"name", sel.entry ? Json(sel.entry->name) : Json(nullptr)},
          {"group", std::string(diagram_name(sel.indices.group))},
          {"indices", Json::array({sel.indices.a1, sel.indices.a2, sel.indices.a3})},
          {"sigma_scale", sel.indices.sigma_scaled()},
          {"chiral", sel.chiral}};
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerifyResult::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::vector<Conflict> known_conflicts(const CoxeterSystem& system, const WeightIndices& w,
                                      const Polyhedron& primal, const DualSolid* dual) {
  std::vector<Conflict> out;
  if (w.group == Diagram::H3 && w.a1 > 0.0 && w.a2 > 0.0 && w.a3 == 0.0) {
    out.push_back({"h3-a1a20-face-counts",
                   "published census of the H3 (a1 a2 0) orbit has 20 decagons and 12 triangles; "
                   "stabilizer indices give 120/10 = 12 decagons and 120/6 = 20 triangles",
                   {{"decagons", 20}, {"triangles", 12}},
                   {{"decagons", count_sides(primal, 10)}, {"triangles", count_sides(primal, 3)}}});
  }
  if (w.group == Diagram::B3 && proportional_to(w, 1, 2, 3)) {
    const double s2 = std::sqrt(2.0);
    const double published = (5.0 * s2 + 9.0) / (10.0 + 2.0 * s2);
    double solved = 0.0;
    if (dual && dual->spec.reference_weight == 3) {
      solved = dual->spec.factor(2);
    } else {
      solved = solve_scale_factors(system, w, face_classes(primal), 3).factor(2);
    }
    const double norm2 = system.weights[1].norm();
    out.push_back({"b3-123-middle-radius",
                   "published w2 coefficient (5 sqrt2 + 9)/(10 + 2 sqrt2) of the B3 (123) dual, radius 1.772; "
                   "the general B3 formula and the solver give eta = (5 sqrt2 + 9)/(10 + 6 sqrt2)",
                   {{"coefficient", published}, {"radius", 1.772}},
                   {{"coefficient", solved}, {"radius", solved * norm2}}});
  }
  return out;
}

std::vector<CheckResult> group_checks(const ReflectionGroup& group) {
  std::vector<CheckResult> out;
  const auto& system = group.system();
  const std::size_t want = expected_order(system.name);
  std::size_t stars = 0;
  for (const auto& g : group.elements()) stars += g.star() ? 1 : 0;
  out.push_back(pass_if("group_order", group.order() == want && 2 * stars == want,
                        std::to_string(group.order()) + " elements, " + std::to_string(group.order() - stars) +
                            " plain + " + std::to_string(stars) + " star"));

  const Quaternion probe{0.0, 0.3141592653589793, 0.2718281828459045, 0.5772156649015329};
  const auto want_m = coxeter_exponents(system.name);
  static constexpr std::size_t kPairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  bool ok = true;
  std::string detail;
  for (std::size_t p = 0; p < 3; ++p) {
    const int m = generator_pair_order(system, kPairs[p][0], kPairs[p][1], probe);
    ok = ok && m == want_m[p];
    detail += (p ? "," : "") + std::to_string(m);
  }
  for (const auto& r : system.generators) ok = ok && action_order(r, probe) == 2;
  out.push_back(pass_if("coxeter_relations", ok, "pair orders (" + detail + ")"));

  Matrix3 measured{};
  double weight_err = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      measured[i][j] = scalar_product(system.simple_roots[i], system.simple_roots[j]);
      const double d = scalar_product(system.simple_roots[i], system.weights[j]) - (i == j ? 1.0 : 0.0);
      weight_err = std::max(weight_err, std::abs(d));
    }
  }
  const double cartan_err = max_abs_diff(measured, tabulated_cartan(system.name));
  out.push_back(pass_if("cartan", cartan_err <= 1e-12 && weight_err <= 1e-12,
                        fmt("cartan error %.3g, weight duality error %.3g", cartan_err, weight_err)));
  return out;
}

std::vector<CheckResult> primal_checks(const ReflectionGroup& group, const Selection& sel,
                                       const Polyhedron& primal) {
  std::vector<CheckResult> out;
  const auto& system = group.system();
  const auto& w = sel.indices;

  out.push_back(pass_if("euler", primal.euler_characteristic() == 2,
                        "V - E + F = " + std::to_string(primal.euler_characteristic())));

  if (sel.chiral) {
    out.push_back({"hull_equality", CheckStatus::Skipped, "faces come from the hull"});
  } else {
    bool equal = false;
    std::string detail;
    try {
      equal = hull_oracle(primal.vertices) == face_vertex_sets(primal);
      detail = equal ? "group faces equal hull facets" : "group faces differ from hull facets";
    } catch (const Error& e) {
      detail = e.what();
    }
    out.push_back(pass_if("hull_equality", equal, detail));

    const Quaternion lambda = indices_to_vector(system, w);
    const std::size_t stab = stabilizer(group, lambda).size();
    out.push_back(pass_if("orbit_size_law", primal.V() * stab == group.order(),
                          std::to_string(primal.V()) + " x " + std::to_string(stab) + " vs " +
                              std::to_string(group.order())));

    if (w.group == Diagram::H3) {
      out.push_back({"closed_form_orbit", CheckStatus::Skipped, "no closed form for H3"});
    } else {
      std::vector<Quaternion> closed;
      if (w.group == Diagram::A3) {
        closed = dedup(closed_form_A3(w));
      } else {
        const Matrix3 m = closed_form_alignment_B3(system);
        for (const auto& v : dedup(closed_form_B3(w))) closed.push_back(transform(m, v));
      }
      const double d = set_distance(closed, primal.vertices);
      out.push_back(pass_if("closed_form_orbit", closed.size() == primal.V() && d < 1e-9,
                            fmt("set distance %.3g", d)));
    }
  }

  if (sel.entry) {
    const auto c = census(primal);
    const auto& e = sel.entry->expected;
    const bool ok = c.V == e.V && c.E == e.E && c.F == e.F && c.face_kinds == e.face_kinds;
    std::string got;
    for (const auto& [k, n] : c.face_kinds) got += " " + std::to_string(n) + " " + k;
    out.push_back(pass_if("catalog_census", ok,
                          std::to_string(c.V) + "/" + std::to_string(c.E) + "/" + std::to_string(c.F) + got));

    for (const auto& g : sel.entry->face_geometry) {
      std::size_t seen = 0;
      double angle_err = 0.0, ratio_err = 0.0, length_err = 0.0;
      for (const auto& f : primal.faces) {
        if (f.kind.label() != g.kind) continue;
        ++seen;
        if (g.interior_angle)
          for (double a : f.kind.interior_angles) angle_err = std::max(angle_err, std::abs(a - *g.interior_angle));
        const auto& lens = f.kind.edge_lengths;
        if (g.edge_ratio && !lens.empty())
          ratio_err = std::max(ratio_err, std::abs(lens.back() / lens.front() - *g.edge_ratio));
        if (g.edge_length)
          for (double l : lens) length_err = std::max(length_err, std::abs(l - *g.edge_length));
      }
      const bool ok = seen > 0 && angle_err <= g.angle_tol && ratio_err <= g.ratio_tol && length_err <= g.length_tol;
      char buf[200];
      std::snprintf(buf, sizeof buf, "%zu faces; angle err %.3g deg, ratio err %.3g, length err %.3g", seen,
                    angle_err, ratio_err, length_err);
      out.push_back(pass_if("face_geometry:" + g.kind, ok, buf));
    }
  }
  return out;
}

std::vector<CheckResult> dual_checks(const ReflectionGroup& group, const Selection& sel,
                                     const Polyhedron& primal, const DualSolid& dual) {
  std::vector<CheckResult> out;
  const auto& system = group.system();
  const auto& w = sel.indices;

  const auto formulas = closed_form_scale_validation(system, w);
  if (formulas.empty()) {
    out.push_back({"scale_formulas", CheckStatus::Skipped, "no published formula for this pattern"});
  } else {
    double worst = 0.0;
    std::string names;
    for (const auto& f : formulas) {
      worst = std::max(worst, f.abs_diff);
      names += (names.empty() ? "" : ",") + f.name;
    }
    out.push_back(pass_if("scale_formulas", worst <= 1e-10, names + fmt(": max diff %.3g", worst)));
  }

  if (sel.entry) {
    for (const auto& s : sel.entry->scale_factors) {
      const double got = solve_scale_factors(system, w, face_classes(primal), s.reference).factor(s.weight);
      out.push_back(pass_if("printed_scale:w" + std::to_string(s.weight), std::abs(got - s.value) <= s.tol,
                            fmt("solved %.17g, printed %.17g", got, s.value)));
    }
    for (const auto& r : sel.entry->dual_radii) {
      const auto k = static_cast<std::size_t>(r.weight - 1);
      const double got = dual.spec.factor(r.weight) * system.weights[k].norm();
      out.push_back(pass_if("dual_radius:w" + std::to_string(r.weight), std::abs(got - r.value) <= r.tol,
                            fmt("radius %.17g, printed %.17g", got, r.value)));
    }
  }

  out.push_back(pass_if("dual_euler", dual.mesh.euler_characteristic() == 2,
                        "V - E + F = " + std::to_string(dual.mesh.euler_characteristic())));

  if (pairwise_distinct_nonzero(w)) {
    const std::string want = shape_label(dual.spec.face_kind_expected, dual.spec.expected_sides);
    std::set<std::string> got;
    for (const auto& f : dual.mesh.faces) got.insert(f.kind.label());
    out.push_back(pass_if("dual_face_kind", got.size() == 1 && *got.begin() == want,
                          "expected " + want + ", got " + (got.size() == 1 ? *got.begin() : "mixed")));
  } else {
    out.push_back({"dual_face_kind", CheckStatus::Skipped, "equal nonzero indices"});
  }

  const auto t = face_transitivity_check(dual, group);
  out.push_back(pass_if("face_transitivity", t.transitive,
                        t.transitive ? "every face is an image of face 0"
                                     : "no element maps face " + std::to_string(t.failing_pair->first) +
                                           " to face " + std::to_string(t.failing_pair->second)));

  const double orth = max_orthogonality_error(primal, dual);
  out.push_back(pass_if("dual_orthogonality", orth <= 1e-9, fmt("max sine %.3g", orth)));
  const double plan = max_dual_planarity_error(dual);
  out.push_back(pass_if("dual_planarity", plan <= 1e-8, fmt("max relative deviation %.3g", plan)));
  return out;
}

std::vector<CheckResult> chiral_checks(const ReflectionGroup& group, const WeightIndices& w) {
  std::vector<CheckResult> out;
  const auto pair = chiral_orbit_pair(group, w);
  const std::size_t want = group.order() / 2;
  out.push_back(pass_if("chiral_orbit_sizes", pair.first.size() == want && pair.second.size() == want,
                        std::to_string(pair.first.size()) + " + " + std::to_string(pair.second.size())));

  double spread = 0.0;
  bool counts_equal = true;
  for (const auto* set : {&pair.first, &pair.second}) {
    std::vector<double> nearest;
    for (std::size_t i = 0; i < set->size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < set->size(); ++j)
        if (i != j) best = std::min(best, distance((*set)[i], (*set)[j]));
      nearest.push_back(best);
    }
    const auto [lo, hi] = std::minmax_element(nearest.begin(), nearest.end());
    spread = std::max(spread, *hi - *lo);
    std::size_t first_count = 0;
    for (std::size_t i = 0; i < set->size(); ++i) {
      std::size_t n = 0;
      for (std::size_t j = 0; j < set->size(); ++j)
        if (i != j && distance((*set)[i], (*set)[j]) <= *lo + 1e-9) ++n;
      if (i == 0) first_count = n;
      counts_equal = counts_equal && n == first_count;
    }
  }
  out.push_back(pass_if("chiral_equal_neighbour_distances", spread <= 1e-9 && counts_equal,
                        fmt("nearest-distance spread %.3g", spread)));

  std::vector<Quaternion> image;
  for (const auto& v : pair.first) image.push_back(apply(group.system().generators[0], v));
  const double swap = set_distance(image, pair.second);
  out.push_back(pass_if("chiral_r1_swaps", swap <= 1e-9, fmt("set distance %.3g", swap)));

  double closest = std::numeric_limits<double>::infinity();
  for (const auto& g : group.elements()) {
    if (!g.star()) continue;
    for (const auto* set : {&pair.first, &pair.second}) {
      std::vector<Quaternion> moved;
      for (const auto& v : *set) moved.push_back(apply(g, v));
      closest = std::min(closest, set_distance(moved, *set));
    }
  }
  out.push_back(pass_if("chiral_not_star_closed", closest > 1e-9,
                        fmt("smallest star-image set distance %.3g", closest)));

  const double t = GoldenConstants::tau;
  if (w.group == Diagram::A3 && std::abs(w.a1 - t) < 1e-12 && std::abs(w.a2 - 1.0) < 1e-12 &&
      std::abs(w.a3 - t) < 1e-12) {
    std::vector<Quaternion> a, b;
    for (const auto& v : icosahedron_set_a()) a.push_back(t * v);
    for (const auto& v : icosahedron_set_b()) b.push_back(t * v);
    const double da = set_distance(pair.first, a);
    const double db = set_distance(pair.second, b);
    out.push_back(pass_if("chiral_printed_sets", da <= 1e-9 && db <= 1e-9,
                          fmt("distances to tau * printed sets %.3g, %.3g", da, db)));
  }
  return out;
}

VerifyResult verify_selection(const Selection& sel) {
  VerifyResult result;
  result.label = sel.label;
  result.input = selection_json(sel);
  try {
    sel.indices.validate();
    const ReflectionGroup group = generate_group(build_system(sel.indices.group));
    result.checks = group_checks(group);
    if (sel.chiral) {
      const Quaternion lambda = indices_to_vector(group.system(), sel.indices);
      const Polyhedron primal =
          polyhedron_from_hull(orbit(named_subgroup(group, Subgroup::Chiral), lambda).vertices);
      for (auto& c : primal_checks(group, sel, primal)) result.checks.push_back(std::move(c));
      for (auto& c : chiral_checks(group, sel.indices)) result.checks.push_back(std::move(c));
    } else {
      const Polyhedron primal = build_polyhedron(group, sel.indices);
      for (auto& c : primal_checks(group, sel, primal)) result.checks.push_back(std::move(c));
      const DualSolid dual = build_dual(primal, group, sel.indices);
      for (auto& c : dual_checks(group, sel, primal, dual)) result.checks.push_back(std::move(c));
      result.conflicts = known_conflicts(group.system(), sel.indices, primal, &dual);
    }
  } catch (const std::exception& e) {
    result.checks.push_back({"construction", CheckStatus::Fail, e.what()});
  }
  for (const auto& c : result.conflicts) result.checks.push_back({"conflict:" + c.id, CheckStatus::Flagged, c.description});
  return result;
}

std::vector<VerifyResult> verify_catalog() {
  std::vector<VerifyResult> out;
  for (const auto& e : catalog()) out.push_back(verify_selection({e.indices, e.chiral, &e, e.name}));
  return out;
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return out;
}

Json conflicts_json(const std::vector<Conflict>& conflicts) {
  Json out = Json::array();
  for (const auto& c : conflicts) {
    out.push_back({{"id", c.id},
                   {"status", "flagged"},
                   {"description", c.description},
                   {"published", c.published},
                   {"computed", c.computed}});
  }
  return out;
}

Json verify_json(const std::vector<VerifyResult>& results) {
  std::size_t counts[4] = {0, 0, 0, 0};
  Json entries = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    for (const auto& c : r.checks) ++counts[static_cast<int>(c.status)];
    ok = ok && r.ok();
    entries.push_back({{"label", r.label}, {"input", r.input}, {"ok", r.ok()}, {"checks", checks_json(r.checks)},
                       {"conflicts", conflicts_json(r.conflicts)}});
  }
  return {{"summary",
           {{"entries", results.size()},
            {"passed", counts[0]},
            {"failed", counts[1]},
            {"flagged", counts[2]},
            {"skipped", counts[3]},
            {"ok", ok}}},
          {"entries", entries}};
}

}  // namespace cxp::io
