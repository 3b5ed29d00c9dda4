#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cxp/dual.hpp"
#include "cxp/errors.hpp"
#include "published.hpp"

using namespace cxp;

namespace {

const ReflectionGroup& group_of(Diagram d) {
  static const auto a3 = generate_group(build_system(Diagram::A3));
  static const auto b3 = generate_group(build_system(Diagram::B3));
  static const auto h3 = generate_group(build_system(Diagram::H3));
  return d == Diagram::A3 ? a3 : d == Diagram::B3 ? b3 : h3;
}

struct Built {
  Polyhedron primal;
  DualSolid dual;
};

Built build(const WeightIndices& w) {
  const auto& g = group_of(w.group);
  Built b{build_polyhedron(g, w), {}};
  b.dual = build_dual(b.primal, g, w);
  return b;
}

std::set<std::string> dual_kinds(const DualSolid& d) {
  std::set<std::string> out;
  for (const auto& f : d.mesh.faces) out.insert(f.kind.label());
  return out;
}

}  // namespace

TEST_CASE("published scale factors match the solver on 50 random draws per family") {
  published::Draw draw(301);
  for (const auto& fam : published::scale_families()) {
    const auto& sys = group_of(fam.group).system();
    for (int n = 0; n < 50; ++n) {
      const auto a = draw.three();
      const auto w = fam.draw(a[0], a[1], a[2]);
      const auto classes = face_classes(build_polyhedron(group_of(fam.group), w));
      for (const auto& f : fam.formulas) {
        CAPTURE(fam.name);
        CAPTURE(f.name);
        const double solved = solve_scale_factors(sys, w, classes, f.reference).factor(f.weight);
        CHECK(std::abs(solved - f.f(w.a1, w.a2, w.a3)) < 1e-10);
      }
    }
  }
}

TEST_CASE("library formula table agrees with the transcriptions") {
  published::Draw draw(302);
  for (const auto& fam : published::scale_families()) {
    const auto a = draw.three();
    const auto w = fam.draw(a[0], a[1], a[2]);
    const auto checks = closed_form_scale_validation(group_of(fam.group).system(), w);
    CHECK(checks.size() >= fam.formulas.size());
    for (const auto& c : checks) CHECK(c.abs_diff < 1e-10);
  }
}

TEST_CASE("printed scale factors") {
  const double r2 = published::r2;
  auto factor = [](Diagram d, bool sigma, double a1, double a2, double a3, int k, int ref) {
    const WeightIndices w{a1, a2, a3, d, sigma};
    const auto classes = face_classes(build_polyhedron(group_of(d), w));
    return solve_scale_factors(group_of(d).system(), w, classes, ref).factor(k);
  };
  CHECK(factor(Diagram::A3, false, 1, 2, 0, 1, 3) == doctest::Approx(5.0 / 7.0).epsilon(1e-14));
  CHECK(factor(Diagram::A3, false, 1, 1, 0, 1, 3) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(factor(Diagram::A3, false, 1, 2, 3, 1, 3) == doctest::Approx(1.4).epsilon(1e-14));
  CHECK(factor(Diagram::A3, false, 1, 2, 3, 2, 3) == doctest::Approx(7.0 / 8.0).epsilon(1e-14));
  CHECK(factor(Diagram::A3, false, 1, 2, 1, 2, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(factor(Diagram::B3, false, 0, 1, 2, 3, 1) == doctest::Approx((1 + r2) / (3 + r2)).epsilon(1e-14));
  CHECK(factor(Diagram::B3, false, 1, 2, 3, 1, 3) == doctest::Approx((5 * r2 + 9) / (6 + 3 * r2)).epsilon(1e-14));
  CHECK(factor(Diagram::B3, false, 1, 0, 2, 1, 2) == doctest::Approx((r2 + 4) / (r2 + 2)).epsilon(1e-14));
  CHECK(factor(Diagram::B3, false, 1, 0, 2, 3, 2) == doctest::Approx((2 + 4 * r2) / (6 + r2)).epsilon(1e-14));
  CHECK(factor(Diagram::B3, false, 1, 2, 0, 1, 3) == doctest::Approx(5 / (3 * r2)).epsilon(1e-14));
}

TEST_CASE("dual sphere radii") {
  const double s3 = std::sqrt(3.0);
  {
    const auto b = build({1, 2, 0, Diagram::A3, false});
    CHECK(b.dual.sphere_radii.size() == 2);
    CHECK(std::abs(b.dual.sphere_radii[0] - 5 * s3 / 14) < 1e-12);
    CHECK(std::abs(b.dual.sphere_radii[1] - s3 / 2) < 1e-12);
  }
  {
    const auto b = build({1, 2, 0, Diagram::B3, false});
    CHECK(std::abs(b.dual.sphere_radii[0] - 1.179) < 1e-3);
    CHECK(std::abs(b.dual.sphere_radii[1] - 1.225) < 1e-3);
  }
  {
    const auto b = build({1, 0, 2, Diagram::B3, false});
    CHECK(std::abs(b.dual.sphere_radii[0] - 1.5858) < 1e-3);
    CHECK(std::abs(b.dual.sphere_radii[1] - 1.4142) < 1e-3);
    CHECK(std::abs(b.dual.sphere_radii[2] - 1.2648) < 1e-3);
  }
  {
    // Relative radii 3 sqrt3/7 : 1 : 3 sqrt3/5 for A3 O(102), as a set.
    const auto b = build({1, 0, 2, Diagram::A3, false});
    std::multiset<long> got, want;
    for (double r : b.dual.sphere_radii) got.insert(std::lround(r / b.dual.sphere_radii[1] * 1e9));
    for (double r : {3 * s3 / 7, 1.0, 3 * s3 / 5}) want.insert(std::lround(r * 1e9));
    CHECK(got == want);
  }
  {
    const auto b = build({1, 2, 3, Diagram::B3, false});
    const double r2 = published::r2;
    const double eta = (r2 * 1 + 2 * r2 * 2 + 3 * 3) / (2 * 1 + 4 * 2 + 2 * r2 * 3);
    // |w2| squared is the (2,2) entry of the inverse Cartan matrix.
    const double w2 = std::sqrt(published::cartan_inverse(Diagram::B3)[1][1]);
    CHECK(std::abs(b.dual.sphere_radii[0] - 1.569) < 1e-3);
    CHECK(std::abs(b.dual.sphere_radii[1] - eta * w2) < 1e-12);
    CHECK(std::abs(b.dual.sphere_radii[2] - 1.225) < 1e-3);
  }
}

TEST_CASE("dual census and face kinds") {
  struct Row {
    WeightIndices w;
    std::size_t V, E, F;
    std::string kind;
  };
  for (const auto& r : {Row{{1, 2, 0, Diagram::A3, false}, 8, 18, 12, "isosceles-triangle"},
                        Row{{1, 0, 2, Diagram::A3, false}, 14, 24, 12, "kite"},
                        Row{{1, 2, 3, Diagram::A3, false}, 14, 36, 24, "scalene-triangle"},
                        Row{{1, 2, 0, Diagram::B3, false}, 14, 36, 24, "isosceles-triangle"},
                        Row{{1, 0, 2, Diagram::B3, false}, 26, 48, 24, "kite"},
                        Row{{0, 1, 2, Diagram::B3, false}, 14, 36, 24, "isosceles-triangle"},
                        Row{{1, 2, 3, Diagram::B3, false}, 26, 72, 48, "scalene-triangle"},
                        Row{{1, 2, 0, Diagram::H3, true}, 32, 90, 60, "isosceles-triangle"},
                        Row{{1, 0, 2, Diagram::H3, true}, 62, 120, 60, "kite"},
                        Row{{0, 1, 2, Diagram::H3, true}, 32, 90, 60, "isosceles-triangle"},
                        Row{{1, 2, 3, Diagram::H3, true}, 62, 180, 120, "scalene-triangle"},
                        Row{{0, 1, 0, Diagram::A3, false}, 8, 12, 6, "square"},
                        Row{{0, 1, 0, Diagram::B3, false}, 14, 24, 12, "kite"},
                        Row{{0, 0, 1, Diagram::H3, true}, 20, 30, 12, "regular-pentagon"}}) {
    CAPTURE(r.kind);
    const auto b = build(r.w);
    CHECK(b.dual.mesh.V() == r.V);
    CHECK(b.dual.mesh.E() == r.E);
    CHECK(b.dual.mesh.F() == r.F);
    CHECK(b.dual.mesh.euler_characteristic() == 2);
    CHECK(dual_kinds(b.dual) == std::set<std::string>{r.kind});
    CHECK(shape_label(b.dual.spec.face_kind_expected, b.dual.spec.expected_sides) == r.kind);
    CHECK(max_orthogonality_error(b.primal, b.dual) < 1e-9);
    CHECK(max_dual_planarity_error(b.dual) < 1e-8);
  }
}

TEST_CASE("dual faces correspond to primal vertices") {
  const auto b = build({1, 2, 3, Diagram::H3, true});
  REQUIRE(b.dual.mesh.F() == b.primal.V());
  for (std::size_t v = 0; v < b.primal.V(); ++v) {
    const auto n = polygon_normal(face_points(b.dual.mesh, b.dual.mesh.faces[v]));
    CHECK(scalar_product(normalized(n), normalized(b.primal.vertices[v])) > 1 - 1e-12);
  }
}

TEST_CASE("face transitivity, with a perturbed negative control") {
  published::Draw draw(303);
  for (auto d : {Diagram::A3, Diagram::B3, Diagram::H3}) {
    for (int n = 0; n < 3; ++n) {
      const auto a = draw.three();
      const WeightIndices w{a[0], a[1], a[2], d, d == Diagram::H3};
      auto b = build(w);
      const auto t = face_transitivity_check(b.dual, group_of(d));
      CHECK(t.transitive);
      CHECK_FALSE(t.failing_pair.has_value());
      b.dual.mesh.vertices[0] = 1.01 * b.dual.mesh.vertices[0];
      const auto bad = face_transitivity_check(b.dual, group_of(d));
      CHECK_FALSE(bad.transitive);
      CHECK(bad.failing_pair.has_value());
    }
  }
}

TEST_CASE("dual is fixed under uniform index scaling") {
  const auto b1 = build({1, 2, 3, Diagram::B3, false});
  const auto b2 = build({2.5, 5, 7.5, Diagram::B3, false});
  CHECK(b1.dual.spec.scale_factors == b2.dual.spec.scale_factors);
  CHECK(b1.dual.mesh.V() == b2.dual.mesh.V());
  for (std::size_t i = 0; i < b1.dual.mesh.V(); ++i)
    CHECK(approx_equal(b1.dual.mesh.vertices[i], b2.dual.mesh.vertices[i], 1e-12));
  // The primal scales by the same factor.
  for (std::size_t i = 0; i < b1.primal.V(); ++i)
    CHECK(approx_equal(2.5 * b1.primal.vertices[i], b2.primal.vertices[i], 1e-12));
}

TEST_CASE("reference weight") {
  const auto& sys = group_of(Diagram::A3).system();
  const WeightIndices w{1, 2, 1, Diagram::A3, false};
  CHECK(published_reference_weight(w) == 1);
  CHECK(published_reference_weight({1, 2, 3, Diagram::A3, false}) == 3);
  CHECK(published_reference_weight({1, 0, 2, Diagram::B3, false}) == 2);
  const auto spec = solve_scale_factors(sys, w, {1, 2, 3});
  CHECK(spec.reference_weight == 1);
  CHECK(spec.factor(1) == 1.0);
  CHECK_THROWS_AS(solve_scale_factors(sys, w, {1, 3}, 2), Error);
}

TEST_CASE("dual vertices are canonically ordered and keep their provenance") {
  const auto b = build({1, 2, 3, Diagram::B3, false});
  auto sorted = b.dual.mesh.vertices;
  canonical_sort(sorted);
  CHECK(sorted.size() == b.dual.mesh.V());
  for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(approx_equal(sorted[i], b.dual.mesh.vertices[i], 0.0));
  const auto& sys = group_of(Diagram::B3).system();
  REQUIRE(b.dual.provenance.size() == b.dual.mesh.V());
  for (std::size_t i = 0; i < b.dual.mesh.V(); ++i) {
    const int k = b.dual.provenance[i];
    const double r = b.dual.spec.factor(k) * sys.weights[static_cast<std::size_t>(k - 1)].norm();
    CHECK(b.dual.mesh.vertices[i].norm() == doctest::Approx(r).epsilon(1e-12));
  }
}
