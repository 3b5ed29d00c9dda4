#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cxp/coxeter.hpp"
#include "cxp/errors.hpp"
#include "cxp/quaternion.hpp"

using namespace cxp;

namespace {

Quaternion basis(int i) {
  Quaternion q{};
  (i == 0 ? q.q0 : i == 1 ? q.q1 : i == 2 ? q.q2 : q.q3) = 1.0;
  return q;
}

// Hamilton's table: row * column = sign * basis[index].
constexpr int kIndex[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

// Left-multiplication matrix of a, applied to b.
Quaternion matrix_product(const Quaternion& a, const Quaternion& b) {
  const double m[4][4] = {{a.q0, -a.q1, -a.q2, -a.q3},
                          {a.q1, a.q0, -a.q3, a.q2},
                          {a.q2, a.q3, a.q0, -a.q1},
                          {a.q3, -a.q2, a.q1, a.q0}};
  const double v[4] = {b.q0, b.q1, b.q2, b.q3};
  double r[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return {r[0], r[1], r[2], r[3]};
}

Quaternion random_q(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng), n(rng), n(rng)};
}

Quaternion random_vector(std::mt19937_64& rng) {
  auto q = random_q(rng);
  q.q0 = 0.0;
  return q;
}

}  // namespace

TEST_CASE("basis products follow Hamilton's table") {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Quaternion want = static_cast<double>(kSign[i][j]) * basis(kIndex[i][j]);
      CHECK(approx_equal(basis(i) * basis(j), want, 0.0));
    }
  }
}

TEST_CASE("(e1 + e2)(e1 - e2) = -2 e3") {
  const Quaternion a{0, 1, 1, 0};
  const Quaternion b{0, 1, -1, 0};
  CHECK(approx_equal(a * b, Quaternion{0, 0, 0, -2}, 1e-15));
}

TEST_CASE("product matches the left-multiplication matrix") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    const auto a = random_q(rng);
    const auto b = random_q(rng);
    CHECK(approx_equal(a * b, matrix_product(a, b), 1e-12));
    CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) < 1e-12 * (1 + a.norm() * b.norm()));
    CHECK(approx_equal((a * b).conj(), b.conj() * a.conj(), 1e-12));
  }
}

TEST_CASE("vector part of the product is -dot + cross") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_vector(rng);
    const auto b = random_vector(rng);
    const auto p = a * b;
    CHECK(p.q0 == doctest::Approx(-scalar_product(a, b)).epsilon(1e-12));
    CHECK(approx_equal(Quaternion::vector(p.q1, p.q2, p.q3), cross(a, b), 1e-12));
  }
}

TEST_CASE("reflection matches the Householder formula") {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 100; ++n) {
    const auto alpha = random_vector(rng);
    const auto v = random_vector(rng);
    const auto r = GroupElement::reflection(alpha);
    const Quaternion want = v - (2.0 * scalar_product(v, alpha) / scalar_product(alpha, alpha)) * alpha;
    CHECK(approx_equal(apply(r, v), want, 1e-12));
    CHECK(approx_equal(apply(r, alpha), -alpha, 1e-12));
  }
}

TEST_CASE("compose agrees with successive application on 1000 random triples") {
  std::mt19937_64 rng(10);
  std::bernoulli_distribution coin;
  // [p, conj p] and [p, conj p]* are the isometries of 3-space.
  auto element = [&] {
    const auto p = normalized(random_q(rng));
    return GroupElement::make(p, p.conj(), coin(rng));
  };
  for (int n = 0; n < 1000; ++n) {
    const auto g = element();
    const auto h = element();
    const auto k = element();
    const auto v = random_vector(rng);
    CHECK(approx_equal(apply(compose(g, h), v), apply(g, apply(h, v)), 1e-12));
    CHECK(same_element(compose(compose(g, h), k), compose(g, compose(h, k)), 1e-12));
    CHECK(approx_equal(apply(compose(g, inverse(g)), v), v, 1e-12));
  }
}

TEST_CASE("group elements are rotations or rotoreflections") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    const auto p = normalized(random_q(rng));
    const auto g = GroupElement::make(p, p.conj(), false);
    const auto star = GroupElement::make(g.left(), g.right(), true);
    const auto a = random_vector(rng);
    const auto b = random_vector(rng);
    // Inner products are preserved; determinant sign follows the star flag.
    CHECK(scalar_product(apply(g, a), apply(g, b)) == doctest::Approx(scalar_product(a, b)).epsilon(1e-12));
    const auto c = cross(a, b);
    CHECK(scalar_product(cross(apply(g, a), apply(g, b)), apply(g, c)) > 0);
    CHECK(scalar_product(cross(apply(star, a), apply(star, b)), apply(star, c)) < 0);
  }
}

TEST_CASE("sign canonicalisation identifies [p, q] with [-p, -q]") {
  const Quaternion p = normalized(Quaternion{-1, 2, 0.5, -3});
  const Quaternion q = normalized(Quaternion{0.2, -1, 1, 1});
  const auto a = GroupElement::make(p, q, false);
  const auto b = GroupElement::make(-p, -q, false);
  CHECK(same_element(a, b, 1e-15));
  CHECK(a.left().q0 > 0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(apply(GroupElement::identity(), Quaternion{1, 0, 0, 0}), NonVectorInput);
  CHECK_THROWS_AS(GroupElement::make(Quaternion{2, 0, 0, 0}, Quaternion{1, 0, 0, 0}, false), Error);
  CHECK(is_vector(Quaternion{0, 1, 2, 3}, 1e-12));
  CHECK_FALSE(is_unit(Quaternion{0, 1, 2, 3}, 1e-12));
}
