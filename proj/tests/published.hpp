// Printed values, transcribed for use as test oracles.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cxp/coxeter.hpp"
#include "cxp/orbit.hpp"

namespace published {

inline const double t = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double s = (1.0 - std::sqrt(5.0)) / 2.0;
inline const double r2 = std::sqrt(2.0);

using M3 = std::array<std::array<double, 3>, 3>;

inline M3 cartan(cxp::Diagram d) {
  switch (d) {
    case cxp::Diagram::A3: return {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
    case cxp::Diagram::B3: return {{{2, -1, 0}, {-1, 2, -r2}, {0, -r2, 2}}};
    case cxp::Diagram::H3: return {{{2, -t, 0}, {-t, 2, -1}, {0, -1, 2}}};
  }
  return {};
}

inline M3 cartan_inverse(cxp::Diagram d) {
  switch (d) {
    case cxp::Diagram::A3: return {{{0.75, 0.5, 0.25}, {0.5, 1, 0.5}, {0.25, 0.5, 0.75}}};
    case cxp::Diagram::B3: return {{{1, 1, 1 / r2}, {1, 2, r2}, {1 / r2, r2, 1.5}}};
    case cxp::Diagram::H3: {
      const double t2 = t * t, t3 = t2 * t;
      return {{{1.5 * t2, t3, t3 / 2}, {t3, 2 * t2, t2}, {t3 / 2, t2, (t + 2) / 2}}};
    }
  }
  return {};
}

/// A published scale factor: s_weight with s_reference = 1.
struct Formula {
  std::string name;
  int weight;
  int reference;
  std::function<double(double, double, double)> f;
};

/// Index family: which indices are zero (or tied).
struct Family {
  std::string name;
  cxp::Diagram group;
  bool sigma;
  std::vector<Formula> formulas;
  // Draws a random member from three positive reals.
  std::function<cxp::WeightIndices(double, double, double)> draw;
};

inline cxp::WeightIndices make(cxp::Diagram d, bool sigma, double a1, double a2, double a3) {
  return {a1, a2, a3, d, sigma};
}

inline std::vector<Family> scale_families() {
  using cxp::Diagram;
  std::vector<Family> out;
  out.push_back({"A3 a1a2 0", Diagram::A3, false,
                 {{"lambda", 1, 3, [](double a1, double a2, double) { return (a1 + 2 * a2) / (3 * a1 + 2 * a2); }}},
                 [](double x, double y, double) { return make(Diagram::A3, false, x, y, 0); }});
  out.push_back({"A3 a1 0 a3", Diagram::A3, false,
                 {{"lambda", 1, 2, [](double a1, double, double a3) { return (2 * a1 + 2 * a3) / (3 * a1 + a3); }},
                  {"eta", 3, 2, [](double a1, double, double a3) { return (2 * a1 + 2 * a3) / (a1 + 3 * a3); }}},
                 [](double x, double, double z) { return make(Diagram::A3, false, x, 0, z); }});
  out.push_back({"A3 generic", Diagram::A3, false,
                 {{"lambda", 1, 3,
                   [](double a1, double a2, double a3) { return (a1 + 2 * a2 + 3 * a3) / (3 * a1 + 2 * a2 + a3); }},
                  {"eta", 2, 3,
                   [](double a1, double a2, double a3) {
                     return (a1 + 2 * a2 + 3 * a3) / (2 * a1 + 4 * a2 + 2 * a3);
                   }}},
                 [](double x, double y, double z) { return make(Diagram::A3, false, x, y, z); }});
  out.push_back({"A3 a1a2a1", Diagram::A3, false,
                 {{"lambda", 2, 1, [](double a1, double a2, double) { return (2 * a1 + a2) / (2 * (a1 + a2)); }}},
                 [](double x, double y, double) { return make(Diagram::A3, false, x, y, x); }});
  out.push_back({"B3 a1a2 0", Diagram::B3, false,
                 {{"lambda", 1, 3, [](double a1, double a2, double) { return (a1 + 2 * a2) / (r2 * (a1 + a2)); }}},
                 [](double x, double y, double) { return make(Diagram::B3, false, x, y, 0); }});
  out.push_back({"B3 a1 0 a3", Diagram::B3, false,
                 {{"lambda", 1, 2, [](double a1, double, double a3) { return (r2 * a1 + 2 * a3) / (r2 * a1 + a3); }},
                  {"eta", 3, 2,
                   [](double a1, double, double a3) { return (2 * a1 + 2 * r2 * a3) / (r2 * a1 + 3 * a3); }}},
                 [](double x, double, double z) { return make(Diagram::B3, false, x, 0, z); }});
  out.push_back({"B3 0a2a3", Diagram::B3, false,
                 {{"lambda", 3, 1,
                   [](double, double a2, double a3) { return (2 * a2 + r2 * a3) / (2 * r2 * a2 + 3 * a3); }}},
                 [](double, double y, double z) { return make(Diagram::B3, false, 0, y, z); }});
  out.push_back({"B3 generic", Diagram::B3, false,
                 {{"lambda", 1, 3,
                   [](double a1, double a2, double a3) {
                     return (r2 * a1 + 2 * r2 * a2 + 3 * a3) / (2 * a1 + 2 * a2 + r2 * a3);
                   }},
                  {"eta", 2, 3,
                   [](double a1, double a2, double a3) {
                     return (r2 * a1 + 2 * r2 * a2 + 3 * a3) / (2 * a1 + 4 * a2 + 2 * r2 * a3);
                   }}},
                 [](double x, double y, double z) { return make(Diagram::B3, false, x, y, z); }});
  out.push_back({"H3 a1a2 0", Diagram::H3, true,
                 {{"lambda", 1, 3,
                   [](double a1, double a2, double) { return (t * a1 + 2 * a2) / (3 * a1 + 2 * t * a2); }}},
                 [](double x, double y, double) { return make(Diagram::H3, true, x, y, 0); }});
  out.push_back({"H3 a1 0 a3", Diagram::H3, true,
                 {{"lambda", 1, 2,
                   [](double a1, double, double a3) { return (2 * t * a1 + 2 * a3) / (3 * a1 + t * a3); }},
                  {"eta", 3, 2,
                   [](double a1, double, double a3) { return (2 * t * a1 + 2 * a3) / (t * a1 + (s + 2) * a3); }}},
                 [](double x, double, double z) { return make(Diagram::H3, true, x, 0, z); }});
  out.push_back({"H3 0a2a3", Diagram::H3, true,
                 {{"lambda", 3, 1,
                   [](double, double a2, double a3) { return t * (2 * a2 + a3) / (2 * a2 + (s + 2) * a3); }}},
                 [](double, double y, double z) { return make(Diagram::H3, true, 0, y, z); }});
  out.push_back({"H3 generic", Diagram::H3, true,
                 {{"lambda", 1, 3,
                   [](double a1, double a2, double a3) {
                     return (t * a1 + 2 * a2 + (2 + s) * a3) / (3 * a1 + 2 * t * a2 + t * a3);
                   }},
                  {"eta", 2, 3,
                   [](double a1, double a2, double a3) {
                     return (t * a1 + 2 * a2 + (2 + s) * a3) / (2 * t * a1 + 4 * a2 + 2 * a3);
                   }}},
                 [](double x, double y, double z) { return make(Diagram::H3, true, x, y, z); }});
  return out;
}

/// Census of an orbit family: V/E/F and face counts by number of sides.
struct CensusRow {
  std::string name;
  cxp::WeightIndices worked;  // the printed example
  std::size_t V, E, F;
  std::map<std::size_t, std::size_t> by_sides;
  std::function<cxp::WeightIndices(double, double, double)> draw;
};

inline std::vector<CensusRow> census_rows() {
  using cxp::Diagram;
  const auto A = [](double a, double b, double c) { return make(Diagram::A3, false, a, b, c); };
  const auto B = [](double a, double b, double c) { return make(Diagram::B3, false, a, b, c); };
  const auto H = [](double a, double b, double c) { return make(Diagram::H3, true, a, b, c); };
  return {
      {"A3 O(a1a2 0)", A(1, 2, 0), 12, 18, 8, {{3, 4}, {6, 4}}, [=](double x, double y, double) { return A(x, y, 0); }},
      {"A3 O(a1 0 a3)", A(1, 0, 2), 12, 24, 14, {{3, 8}, {4, 6}}, [=](double x, double, double z) { return A(x, 0, z); }},
      {"A3 generic", A(1, 2, 3), 24, 36, 14, {{4, 6}, {6, 8}}, [=](double x, double y, double z) { return A(x, y, z); }},
      {"A3 O(a1a2a1)", A(1, 2, 1), 24, 36, 14, {{4, 6}, {6, 8}}, [=](double x, double y, double) { return A(x, y, x); }},
      {"B3 O(a1a2 0)", B(1, 2, 0), 24, 36, 14, {{4, 6}, {6, 8}}, [=](double x, double y, double) { return B(x, y, 0); }},
      {"B3 O(a1 0 a3)", B(1, 0, 2), 24, 48, 26, {{3, 8}, {4, 18}}, [=](double x, double, double z) { return B(x, 0, z); }},
      {"B3 O(0a2a3)", B(0, 1, 2), 24, 36, 14, {{3, 8}, {8, 6}}, [=](double, double y, double z) { return B(0, y, z); }},
      {"B3 generic", B(1, 2, 3), 48, 72, 26, {{4, 12}, {6, 8}, {8, 6}}, [=](double x, double y, double z) { return B(x, y, z); }},
      {"H3 sigma(a1a2 0)", H(1, 2, 0), 60, 90, 32, {{3, 20}, {10, 12}}, [=](double x, double y, double) { return H(x, y, 0); }},
      {"H3 sigma(a1 0 a3)", H(1, 0, 2), 60, 120, 62, {{3, 20}, {4, 30}, {5, 12}}, [=](double x, double, double z) { return H(x, 0, z); }},
      {"H3 sigma(0a2a3)", H(0, 1, 2), 60, 90, 32, {{5, 12}, {6, 20}}, [=](double, double y, double z) { return H(0, y, z); }},
      {"H3 generic", H(1, 2, 3), 120, 180, 62, {{4, 30}, {6, 20}, {10, 12}}, [=](double x, double y, double z) { return H(x, y, z); }},
  };
}

/// Positive indices in [0.2, 3], well away from ties.
struct Draw {
  std::mt19937_64 rng;
  explicit Draw(unsigned long seed) : rng(seed) {}
  double one() { return std::uniform_real_distribution<double>(0.2, 3.0)(rng); }
  std::array<double, 3> three() {
    while (true) {
      std::array<double, 3> a{one(), one(), one()};
      if (std::abs(a[0] - a[1]) > 0.05 && std::abs(a[1] - a[2]) > 0.05 && std::abs(a[0] - a[2]) > 0.05) return a;
    }
  }
};

}  // namespace published
