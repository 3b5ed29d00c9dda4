#include "cxp/io/catalog.hpp"

#include <algorithm>
#include <cmath>

namespace cxp::io {

namespace {

constexpr double kTau = GoldenConstants::tau;
const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);

WeightIndices a3(double a1, double a2, double a3v) { return {a1, a2, a3v, Diagram::A3, false}; }
WeightIndices b3(double a1, double a2, double a3v) { return {a1, a2, a3v, Diagram::B3, false}; }
WeightIndices h3s(double a1, double a2, double a3v) { return {a1, a2, a3v, Diagram::H3, true}; }

ExpectedCensus counts(std::size_t v, std::size_t e, std::size_t f,
                      std::map<std::string, std::size_t> kinds) {
  return {v, e, f, std::move(kinds)};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, WeightIndices w, ExpectedCensus census, std::string notes) -> CatalogEntry& {
    CatalogEntry e;
    e.name = std::move(name);
    e.indices = w;
    e.expected = std::move(census);
    e.notes = std::move(notes);
    c.push_back(std::move(e));
    return c.back();
  };

  // Fundamental orbits.
  add("tetrahedron", a3(1, 0, 0), counts(4, 6, 4, {{"equilateral-triangle", 4}}), "A3 O(100)");
  add("octahedron", a3(0, 1, 0), counts(6, 12, 8, {{"equilateral-triangle", 8}}), "A3 O(010)");
  add("truncated-tetrahedron", a3(1, 1, 0),
      counts(12, 18, 8, {{"equilateral-triangle", 4}, {"regular-hexagon", 4}}), "A3 O(110)")
      .scale_factors = {{1, 3, 0.6, 1e-12}};
  add("cube", b3(0, 0, 1), counts(8, 12, 6, {{"square", 6}}), "B3 O(001)");
  add("cuboctahedron", b3(0, 1, 0), counts(12, 24, 14, {{"equilateral-triangle", 8}, {"square", 6}}),
      "B3 O(010)");
  add("truncated-octahedron", b3(1, 1, 0), counts(24, 36, 14, {{"regular-hexagon", 8}, {"square", 6}}),
      "B3 O(110); Wigner-Seitz cell of the body-centred cubic lattice");
  add("icosahedron", h3s(0, 0, 1), counts(12, 30, 20, {{"equilateral-triangle", 20}}), "H3 sigma(001)");
  add("dodecahedron", h3s(1, 0, 0), counts(20, 30, 12, {{"regular-pentagon", 12}}), "H3 sigma(100)");
  add("icosidodecahedron", h3s(0, 1, 0),
      counts(30, 60, 32, {{"equilateral-triangle", 20}, {"regular-pentagon", 12}}), "H3 sigma(010)");
  add("truncated-icosahedron", h3s(0, 1, 1),
      counts(60, 90, 32, {{"regular-hexagon", 20}, {"regular-pentagon", 12}}), "H3 sigma(011)")
      .face_geometry = {{"regular-hexagon", 120.0, 1.0, std::nullopt},
                        {"regular-pentagon", 108.0, 1.0, std::nullopt}};

  {
    auto& e = add("chiral-icosahedron-pair", a3(kTau, 1, kTau),
                  counts(12, 30, 20, {{"equilateral-triangle", 20}}),
                  "A3 rotation-subgroup orbit of (tau,1,tau); the mesh is the first of the pair");
    e.chiral = true;
  }

  // A3 examples.
  add("a3-120", a3(1, 2, 0), counts(12, 18, 8, {{"equilateral-triangle", 4}, {"isogonal-hexagon", 4}}),
      "A3 O(120)");
  c.back().dual_radii = {{1, 5.0 * kS3 / 14.0, 1e-12}, {3, kS3 / 2.0, 1e-12}};
  c.back().scale_factors = {{1, 3, 5.0 / 7.0, 1e-12}};
  add("a3-102", a3(1, 0, 2), counts(12, 24, 14, {{"equilateral-triangle", 8}, {"rectangle", 6}}),
      "A3 O(102)");
  add("a3-123", a3(1, 2, 3), counts(24, 36, 14, {{"isogonal-hexagon", 8}, {"rectangle", 6}}), "A3 O(123)")
      .scale_factors = {{1, 3, 1.4, 1e-12}, {2, 3, 0.875, 1e-12}};
  add("a3-121", a3(1, 2, 1), counts(24, 36, 14, {{"isogonal-hexagon", 8}, {"square", 6}}), "A3 O(121)")
      .scale_factors = {{2, 1, 2.0 / 3.0, 1e-12}};

  // B3 examples.
  add("b3-210", b3(2, 1, 0), counts(24, 36, 14, {{"isogonal-hexagon", 8}, {"square", 6}}), "B3 O(210)");
  add("b3-120", b3(1, 2, 0), counts(24, 36, 14, {{"isogonal-hexagon", 8}, {"square", 6}}), "B3 O(120)");
  c.back().dual_radii = {{1, 1.179, 1e-3}, {3, 1.225, 1e-3}};
  c.back().scale_factors = {{1, 3, 5.0 / (3.0 * kS2), 1e-12}};
  add("b3-102", b3(1, 0, 2),
      counts(24, 48, 26, {{"equilateral-triangle", 8}, {"rectangle", 12}, {"square", 6}}), "B3 O(102)");
  c.back().dual_radii = {{1, 1.5858, 1e-3}, {2, 1.4142, 1e-3}, {3, 1.2648, 1e-3}};
  c.back().scale_factors = {{1, 2, (kS2 + 4.0) / (kS2 + 2.0), 1e-12},
                            {3, 2, (2.0 + 4.0 * kS2) / (6.0 + kS2), 1e-12}};
  add("b3-012", b3(0, 1, 2), counts(24, 36, 14, {{"equilateral-triangle", 8}, {"isogonal-octagon", 6}}),
      "B3 O(012)")
      .scale_factors = {{3, 1, (1.0 + kS2) / (3.0 + kS2), 1e-12}};
  add("b3-123", b3(1, 2, 3),
      counts(48, 72, 26, {{"isogonal-hexagon", 8}, {"isogonal-octagon", 6}, {"rectangle", 12}}),
      "B3 O(123); middle dual radius is a flagged conflict");
  c.back().dual_radii = {{1, 1.569, 1e-3}, {3, 1.225, 1e-3}};
  c.back().scale_factors = {{1, 3, (5.0 * kS2 + 9.0) / (6.0 + 3.0 * kS2), 1e-12}};

  // H3 examples, sigma-scaled.
  add("h3-120", h3s(1, 2, 0), counts(60, 90, 32, {{"equilateral-triangle", 20}, {"isogonal-decagon", 12}}),
      "H3 sigma(120); published face counts are a flagged conflict");
  add("h3-102", h3s(1, 0, 2),
      counts(60, 120, 62, {{"equilateral-triangle", 20}, {"rectangle", 30}, {"regular-pentagon", 12}}),
      "H3 sigma(102)");
  add("h3-012", h3s(0, 1, 2), counts(60, 90, 32, {{"isogonal-hexagon", 20}, {"regular-pentagon", 12}}),
      "H3 sigma(012)");
  add("h3-123", h3s(1, 2, 3),
      counts(120, 180, 62, {{"isogonal-decagon", 12}, {"isogonal-hexagon", 20}, {"rectangle", 30}}),
      "H3 sigma(123)");

  // C60: weight convention, so edge lengths are sqrt2 a_i and read in angstrom.
  {
    auto& e = add("c60", WeightIndices{0.0, 1.455 / kS2, 1.391 / kS2, Diagram::H3, false},
                  counts(60, 90, 32, {{"isogonal-hexagon", 20}, {"regular-pentagon", 12}}),
                  "H3 O(0 a2 a3) with sqrt2 a2 = 1.455 and sqrt2 a3 = 1.391 (C-C and C=C bonds, angstrom)");
    e.face_geometry = {{"regular-pentagon", 108.0, std::nullopt, 1.455},
                       {"isogonal-hexagon", 120.0, 1.455 / 1.391, std::nullopt}};
  }
  return c;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogEntry* match_entry(const WeightIndices& w, bool chiral) {
  for (const auto& e : catalog()) {
    const auto& x = e.indices;
    if (x.group == w.group && x.sigma_scaled() == w.sigma_scaled() && e.chiral == chiral &&
        close(x.a1, w.a1) && close(x.a2, w.a2) && close(x.a3, w.a3)) {
      return &e;
    }
  }
  return nullptr;
}

}  // namespace cxp::io
