#include "cxp/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "cxp/errors.hpp"
#include "cxp/point_index.hpp"
#include "cxp/tolerance.hpp"

namespace cxp {

namespace {

constexpr double kLengthRelTol = 1e-6;
constexpr double kAngleTolDeg = 1e-6;
constexpr double kPlanarRelTol = 1e-8;

bool same_length(double a, double b) {
  return std::abs(a - b) <= kLengthRelTol * std::max(std::abs(a), std::abs(b));
}
bool same_angle(double a, double b) { return std::abs(a - b) <= kAngleTolDeg; }

std::string polygon_name(int n) {
  switch (n) {
    case 3: return "triangle";
    case 4: return "quadrilateral";
    case 5: return "pentagon";
    case 6: return "hexagon";
    case 7: return "heptagon";
    case 8: return "octagon";
    case 10: return "decagon";
    case 12: return "dodecagon";
    default: return std::to_string(n) + "-gon";
  }
}

VectorSet index_vertices(const std::vector<Quaternion>& vertices) {
  VectorSet set(epsilon());
  for (const auto& v : vertices) set.insert(v);
  return set;
}

std::size_t lookup(const VectorSet& set, const Quaternion& v) {
  auto id = set.find(v);
  if (!id) throw Error("point " + to_string(v) + " is not a vertex of the orbit");
  return *id;
}

// Distinct points of the <r_i, r_j> orbit of the seed.
std::vector<Quaternion> dihedral_orbit(const GroupElement& ri, const GroupElement& rj,
                                       const Quaternion& seed) {
  VectorSet set(epsilon());
  set.insert(seed);
  for (std::size_t cursor = 0; cursor < set.size(); ++cursor) {
    const Quaternion p = set.items()[cursor];
    set.insert(apply(ri, p));
    set.insert(apply(rj, p));
  }
  return set.items();
}

bool spans_plane(const std::vector<Quaternion>& pts) {
  if (pts.size() < 3) return false;
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, distance(p, pts[0]));
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (cross(pts[i] - pts[0], pts[j] - pts[0]).norm() > 1e-9 * scale * scale) return true;
  return false;
}

}  // namespace

std::string shape_label(FaceShape shape, int sides) {
  switch (shape) {
    case FaceShape::EquilateralTriangle: return "equilateral-triangle";
    case FaceShape::IsoscelesTriangle: return "isosceles-triangle";
    case FaceShape::ScaleneTriangle: return "scalene-triangle";
    case FaceShape::Square: return "square";
    case FaceShape::Rectangle: return "rectangle";
    case FaceShape::Kite: return "kite";
    case FaceShape::RegularPolygon: return "regular-" + polygon_name(sides);
    case FaceShape::IsogonalPolygon: return "isogonal-" + polygon_name(sides);
    case FaceShape::Irregular: return "irregular-" + polygon_name(sides);
  }
  return "unknown";
}

std::string FaceKind::label() const { return shape_label(shape, sides); }

Quaternion centroid(const std::vector<Quaternion>& points) {
  Quaternion c;
  for (const auto& p : points) c = c + p;
  return points.empty() ? c : c / static_cast<double>(points.size());
}

Quaternion polygon_normal(const std::vector<Quaternion>& cycle) {
  Quaternion n;
  for (std::size_t i = 0; i < cycle.size(); ++i) n = n + cross(cycle[i], cycle[(i + 1) % cycle.size()]);
  return n;
}

FaceKind classify_face(const std::vector<Quaternion>& cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) throw Error("a face needs at least three vertices");

  const Quaternion c = centroid(cycle);
  const Quaternion normal = normalized(polygon_normal(cycle));
  double radius = 0.0;
  for (const auto& p : cycle) radius = std::max(radius, distance(p, c));
  for (const auto& p : cycle) {
    if (std::abs(scalar_product(p - c, normal)) > kPlanarRelTol * radius) {
      throw NonPlanarFace("face vertex " + to_string(p) + " leaves the face plane");
    }
  }

  FaceKind kind;
  kind.sides = static_cast<int>(n);
  std::vector<double> lengths(n);
  kind.interior_angles.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Quaternion& prev = cycle[(i + n - 1) % n];
    const Quaternion& cur = cycle[i];
    const Quaternion& next = cycle[(i + 1) % n];
    lengths[i] = distance(cur, next);
    const Quaternion in = cur - prev;
    const Quaternion out = next - cur;
    if (scalar_product(cross(in, out), normal) <= 1e-12 * radius * radius) {
      throw NonConvexFace("face turns the wrong way at vertex " + to_string(cur));
    }
    const Quaternion u = prev - cur;
    const double cosine = std::clamp(scalar_product(u, out) / (u.norm() * out.norm()), -1.0, 1.0);
    kind.interior_angles[i] = std::acos(cosine) * 180.0 / std::numbers::pi;
  }

  std::vector<double> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  for (double l : sorted)
    if (kind.edge_lengths.empty() || !same_length(kind.edge_lengths.back(), l)) kind.edge_lengths.push_back(l);

  const bool equal_angles = std::all_of(kind.interior_angles.begin(), kind.interior_angles.end(),
                                        [&](double a) { return same_angle(a, kind.interior_angles[0]); });
  const bool equal_sides = kind.edge_lengths.size() == 1;
  bool alternating = n % 2 == 0 && kind.edge_lengths.size() == 2;
  for (std::size_t i = 0; alternating && i < n; ++i) alternating = same_length(lengths[i], lengths[i % 2]);

  if (n == 3) {
    kind.shape = equal_sides                     ? FaceShape::EquilateralTriangle
                 : kind.edge_lengths.size() == 2 ? FaceShape::IsoscelesTriangle
                                                 : FaceShape::ScaleneTriangle;
    return kind;
  }
  if (n == 4) {
    if (equal_angles && equal_sides) {
      kind.shape = FaceShape::Square;
    } else if (equal_angles && alternating) {
      kind.shape = FaceShape::Rectangle;
    } else if ((same_length(lengths[0], lengths[1]) && same_length(lengths[2], lengths[3])) ||
               (same_length(lengths[1], lengths[2]) && same_length(lengths[3], lengths[0]))) {
      kind.shape = FaceShape::Kite;
    } else {
      kind.shape = FaceShape::Irregular;
    }
    return kind;
  }
  if (equal_angles && equal_sides) {
    kind.shape = FaceShape::RegularPolygon;
  } else if (equal_angles && alternating) {
    kind.shape = FaceShape::IsogonalPolygon;
  } else {
    kind.shape = FaceShape::Irregular;
  }
  return kind;
}

std::vector<std::size_t> order_cycle(const std::vector<Quaternion>& vertices,
                                     std::vector<std::size_t> face) {
  if (face.size() < 3) return face;
  std::vector<Quaternion> pts;
  for (auto id : face) pts.push_back(vertices[id]);
  const Quaternion c = centroid(pts);

  // Plane normal from the two most independent spokes, oriented away from the origin.
  Quaternion normal;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Quaternion n = cross(pts[i] - c, pts[j] - c);
      if (n.norm() > normal.norm()) normal = n;
    }
  normal = normalized(normal);
  if (scalar_product(normal, c) < 0.0) normal = -normal;

  const Quaternion u = normalized(pts[0] - c);
  const Quaternion w = cross(normal, u);
  std::vector<std::pair<double, std::size_t>> keyed;
  for (std::size_t i = 0; i < face.size(); ++i) {
    const Quaternion d = pts[i] - c;
    keyed.emplace_back(std::atan2(scalar_product(d, w), scalar_product(d, u)), face[i]);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> cycle;
  for (const auto& k : keyed) cycle.push_back(k.second);
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

std::vector<Quaternion> face_points(const Polyhedron& poly, const Face& face) {
  std::vector<Quaternion> pts;
  pts.reserve(face.cycle.size());
  for (auto id : face.cycle) pts.push_back(poly.vertices[id]);
  return pts;
}

std::vector<Edge> build_edges(const Orbit& orbit, const ReflectionGroup& group) {
  if (orbit.size() < 3) throw DegenerateOrbit("orbit has fewer than three distinct vertices");
  const double eps = epsilon();
  const VectorSet index = index_vertices(orbit.vertices);
  const Quaternion& seed = orbit.seed;

  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 3; ++i) {
    const Quaternion mirrored = apply(group.system().generators[i], seed);
    if (distance(mirrored, seed) <= eps) continue;
    for (const auto& g : group.elements()) {
      std::size_t a = lookup(index, apply(g, seed));
      std::size_t b = lookup(index, apply(g, mirrored));
      if (a > b) std::swap(a, b);
      if (!seen.emplace(a, b).second) continue;
      edges.push_back({a, b, static_cast<int>(i + 1), distance(orbit.vertices[a], orbit.vertices[b])});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return edges;
}

std::vector<Face> build_faces(const Orbit& orbit, const ReflectionGroup& group) {
  if (orbit.size() < 3) throw DegenerateOrbit("orbit has fewer than three distinct vertices");
  const VectorSet index = index_vertices(orbit.vertices);
  const auto& gens = group.system().generators;
  static constexpr std::size_t kPairs[3][3] = {{0, 1, 2}, {1, 2, 0}, {0, 2, 1}};

  std::vector<std::pair<int, std::vector<std::size_t>>> sets;
  std::set<std::vector<std::size_t>> seen;
  for (const auto& pair : kPairs) {
    const auto polygon = dihedral_orbit(gens[pair[0]], gens[pair[1]], orbit.seed);
    if (!spans_plane(polygon)) continue;
    const int weight_class = static_cast<int>(pair[2] + 1);
    for (const auto& g : group.elements()) {
      std::vector<std::size_t> ids;
      for (const auto& p : polygon) ids.push_back(lookup(index, apply(g, p)));
      std::sort(ids.begin(), ids.end());
      if (seen.insert(ids).second) sets.emplace_back(weight_class, std::move(ids));
    }
  }
  std::sort(sets.begin(), sets.end());

  std::vector<Face> faces;
  faces.reserve(sets.size());
  for (auto& [weight_class, ids] : sets) {
    Face face;
    face.cycle = order_cycle(orbit.vertices, ids);
    std::vector<Quaternion> pts;
    for (auto id : face.cycle) pts.push_back(orbit.vertices[id]);
    face.kind = classify_face(pts);
    face.weight_class = weight_class;
    faces.push_back(std::move(face));
  }
  return faces;
}

Polyhedron build_polyhedron(const ReflectionGroup& group, const WeightIndices& w) {
  w.validate();
  const Orbit o = orbit(group, indices_to_vector(group.system(), w));
  Polyhedron poly;
  poly.edges = build_edges(o, group);
  poly.faces = build_faces(o, group);
  poly.vertices = o.vertices;
  return poly;
}

Polyhedron polyhedron_from_hull(std::vector<Quaternion> vertices) {
  canonical_sort(vertices);
  Polyhedron poly;
  poly.vertices = std::move(vertices);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& ids : hull_oracle(poly.vertices)) {
    Face face;
    face.cycle = order_cycle(poly.vertices, ids);
    face.kind = classify_face(face_points(poly, face));
    for (std::size_t i = 0; i < face.cycle.size(); ++i) {
      std::size_t a = face.cycle[i];
      std::size_t b = face.cycle[(i + 1) % face.cycle.size()];
      if (a > b) std::swap(a, b);
      if (seen.emplace(a, b).second) poly.edges.push_back({a, b, 0, distance(poly.vertices[a], poly.vertices[b])});
    }
    poly.faces.push_back(std::move(face));
  }
  std::sort(poly.edges.begin(), poly.edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return poly;
}

std::vector<std::vector<std::size_t>> face_vertex_sets(const Polyhedron& poly) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : poly.faces) {
    auto ids = f.cycle;
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Census census(const Polyhedron& poly) {
  Census c;
  c.V = poly.V();
  c.E = poly.E();
  c.F = poly.F();
  c.chi = poly.euler_characteristic();
  c.euler_ok = c.chi == 2;
  for (const auto& f : poly.faces) ++c.face_kinds[f.kind.label()];
  for (const auto& e : poly.edges) ++c.edge_tags[e.tag];
  std::vector<double> norms;
  for (const auto& v : poly.vertices) norms.push_back(v.norm());
  std::sort(norms.begin(), norms.end());
  for (double r : norms)
    if (c.sphere_radii.empty() || r - c.sphere_radii.back() > 1e-9 * std::max(1.0, r)) c.sphere_radii.push_back(r);
  return c;
}

std::size_t setwise_stabilizer_order(const ReflectionGroup& group, const Polyhedron& poly,
                                     const std::vector<std::size_t>& vertex_set) {
  const VectorSet index = index_vertices(poly.vertices);
  auto target = vertex_set;
  std::sort(target.begin(), target.end());
  std::size_t count = 0;
  for (const auto& g : group.elements()) {
    std::vector<std::size_t> image;
    for (auto id : target) {
      auto hit = index.find(apply(g, poly.vertices[id]));
      if (!hit) break;
      image.push_back(*hit);
    }
    std::sort(image.begin(), image.end());
    if (image == target) ++count;
  }
  return count;
}

}  // namespace cxp
