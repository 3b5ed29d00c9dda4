#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cxp/coxeter.hpp"
#include "cxp/orbit.hpp"
#include "cxp/quaternion.hpp"

namespace cxp {

enum class FaceShape {
  EquilateralTriangle,
  IsoscelesTriangle,
  ScaleneTriangle,
  Square,
  Rectangle,
  Kite,
  RegularPolygon,   // n >= 5
  IsogonalPolygon,  // n >= 6, two alternating edge lengths, equal angles
  Irregular,
};

struct FaceKind {
  FaceShape shape = FaceShape::Irregular;
  int sides = 0;
  std::vector<double> edge_lengths;     // distinct lengths, ascending
  std::vector<double> interior_angles;  // degrees, in cycle order

  /// e.g. "isogonal-hexagon", "regular-pentagon", "kite".
  std::string label() const;
};

std::string shape_label(FaceShape shape, int sides);

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  int tag = 0;  // i in 1..3 for edges parallel to alpha_i, 0 when untagged
  double length = 0.0;
};

struct Face {
  std::vector<std::size_t> cycle;  // outward (counter-clockwise seen from outside)
  FaceKind kind;
  int weight_class = 0;            // k when the face is centred on the w_k axis, 0 otherwise
};

struct Polyhedron {
  std::vector<Quaternion> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  std::size_t V() const { return vertices.size(); }
  std::size_t E() const { return edges.size(); }
  std::size_t F() const { return faces.size(); }
  long euler_characteristic() const {
    return static_cast<long>(V()) - static_cast<long>(E()) + static_cast<long>(F());
  }
};

/// Seed edges {Lambda, r_i Lambda} for every i with r_i Lambda != Lambda,
/// propagated by the group and deduplicated. Throws DegenerateOrbit when the
/// orbit has fewer than three vertices.
std::vector<Edge> build_edges(const Orbit& orbit, const ReflectionGroup& group);

/// Faces from the dihedral subgroups <r_i, r_j>: the orbit of Lambda under
/// each pair is a planar polygon centred on the remaining weight axis;
/// degenerate (point or segment) orbits are dropped. Seed polygons are
/// propagated by the group, deduplicated as vertex sets, ordered and classified.
std::vector<Face> build_faces(const Orbit& orbit, const ReflectionGroup& group);

/// Orbit + edges + faces for the given indices.
Polyhedron build_polyhedron(const ReflectionGroup& group, const WeightIndices& w);

/// Polyhedron whose faces come from the convex hull (used for orbits of
/// subgroups, where the dihedral construction does not apply).
Polyhedron polyhedron_from_hull(std::vector<Quaternion> vertices);

/// Shape of a planar convex polygon given in cyclic order.
/// Throws NonPlanarFace or NonConvexFace; requires at least three vertices.
FaceKind classify_face(const std::vector<Quaternion>& cycle);

/// Orders face vertices by angle about the face centroid, counter-clockwise
/// about the outward normal (the one pointing away from the origin), starting
/// from the smallest index.
std::vector<std::size_t> order_cycle(const std::vector<Quaternion>& vertices,
                                     std::vector<std::size_t> face);

/// Newell normal of a cyclic polygon (not normalised).
Quaternion polygon_normal(const std::vector<Quaternion>& cycle);
Quaternion centroid(const std::vector<Quaternion>& points);

std::vector<Quaternion> face_points(const Polyhedron& poly, const Face& face);

/// Convex hull facets (coplanar triangles merged) as ascending vertex-index
/// sets, sorted. Throws DegenerateHull for fewer than four or coplanar points.
std::vector<std::vector<std::size_t>> hull_oracle(const std::vector<Quaternion>& vertices);

/// Face vertex sets of a polyhedron in the same normal form as hull_oracle.
std::vector<std::vector<std::size_t>> face_vertex_sets(const Polyhedron& poly);

struct Census {
  std::size_t V = 0;
  std::size_t E = 0;
  std::size_t F = 0;
  long chi = 0;
  bool euler_ok = false;
  std::map<std::string, std::size_t> face_kinds;
  std::map<int, std::size_t> edge_tags;
  std::vector<double> sphere_radii;  // distinct vertex norms, ascending
};

Census census(const Polyhedron& poly);

/// Number of group elements mapping the vertex-index set onto itself.
std::size_t setwise_stabilizer_order(const ReflectionGroup& group, const Polyhedron& poly,
                                     const std::vector<std::size_t>& vertex_set);

}  // namespace cxp
