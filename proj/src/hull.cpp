// Convex hull by enumerating supporting planes through vertex triples.
// O(n^4) worst case; meant for orbit-sized inputs (a few hundred points).

#include <algorithm>
#include <cmath>
#include <set>

#include "cxp/errors.hpp"
#include "cxp/polyhedron.hpp"
#include "cxp/tolerance.hpp"

namespace cxp {

std::vector<std::vector<std::size_t>> hull_oracle(const std::vector<Quaternion>& vertices) {
  const std::size_t n = vertices.size();
  if (n < 4) throw DegenerateHull("hull needs at least four points");

  double scale = 0.0;
  for (const auto& v : vertices) scale = std::max(scale, v.norm());
  const double plane_tol = epsilon() * std::max(1.0, scale);

  std::set<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::size_t>> faces_of(n);  // face ordinals touching each point
  std::vector<std::vector<std::size_t>> face_list;

  auto share_face = [&](std::size_t i, std::size_t j, std::size_t k) {
    for (auto f : faces_of[i]) {
      const auto& ids = face_list[f];
      if (std::binary_search(ids.begin(), ids.end(), j) && std::binary_search(ids.begin(), ids.end(), k))
        return true;
    }
    return false;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (share_face(i, j, k)) continue;
        const Quaternion normal_raw = cross(vertices[j] - vertices[i], vertices[k] - vertices[i]);
        const double len = normal_raw.norm();
        if (len <= 1e-12 * std::max(1.0, scale * scale)) continue;  // collinear
        const Quaternion normal = normal_raw / len;
        const double offset = scalar_product(normal, vertices[i]);

        bool above = false;
        bool below = false;
        for (std::size_t m = 0; m < n && !(above && below); ++m) {
          const double s = scalar_product(normal, vertices[m]) - offset;
          if (s > plane_tol) above = true;
          if (s < -plane_tol) below = true;
        }
        if (above && below) continue;

        std::vector<std::size_t> on_plane;
        for (std::size_t m = 0; m < n; ++m)
          if (std::abs(scalar_product(normal, vertices[m]) - offset) <= plane_tol) on_plane.push_back(m);
        if (on_plane.size() == n) throw DegenerateHull("all points are coplanar");
        if (faces.insert(on_plane).second) {
          for (auto m : on_plane) faces_of[m].push_back(face_list.size());
          face_list.push_back(on_plane);
        }
      }
    }
  }
  if (faces.empty()) throw DegenerateHull("no supporting planes found");
  return {faces.begin(), faces.end()};
}

}  // namespace cxp
