#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cxp/polyhedron.hpp"

namespace cxp::io {

enum class MeshFormat { OFF, OBJ };

/// Picks the format from a ".off" / ".obj" suffix (case-insensitive).
/// Throws Error otherwise.
MeshFormat format_for_path(std::string_view path);

std::string export_mesh(const Polyhedron& poly, MeshFormat format);

struct ParsedMesh {
  std::vector<Quaternion> vertices;
  std::vector<std::vector<std::size_t>> faces;  // 0-based
  std::size_t declared_edges = 0;               // OFF only
};

/// Throws Error on malformed input.
ParsedMesh parse_off(std::string_view text);
ParsedMesh parse_obj(std::string_view text);

/// Writes to a sibling temp file, then renames over `path`.
void write_atomic(const std::string& path, std::string_view content);

/// Copy with every coordinate and length multiplied by `factor`.
Polyhedron scaled(const Polyhedron& poly, double factor);

}  // namespace cxp::io
