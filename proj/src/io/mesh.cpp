#include "cxp/io/mesh.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cxp/errors.hpp"

namespace cxp::io {

namespace {

void append_coords(std::string& out, const char* prefix, const Quaternion& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s%.17g %.17g %.17g\n", prefix, v.q1, v.q2, v.q3);
  out += buf;
}

// Next non-empty, non-comment line.
bool next_line(std::istringstream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

MeshFormat format_for_path(std::string_view path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (ext == ".off") return MeshFormat::OFF;
  if (ext == ".obj") return MeshFormat::OBJ;
  throw Error("mesh path must end in .off or .obj: " + std::string(path));
}

std::string export_mesh(const Polyhedron& poly, MeshFormat format) {
  std::string out;
  if (format == MeshFormat::OFF) {
    out += "OFF\n";  // counts line is "V E F"
    out += std::to_string(poly.V()) + " " + std::to_string(poly.E()) + " " + std::to_string(poly.F()) + "\n";
    for (const auto& v : poly.vertices) append_coords(out, "", v);
    for (const auto& f : poly.faces) {
      out += std::to_string(f.cycle.size());
      for (auto i : f.cycle) out += " " + std::to_string(i);
      out += "\n";
    }
  } else {
    for (const auto& v : poly.vertices) append_coords(out, "v ", v);
    for (const auto& f : poly.faces) {
      out += "f";
      for (auto i : f.cycle) out += " " + std::to_string(i + 1);
      out += "\n";
    }
  }
  return out;
}

ParsedMesh parse_off(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!next_line(in, line) || line.rfind("OFF", 0) != 0) throw Error("OFF: missing header");
  if (!next_line(in, line)) throw Error("OFF: missing counts");
  std::size_t nv = 0, nf = 0, ne = 0;
  {
    std::istringstream counts(line);
    if (!(counts >> nv >> ne >> nf)) throw Error("OFF: bad counts line");
  }
  ParsedMesh mesh;
  mesh.declared_edges = ne;
  for (std::size_t i = 0; i < nv; ++i) {
    if (!next_line(in, line)) throw Error("OFF: truncated vertex list");
    std::istringstream ls(line);
    Quaternion v;
    if (!(ls >> v.q1 >> v.q2 >> v.q3)) throw Error("OFF: bad vertex line");
    mesh.vertices.push_back(v);
  }
  for (std::size_t i = 0; i < nf; ++i) {
    if (!next_line(in, line)) throw Error("OFF: truncated face list");
    std::istringstream ls(line);
    std::size_t n = 0;
    if (!(ls >> n)) throw Error("OFF: bad face line");
    std::vector<std::size_t> face(n);
    for (auto& id : face)
      if (!(ls >> id) || id >= nv) throw Error("OFF: bad face index");
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

ParsedMesh parse_obj(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  ParsedMesh mesh;
  std::vector<std::vector<long>> raw;
  while (next_line(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Quaternion v;
      if (!(ls >> v.q1 >> v.q2 >> v.q3)) throw Error("OBJ: bad vertex line");
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<long> face;
      std::string item;
      while (ls >> item) face.push_back(std::stol(item.substr(0, item.find('/'))));
      if (face.size() < 3) throw Error("OBJ: face with fewer than three vertices");
      raw.push_back(std::move(face));
    }
  }
  for (const auto& face : raw) {
    std::vector<std::size_t> ids;
    for (long id : face) {
      if (id < 1 || static_cast<std::size_t>(id) > mesh.vertices.size()) throw Error("OBJ: bad face index");
      ids.push_back(static_cast<std::size_t>(id - 1));
    }
    mesh.faces.push_back(std::move(ids));
  }
  return mesh;
}

void write_atomic(const std::string& path, std::string_view content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot rename onto " + path);
  }
}

Polyhedron scaled(const Polyhedron& poly, double factor) {
  Polyhedron out = poly;
  for (auto& v : out.vertices) v = factor * v;
  for (auto& e : out.edges) e.length *= factor;
  for (auto& f : out.faces)
    for (auto& len : f.kind.edge_lengths) len *= factor;
  return out;
}

}  // namespace cxp::io
