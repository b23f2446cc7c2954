#include "wfsplit/mesh_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "wfsplit/error.hpp"

namespace wfsplit {

namespace {

// Splits text into lines, tolerating CRLF.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const auto end = text_.find('\n', pos_);
    line = text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number_;
    return true;
  }

  // Next line that is not blank.
  bool next_nonblank(std::string_view& line) {
    while (next(line)) {
      if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <class T>
T parse_number(std::string_view tok, std::size_t line) {
  T value{};
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    parse_fail(line, "invalid number '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

std::string format_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

TetMesh read_tmesh(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) parse_fail(1, "missing count line");
  auto head = tokens(line);
  if (head.size() != 2) parse_fail(reader.number(), "expected 'nv nt'");
  const auto nv = parse_number<std::size_t>(head[0], reader.number());
  const auto nt = parse_number<std::size_t>(head[1], reader.number());

  TetMesh mesh;
  mesh.vertices.reserve(nv);
  mesh.tets.reserve(nt);
  for (std::size_t i = 0; i < nv; ++i) {
    if (!reader.next(line)) parse_fail(reader.number() + 1, "unexpected end of file in vertices");
    const auto tok = tokens(line);
    if (tok.size() != 3) parse_fail(reader.number(), "expected 'x y z'");
    Point3 p{parse_number<double>(tok[0], reader.number()), parse_number<double>(tok[1], reader.number()),
             parse_number<double>(tok[2], reader.number())};
    if (!p.finite()) parse_fail(reader.number(), "non-finite coordinate");
    mesh.vertices.push_back(p);
  }
  for (std::size_t i = 0; i < nt; ++i) {
    if (!reader.next(line)) parse_fail(reader.number() + 1, "unexpected end of file in tets");
    const auto tok = tokens(line);
    if (tok.size() != 4) parse_fail(reader.number(), "expected four vertex indices");
    Tet tet{};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto idx = parse_number<std::uint64_t>(tok[k], reader.number());
      if (idx >= nv) {
        throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(reader.number()) +
                                                    ": vertex index " + std::to_string(idx) +
                                                    " out of range");
      }
      tet[k] = static_cast<VertexId>(idx);
    }
    mesh.tets.push_back(tet);
  }
  if (reader.next_nonblank(line)) parse_fail(reader.number(), "trailing content");
  return mesh;
}

std::string write_tmesh(const TetMesh& mesh) {
  std::string out;
  out.reserve(64 * mesh.vertices.size() + 32 * mesh.tets.size() + 32);
  out += std::to_string(mesh.vertices.size()) + " " + std::to_string(mesh.tets.size()) + "\n";
  for (const auto& p : mesh.vertices) {
    out += format_shortest(p.x);
    out += ' ';
    out += format_shortest(p.y);
    out += ' ';
    out += format_shortest(p.z);
    out += '\n';
  }
  for (const auto& t : mesh.tets) {
    out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + " " +
           std::to_string(t[3]) + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

TetMesh load_tmesh(const std::filesystem::path& path) { return read_tmesh(read_text_file(path)); }

void save_tmesh(const TetMesh& mesh, const std::filesystem::path& path) {
  write_text_file(path, write_tmesh(mesh));
}

std::string write_vtk_legacy(const TetMesh& mesh) {
  std::string out = "# vtk DataFile Version 3.0\nwfsplit tetrahedral mesh\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  out += "POINTS " + std::to_string(mesh.vertices.size()) + " double\n";
  for (const auto& p : mesh.vertices) {
    out += format_shortest(p.x) + " " + format_shortest(p.y) + " " + format_shortest(p.z) + "\n";
  }
  out += "CELLS " + std::to_string(mesh.tets.size()) + " " + std::to_string(5 * mesh.tets.size()) + "\n";
  for (const auto& t : mesh.tets) {
    out += "4 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + " " +
           std::to_string(t[3]) + "\n";
  }
  out += "CELL_TYPES " + std::to_string(mesh.tets.size()) + "\n";
  for (std::size_t i = 0; i < mesh.tets.size(); ++i) out += "10\n";
  return out;
}

void save_vtk_legacy(const TetMesh& mesh, const std::filesystem::path& path) {
  write_text_file(path, write_vtk_legacy(mesh));
}

MshImport read_msh_ascii(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  bool have_format = false;
  std::vector<std::pair<long, Point3>> nodes;
  std::vector<std::array<long, 4>> tets;
  std::size_t skipped = 0;

  auto expect_end = [&](std::string_view tag) {
    if (!reader.next_nonblank(line) || tokens(line).at(0) != tag) {
      parse_fail(reader.number(), "expected " + std::string(tag));
    }
  };

  while (reader.next_nonblank(line)) {
    const auto head = tokens(line);
    if (head[0] == "$MeshFormat") {
      if (!reader.next_nonblank(line)) parse_fail(reader.number(), "missing format line");
      const auto tok = tokens(line);
      if (tok.size() < 2) parse_fail(reader.number(), "malformed $MeshFormat");
      const auto version = parse_number<double>(tok[0], reader.number());
      const auto file_type = parse_number<int>(tok[1], reader.number());
      if (file_type != 0) throw Error(ErrorCode::UnsupportedVersion, "binary MSH files are not supported");
      if (version < 2.0 || version >= 3.0) {
        throw Error(ErrorCode::UnsupportedVersion,
                    "MSH version " + std::string(tok[0]) + " is not supported (need 2.x ASCII)");
      }
      have_format = true;
      expect_end("$EndMeshFormat");
    } else if (head[0] == "$Nodes") {
      if (!have_format) parse_fail(reader.number(), "$Nodes before $MeshFormat");
      if (!reader.next_nonblank(line)) parse_fail(reader.number(), "missing node count");
      const auto count = parse_number<std::size_t>(tokens(line).at(0), reader.number());
      nodes.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        if (!reader.next_nonblank(line)) parse_fail(reader.number(), "unexpected end of $Nodes");
        const auto tok = tokens(line);
        if (tok.size() < 4) parse_fail(reader.number(), "expected 'id x y z'");
        nodes.emplace_back(parse_number<long>(tok[0], reader.number()),
                           Point3{parse_number<double>(tok[1], reader.number()),
                                  parse_number<double>(tok[2], reader.number()),
                                  parse_number<double>(tok[3], reader.number())});
      }
      expect_end("$EndNodes");
    } else if (head[0] == "$Elements") {
      if (!have_format) parse_fail(reader.number(), "$Elements before $MeshFormat");
      if (!reader.next_nonblank(line)) parse_fail(reader.number(), "missing element count");
      const auto count = parse_number<std::size_t>(tokens(line).at(0), reader.number());
      for (std::size_t i = 0; i < count; ++i) {
        if (!reader.next_nonblank(line)) parse_fail(reader.number(), "unexpected end of $Elements");
        const auto tok = tokens(line);
        if (tok.size() < 3) parse_fail(reader.number(), "malformed element");
        const auto type = parse_number<int>(tok[1], reader.number());
        const auto ntags = parse_number<std::size_t>(tok[2], reader.number());
        if (type != 4) {
          ++skipped;
          continue;
        }
        if (tok.size() != 3 + ntags + 4) parse_fail(reader.number(), "tetrahedron needs 4 nodes");
        std::array<long, 4> ids{};
        for (std::size_t k = 0; k < 4; ++k) ids[k] = parse_number<long>(tok[3 + ntags + k], reader.number());
        tets.push_back(ids);
      }
      expect_end("$EndElements");
    } else if (!head[0].empty() && head[0][0] == '$') {
      // Unknown section: skip to its $End tag.
      const std::string end = "$End" + std::string(head[0].substr(1));
      bool closed = false;
      while (reader.next(line)) {
        const auto tok = tokens(line);
        if (!tok.empty() && tok[0] == end) {
          closed = true;
          break;
        }
      }
      if (!closed) parse_fail(reader.number(), "unterminated section " + std::string(head[0]));
    } else {
      parse_fail(reader.number(), "unexpected content outside a section");
    }
  }
  if (!have_format) parse_fail(reader.number(), "missing $MeshFormat");

  std::unordered_map<long, std::size_t> node_pos;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!node_pos.emplace(nodes[i].first, i).second) {
      throw Error(ErrorCode::ParseError, "duplicate node id " + std::to_string(nodes[i].first));
    }
  }
  std::vector<long> new_id(nodes.size(), -1);
  for (const auto& t : tets) {
    for (long id : t) {
      const auto it = node_pos.find(id);
      if (it == node_pos.end()) {
        throw Error(ErrorCode::IndexOutOfRange, "element references unknown node " + std::to_string(id));
      }
      new_id[it->second] = 0;
    }
  }

  MshImport result;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (new_id[i] < 0) continue;
    new_id[i] = static_cast<long>(result.mesh.vertices.size());
    result.mesh.vertices.push_back(nodes[i].second);
  }
  for (const auto& t : tets) {
    Tet tet{};
    for (std::size_t k = 0; k < 4; ++k) tet[k] = static_cast<VertexId>(new_id[node_pos[t[k]]]);
    result.mesh.tets.push_back(tet);
  }
  if (tets.empty()) result.warnings.push_back("no tetrahedral elements found");
  if (skipped > 0) result.warnings.push_back("skipped " + std::to_string(skipped) + " non-tetrahedral elements");
  return result;
}

MshImport load_msh(const std::filesystem::path& path) { return read_msh_ascii(read_text_file(path)); }

}  // namespace wfsplit
