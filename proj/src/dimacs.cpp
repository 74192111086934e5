#include "p5col/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace p5col {

DimacsError::DimacsError(std::size_t line, const std::string& what)
    : std::runtime_error("DIMACS line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
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

std::size_t parse_count(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw DimacsError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  return value;
}

}  // namespace

Graph read_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;

    if (fields[0] == "p") {
      if (n) throw DimacsError(line_no, "duplicate problem line");
      if (fields.size() != 4 || (fields[1] != "edge" && fields[1] != "col")) {
        throw DimacsError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
      }
      n = parse_count(fields[2], line_no);
      parse_count(fields[3], line_no);
    } else if (fields[0] == "e") {
      if (!n) throw DimacsError(line_no, "edge line before problem line");
      if (fields.size() != 3) throw DimacsError(line_no, "malformed edge line, expected 'e <u> <v>'");
      const std::size_t u = parse_count(fields[1], line_no);
      const std::size_t v = parse_count(fields[2], line_no);
      if (u == 0 || v == 0 || u > *n || v > *n) throw DimacsError(line_no, "vertex index out of range");
      if (u == v) throw DimacsError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw DimacsError(line_no, "unknown line type '" + std::string(fields[0]) + "'");
    }
  }
  if (!n) throw DimacsError(line_no, "missing problem line");
  return Graph::from_edges(*n, edges);
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_dimacs(buf.str());
}

void write_dimacs_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_dimacs(g);
}

}  // namespace p5col
