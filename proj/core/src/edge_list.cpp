#include "c4count/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace c4count {
namespace {

std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{}) {
      throw EdgeListError(EdgeListErrorKind::kMalformed,
                          "line " + std::to_string(line_no) + ": expected integer",
                          line_no);
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      throw EdgeListError(EdgeListErrorKind::kMalformed,
                          "line " + std::to_string(line_no) + ": unexpected character",
                          line_no);
    }
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text, bool allow_loops) {
  std::vector<std::pair<int, std::vector<long long>>> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    rows.emplace_back(line_no, parse_ints(line, line_no));
    if (end == text.size()) break;
  }
  if (rows.empty()) {
    throw EdgeListError(EdgeListErrorKind::kMalformed, "missing header line", 0);
  }
  const auto& [header_line, header] = rows.front();
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw EdgeListError(EdgeListErrorKind::kMalformed,
                        "header must be \"n m\" with nonnegative n, m", header_line);
  }
  long long n = header[0];
  long long m = header[1];
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw EdgeListError(EdgeListErrorKind::kCountMismatch,
                        "header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(rows.size() - 1),
                        header_line);
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& [ln, vals] = rows[i];
    if (vals.size() != 2) {
      throw EdgeListError(EdgeListErrorKind::kMalformed,
                          "line " + std::to_string(ln) + ": expected \"u v\"", ln);
    }
    if (vals[0] < 0 || vals[1] < 0 || vals[0] >= n || vals[1] >= n) {
      throw EdgeListError(EdgeListErrorKind::kOutOfRange,
                          "line " + std::to_string(ln) + ": vertex out of range", ln);
    }
    Edge e(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
    if (e.is_loop() && !allow_loops) {
      throw EdgeListError(EdgeListErrorKind::kLoopNotAllowed,
                          "line " + std::to_string(ln) + ": loop without --allow-loops",
                          ln);
    }
    if (!seen.insert(e).second) {
      throw EdgeListError(EdgeListErrorKind::kDuplicateEdge,
                          "line " + std::to_string(ln) + ": duplicate edge", ln);
    }
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges), allow_loops);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph read_edge_list(const std::filesystem::path& path, bool allow_loops) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str(), allow_loops);
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << serialize_edge_list(g);
}

std::string to_dot(const Graph& g, std::span<const Vertex> ends, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle, width=0.15, label=\"\", "
     << "style=filled, fillcolor=black];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (std::find(ends.begin(), ends.end(), v) != ends.end()) {
      os << " [shape=triangle, fillcolor=red]";
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace c4count
