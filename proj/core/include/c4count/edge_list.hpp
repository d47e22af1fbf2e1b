#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "c4count/errors.hpp"
#include "c4count/graph.hpp"

namespace c4count {

enum class EdgeListErrorKind {
  kMalformed,
  kOutOfRange,
  kDuplicateEdge,
  kLoopNotAllowed,
  kCountMismatch,
};

class EdgeListError : public InputError {
 public:
  EdgeListError(EdgeListErrorKind kind, const std::string& what, int line)
      : InputError(what), kind_(kind), line_(line) {}
  EdgeListErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  EdgeListErrorKind kind_;
  int line_;
};

/// Parse the edge-list text format: a header line "n m" followed by exactly m
/// lines "u v" with 0-based endpoints. Blank lines and lines starting with '#'
/// are ignored. "u u" is a loop and is accepted only with allow_loops.
Graph parse_edge_list(std::string_view text, bool allow_loops = false);

/// Inverse of parse_edge_list; edges are written in sorted order.
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list(const std::filesystem::path& path, bool allow_loops = false);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Graphviz DOT. Vertices listed in `ends` are drawn as red triangles.
std::string to_dot(const Graph& g, std::span<const Vertex> ends = {},
                   std::string_view name = "G");

}  // namespace c4count
