#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "c4count/graph.hpp"

namespace c4count {

/// Erdős–Rényi orthogonal polarity graph of PG(2, q).
struct PolarityGraph {
  int q = 0;
  /// All q²+q+1 projective points; loops at the q+1 absolute points.
  Graph g0;
  /// Induced subgraph on the q² non-absolute points.
  Graph loopless;
  /// Canonical homogeneous coordinates (first nonzero coordinate 1) per g0
  /// vertex, in the field's element encoding.
  std::vector<std::array<int, 3>> point_labels;
  /// g0 vertex of each loopless vertex.
  std::vector<Vertex> loopless_to_g0;
};

/// Points are enumerated in lexicographic order of their canonical
/// coordinates; p ~ p' iff x x' + y y' + z z' = 0 over F_q.
PolarityGraph build_polarity(int q);

struct PolarityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PolarityReport {
  int q = 0;
  std::vector<PolarityCheck> checks;

  bool all_passed() const;
  const PolarityCheck* find(const std::string& name) const;
  /// {"schema": ..., "q": q, "checks": {name: bool, ...}, "details": {...}}
  std::string to_json() const;
};

/// Exact integer checks of the structure the construction promises:
/// adjacency_square (A² = qI + J, loop = diagonal 1), unique_common_neighbor,
/// loop_count, regularity, loopless_vertex_count, loopless_c4_free, and
/// loopless_unique_triangle (every edge in exactly one triangle).
PolarityReport verify_polarity(const PolarityGraph& p);

/// Deletes one uniformly chosen edge from each triangle, visiting triangles
/// in lexicographic order with one draw each from the "triangle_break"
/// stream of `seed`. Requires every edge to lie in exactly one triangle;
/// throws PreconditionError with a witness edge otherwise.
Graph triangle_break(const Graph& g, std::uint64_t seed);

}  // namespace c4count
