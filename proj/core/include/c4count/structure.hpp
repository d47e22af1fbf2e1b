#pragma once

#include <array>
#include <optional>
#include <vector>

#include "c4count/graph.hpp"

namespace c4count {

/// Length of a shortest cycle, or nullopt for a forest. Throws InputError if
/// the graph has loops.
std::optional<int> girth(const Graph& g);

/// A shortest cycle as a closed vertex sequence (first vertex not repeated);
/// empty for forests.
std::vector<Vertex> shortest_cycle(const Graph& g);

/// True iff no two distinct vertices share two neighbors.
bool is_c4_free(const Graph& g);

/// max over distinct pairs {a, b} of |N(a) ∩ N(b)| (0 when n < 2).
int max_common_neighbors(const Graph& g);

/// Triangles (a < b < c) in lexicographic order.
std::vector<std::array<Vertex, 3>> triangles(const Graph& g);

/// Number of triangles containing each edge, indexed like g.edges().
std::vector<int> triangles_per_edge(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// J ∨_I J: copy one keeps J's labels, the non-end vertices of copy two are
/// appended in increasing order. Throws InputError if the ends are not
/// independent.
Graph glue(const RootedPattern& j);

/// For each vertex of J, its label in copy two of glue(j).
std::vector<Vertex> glue_second_copy(const RootedPattern& j);

/// Result of the 2-density screen. A failure is a conjectural necessary
/// condition for countability, not a refutation.
struct DensityScreen {
  bool pass = true;
  std::vector<Vertex> witness;  // violating vertex subset when !pass
  int witness_edges = 0;
};

/// Checks |E(F')| <= 2|V(F')| - 4 for every subgraph F' on >= 3 vertices.
/// Exhaustive over vertex subsets up to 20 vertices; above that, a forced-triple
/// max-closure (min-cut) reduction.
DensityScreen two_density_screen(const Graph& f);

/// The max-closure route regardless of size (exposed so the two routes can be
/// checked against each other).
DensityScreen two_density_screen_flow(const Graph& f);
DensityScreen two_density_screen_exhaustive(const Graph& f);

}  // namespace c4count
