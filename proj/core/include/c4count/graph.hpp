#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace c4count {

using Vertex = int;

/// Unordered pair, stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Storage is a sorted edge list, sorted neighbor lists, and (for n up to
/// kBitsetLimit) one adjacency bitset row per vertex so that adjacency and
/// common-neighborhood queries are word operations. Loops are rejected unless
/// the graph is built with allow_loops; a loop contributes v once to v's
/// neighbor list and one to deg(v).
class Graph {
 public:
  static constexpr int kBitsetLimit = 4096;

  Graph() = default;
  explicit Graph(int n) : Graph(n, {}, false) {}
  /// Throws InputError on out-of-range endpoints, duplicate edges, or loops
  /// when allow_loops is false.
  Graph(int n, std::vector<Edge> edges, bool allow_loops = false);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool allows_loops() const { return allow_loops_; }
  int loop_count() const { return loops_; }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  bool has_edge(Vertex a, Vertex b) const;

  /// Adjacency row as 64-bit words; empty when n > kBitsetLimit.
  std::span<const std::uint64_t> row(Vertex v) const {
    if (words_ == 0) return {};
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  int row_words() const { return words_; }

  /// |N(a) ∩ N(b)|, loops counted as self-adjacency.
  int common_neighbor_count(Vertex a, Vertex b) const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;
  /// Graph with the same vertex set and only the listed edges.
  Graph with_edges(std::vector<Edge> edges) const;
  /// Copy with the loops dropped and allow_loops cleared.
  Graph without_loops() const;
  /// Relabel: vertex v of this graph becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && allow_loops_ == other.allow_loops_ &&
           edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  bool allow_loops_ = false;
  int loops_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Pattern with a distinguished end set (a candidate connector).
struct RootedPattern {
  Graph pattern;
  std::vector<Vertex> ends;  // sorted, distinct

  /// Throws InputError when the ends are out of range or not independent.
  void validate() const;
};

// Named constructions used throughout tests, corpus, and CLI.
namespace graphs {
Graph empty(int n);
Graph path(int edges);  // path with `edges` edges on edges+1 vertices
Graph cycle(int length);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph petersen();
Graph dodecahedron();
/// 1-subdivision: every edge uv of g replaced by u-w-v with a fresh w.
/// Original vertices keep their labels; subdivision vertices follow in
/// edge order.
Graph subdivision(const Graph& g);
/// Disjoint union; b's vertices are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);
}  // namespace graphs

std::string describe(const Graph& g);

}  // namespace c4count
