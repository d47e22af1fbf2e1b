#include "c4count/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "c4count/errors.hpp"

namespace c4count {

Graph::Graph(int n, std::vector<Edge> edges, bool allow_loops)
    : n_(n), allow_loops_(allow_loops), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) {
      std::ostringstream os;
      os << "edge (" << e.u << "," << e.v << ") out of range for n=" << n;
      throw InputError(os.str());
    }
    if (e.is_loop()) {
      if (!allow_loops) {
        throw InputError("loop at vertex " + std::to_string(e.u) +
                         " in a graph that does not allow loops");
      }
      ++loops_;
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    std::ostringstream os;
    os << "duplicate edge (" << dup->u << "," << dup->v << ")";
    throw InputError(os.str());
  }

  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    if (!e.is_loop()) ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[fill[e.u]++] = e.v;
    if (!e.is_loop()) adj_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
  }

  if (n <= kBitsetLimit) {
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (const Edge& e : edges_) {
      bits_[static_cast<std::size_t>(e.u) * words_ + e.v / 64] |=
          std::uint64_t{1} << (e.v % 64);
      bits_[static_cast<std::size_t>(e.v) * words_ + e.u / 64] |=
          std::uint64_t{1} << (e.u % 64);
    }
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  if (words_ > 0) {
    return (bits_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) &
           1;
  }
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::common_neighbor_count(Vertex a, Vertex b) const {
  if (words_ > 0) {
    auto ra = row(a);
    auto rb = row(b);
    int count = 0;
    for (int w = 0; w < words_; ++w) count += std::popcount(ra[w] & rb[w]);
    return count;
  }
  auto na = neighbors(a);
  auto nb = neighbors(b);
  std::vector<Vertex> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                        std::back_inserter(out));
  return static_cast<int>(out.size());
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> local(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (local[vertices[i]] != -1) throw InputError("repeated vertex");
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (local[e.u] >= 0 && local[e.v] >= 0) kept.emplace_back(local[e.u], local[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(kept), allow_loops_);
}

Graph Graph::with_edges(std::vector<Edge> edges) const {
  return Graph(n_, std::move(edges), allow_loops_);
}

Graph Graph::without_loops() const {
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (!e.is_loop()) kept.push_back(e);
  }
  return Graph(n_, std::move(kept), false);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) moved.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n_, std::move(moved), allow_loops_);
}

void RootedPattern::validate() const {
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (ends[i] < 0 || ends[i] >= pattern.vertex_count()) {
      throw InputError("end vertex out of range");
    }
    if (i > 0 && ends[i - 1] >= ends[i]) {
      throw InputError("ends must be sorted and distinct");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pattern.has_edge(ends[i], ends[j])) {
        throw InputError("ends are not independent: edge (" +
                         std::to_string(ends[j]) + "," +
                         std::to_string(ends[i]) + ")");
      }
    }
  }
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph path(int edges) {
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) es.emplace_back(i, i + 1);
  return Graph(edges + 1, std::move(es));
}

Graph cycle(int length) {
  if (length < 3) throw InputError("cycle length must be at least 3");
  std::vector<Edge> es;
  for (int i = 0; i < length; ++i) es.emplace_back(i, (i + 1) % length);
  return Graph(length, std::move(es));
}

Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph(a + b, std::move(es));
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, 5 + i);
  }
  return Graph(10, std::move(es));
}

Graph dodecahedron() {
  // Rings a (0..4), b (5..9), c (10..14), d (15..19).
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    int j = (i + 4) % 5;
    es.emplace_back(i, j);
    es.emplace_back(i, 5 + i);
    es.emplace_back(5 + i, 10 + i);
    es.emplace_back(5 + i, 10 + j);
    es.emplace_back(10 + i, 15 + i);
    es.emplace_back(15 + i, 15 + j);
  }
  return Graph(20, std::move(es));
}

Graph subdivision(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> es;
  int next = n;
  for (const Edge& e : g.edges()) {
    es.emplace_back(e.u, next);
    es.emplace_back(next, e.v);
    ++next;
  }
  return Graph(next, std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es(a.edges().begin(), a.edges().end());
  int shift = a.vertex_count();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(es),
               a.allows_loops() || b.allows_loops());
}

}  // namespace graphs

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count();
  if (g.loop_count() > 0) os << ", loops=" << g.loop_count();
  os << ")";
  return os.str();
}

}  // namespace c4count
