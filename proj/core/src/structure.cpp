#include "c4count/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "c4count/errors.hpp"

namespace c4count {
namespace {

void require_loop_free(const Graph& g, const char* op) {
  if (g.loop_count() > 0) {
    throw InputError(std::string(op) + ": graph has loops");
  }
}

}  // namespace

std::vector<Vertex> shortest_cycle(const Graph& g) {
  require_loop_free(g, "girth");
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<Vertex> best_cycle;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          bfs.push(w);
        } else if (w != parent[u] && dist[w] >= dist[u]) {
          int len = dist[u] + dist[w] + 1;
          if (len < best) {
            best = len;
            std::vector<Vertex> left, right;
            for (int x = u; x != -1; x = parent[x]) left.push_back(x);
            for (int x = w; x != -1; x = parent[x]) right.push_back(x);
            // left ends at root; right ends at root too: drop its root.
            right.pop_back();
            std::reverse(left.begin(), left.end());
            best_cycle = left;
            best_cycle.insert(best_cycle.end(), right.begin(), right.end());
          }
        }
      }
    }
  }
  return best_cycle;
}

std::optional<int> girth(const Graph& g) {
  auto cycle = shortest_cycle(g);
  if (cycle.empty()) return std::nullopt;
  return static_cast<int>(cycle.size());
}

bool is_c4_free(const Graph& g) {
  const int n = g.vertex_count();
  // Mark each pair of neighbors of every vertex; a pair seen twice spans a C4.
  std::vector<std::uint64_t> seen((static_cast<std::size_t>(n) * n + 63) / 64, 0);
  for (int w = 0; w < n; ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == w) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (nb[j] == w) continue;
        std::size_t bit = static_cast<std::size_t>(nb[i]) * n + nb[j];
        std::uint64_t mask = std::uint64_t{1} << (bit % 64);
        if (seen[bit / 64] & mask) return false;
        seen[bit / 64] |= mask;
      }
    }
  }
  return true;
}

int max_common_neighbors(const Graph& g) {
  int best = 0;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      best = std::max(best, g.common_neighbor_count(a, b));
  return best;
}

std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    auto na = g.neighbors(e.u);
    auto nb = g.neighbors(e.v);
    std::size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
      if (na[i] < nb[j]) {
        ++i;
      } else if (nb[j] < na[i]) {
        ++j;
      } else {
        if (na[i] > e.v) out.push_back({e.u, e.v, na[i]});
        ++i;
        ++j;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> triangles_per_edge(const Graph& g) {
  std::vector<int> counts;
  counts.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      counts.push_back(0);
      continue;
    }
    int c = 0;
    for (int w : g.neighbors(e.u)) {
      if (w != e.u && w != e.v && g.has_edge(w, e.v)) ++c;
    }
    counts.push_back(c);
  }
  return counts;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbors(members[i])) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::vector<Vertex> glue_second_copy(const RootedPattern& j) {
  j.validate();
  const int n = j.pattern.vertex_count();
  std::vector<Vertex> map(n);
  int next = n;
  for (int v = 0; v < n; ++v) {
    map[v] = std::binary_search(j.ends.begin(), j.ends.end(), v) ? v : next++;
  }
  return map;
}

Graph glue(const RootedPattern& j) {
  auto second = glue_second_copy(j);
  const int n = j.pattern.vertex_count();
  int total = 2 * n - static_cast<int>(j.ends.size());
  std::vector<Edge> edges(j.pattern.edges().begin(), j.pattern.edges().end());
  for (const Edge& e : j.pattern.edges()) edges.emplace_back(second[e.u], second[e.v]);
  return Graph(total, std::move(edges));
}

DensityScreen two_density_screen_exhaustive(const Graph& f) {
  const int n = f.vertex_count();
  if (n > 24) throw ResourceError("exhaustive 2-density screen limited to 24 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : f.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  DensityScreen out;
  const std::uint32_t limit = n == 32 ? 0 : (1u << n);
  for (std::uint32_t s = 0; s < limit; ++s) {
    int size = std::popcount(s);
    if (size < 3) continue;
    int twice_edges = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      twice_edges += std::popcount(adj[std::countr_zero(rest)] & s);
    }
    int edges = twice_edges / 2;
    if (edges > 2 * size - 4) {
      // Report the smallest violation found (first in size order).
      if (out.pass || size < static_cast<int>(out.witness.size())) {
        out.pass = false;
        out.witness.clear();
        for (std::uint32_t rest = s; rest; rest &= rest - 1)
          out.witness.push_back(std::countr_zero(rest));
        out.witness_edges = edges;
      }
    }
  }
  return out;
}

DensityScreen two_density_screen_flow(const Graph& f) {
  using namespace boost;
  using Traits = adjacency_list_traits<vecS, vecS, directedS>;
  using FlowGraph =
      adjacency_list<vecS, vecS, directedS, no_property,
                     property<edge_capacity_t, long,
                              property<edge_residual_capacity_t, long,
                                       property<edge_reverse_t, Traits::edge_descriptor>>>>;
  const int n = f.vertex_count();
  const int m = f.edge_count();
  const long kInf = 4L * (m + n + 1);
  DensityScreen out;
  if (n < 3) return out;

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        FlowGraph fg(2 + m + n);
        auto cap = get(edge_capacity, fg);
        auto rev = get(edge_reverse, fg);
        auto add = [&](int from, int to, long capacity) {
          auto e1 = add_edge(from, to, fg).first;
          auto e2 = add_edge(to, from, fg).first;
          cap[e1] = capacity;
          cap[e2] = 0;
          rev[e1] = e2;
          rev[e2] = e1;
        };
        const int s = 0, t = 1;
        auto vnode = [&](int v) { return 2 + m + v; };
        for (int i = 0; i < m; ++i) {
          const Edge& e = f.edges()[i];
          add(s, 2 + i, 1);
          add(2 + i, vnode(e.u), kInf);
          add(2 + i, vnode(e.v), kInf);
        }
        for (int v = 0; v < n; ++v) add(vnode(v), t, 2);
        for (int v : {a, b, c}) add(s, vnode(v), kInf);
        long cut = push_relabel_max_flow(fg, s, t);
        long value = m - cut;  // max over S ⊇ {a,b,c} of |E(S)| - 2|S|
        if (value >= -3) {
          // Source side of the residual graph is a maximizer.
          auto res = get(edge_residual_capacity, fg);
          std::vector<char> reach(num_vertices(fg), 0);
          std::vector<int> stack{s};
          reach[s] = 1;
          while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [it, end] = out_edges(x, fg); it != end; ++it) {
              int y = static_cast<int>(target(*it, fg));
              if (!reach[y] && res[*it] > 0) {
                reach[y] = 1;
                stack.push_back(y);
              }
            }
          }
          std::vector<Vertex> witness;
          for (int v = 0; v < n; ++v)
            if (reach[vnode(v)]) witness.push_back(v);
          if (out.pass || witness.size() < out.witness.size()) {
            out.pass = false;
            out.witness = std::move(witness);
            out.witness_edges = f.induced(out.witness).edge_count();
          }
        }
      }
    }
  }
  return out;
}

DensityScreen two_density_screen(const Graph& f) {
  if (f.vertex_count() <= 20) return two_density_screen_exhaustive(f);
  return two_density_screen_flow(f);
}

}  // namespace c4count
