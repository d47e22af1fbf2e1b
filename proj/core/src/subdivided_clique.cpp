#include <algorithm>
#include <cmath>
#include <map>

#include "c4count/canonical.hpp"
#include "c4count/errors.hpp"
#include "c4count/homcount.hpp"
#include "c4count/structure.hpp"
#include "dp_engine.hpp"

namespace c4count {
namespace {

using Int = __int128;

struct WeightedGraph {
  detail::HostMatrix<Int> sparse;
  std::vector<std::int64_t> dense;  // n×n lookup
  int n = 0;

  std::int64_t at(int x, int y) const { return dense[static_cast<std::size_t>(x) * n + y]; }
};

// Σ_x Π_{uv ∈ C} W(x_u, x_v) for connected C by backtracking; each vertex
// after the first is drawn from the support row of an already placed
// neighbor, and its other placed neighbors are checked by lookup.
Int backtrack_hom(const Graph& c, const WeightedGraph& w) {
  const int k = c.vertex_count();
  std::vector<Vertex> order;
  std::vector<char> placed(k, 0);
  Vertex start = 0;
  for (Vertex v = 1; v < k; ++v)
    if (c.degree(v) > c.degree(start)) start = v;
  order.push_back(start);
  placed[start] = 1;
  while (static_cast<int>(order.size()) < k) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (Vertex u : c.neighbors(v)) links += placed[u];
      if (links > best_links) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed[best] = 1;
  }
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  // For each position: the anchor position and the other back-neighbors.
  std::vector<int> anchor(k, -1);
  std::vector<std::vector<int>> checks(k);
  for (int i = 1; i < k; ++i) {
    for (Vertex u : c.neighbors(order[i])) {
      int j = pos[u];
      if (j >= i) continue;
      if (anchor[i] < 0) {
        anchor[i] = j;
      } else {
        checks[i].push_back(j);
      }
    }
  }
  std::vector<int> x(k);
  auto rec = [&](auto&& self, int i, Int prod) -> Int {
    if (i == k) return prod;
    Int total = 0;
    int xa = x[anchor[i]];
    const auto& h = w.sparse;
    for (int t = h.offsets[xa]; t < h.offsets[xa + 1]; ++t) {
      int y = h.cols[t];
      Int p = prod * h.vals[t];
      bool zero = false;
      for (int j : checks[i]) {
        std::int64_t v = w.at(y, x[j]);
        if (v == 0) {
          zero = true;
          break;
        }
        p *= v;
      }
      if (zero) continue;
      x[i] = y;
      total += self(self, i + 1, p);
    }
    return total;
  };
  Int total = 0;
  for (int y = 0; y < w.n; ++y) {
    x[0] = y;
    total += rec(rec, 1, 1);
  }
  return total;
}

class ConnectedHom {
 public:
  explicit ConnectedHom(const WeightedGraph& w) : w_(w) {}

  Int operator()(const Graph& c) {
    auto form = canonical_form(c);
    auto it = memo_.find(form);
    if (it != memo_.end()) return it->second;
    Int value;
    auto order = elimination_order(c);
    if (order.width <= 2) {
      std::vector<std::vector<Int>> alpha(c.vertex_count());
      value = detail::eliminate<Int>(c, w_.sparse, alpha, order.order, {},
                                     std::size_t{1} << 24)
                  .at(0);
    } else {
      value = backtrack_hom(c, w_);
    }
    memo_.emplace(std::move(form), value);
    return value;
  }

 private:
  const WeightedGraph& w_;
  std::map<CanonicalForm, Int> memo_;
};

}  // namespace

BigInt hom_subdivided_clique(int k, const Graph& g) {
  if (k < 2 || k > 6) throw InputError("hom_subdivided_clique supports 2 <= k <= 6");
  if (g.loop_count() > 0) throw InputError("hom_subdivided_clique: host must be loop-free");
  const int n = g.vertex_count();
  if (n > 4096) throw ResourceError("hom_subdivided_clique: host above 4096 vertices");
  if (n == 0) return 0;

  // M = A²: codegrees off the diagonal, degrees on it.
  std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int z = 0; z < n; ++z) {
    auto nb = g.neighbors(z);
    for (Vertex a : nb)
      for (Vertex b : nb) ++m[static_cast<std::size_t>(a) * n + b];
  }
  std::size_t nonzero = 0;
  for (auto v : m) nonzero += v != 0;
  const bool around_ones = nonzero > static_cast<std::size_t>(n) * n / 2;
  if (around_ones)
    for (auto& v : m) v -= 1;

  std::int64_t max_abs = 1;
  for (auto v : m) max_abs = std::max<std::int64_t>(max_abs, v < 0 ? -v : v);
  const int pairs = k * (k - 1) / 2;
  if (k * std::log2(n) + pairs * std::log2(static_cast<double>(max_abs)) + pairs > 120) {
    throw ResourceError("hom_subdivided_clique: count may exceed 128 bits");
  }

  WeightedGraph w;
  w.n = n;
  w.dense = m;
  w.sparse.n = n;
  w.sparse.sparse = true;
  w.sparse.offsets.assign(n + 1, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::int64_t v = m[static_cast<std::size_t>(x) * n + y];
      if (v == 0) continue;
      w.sparse.cols.push_back(y);
      w.sparse.vals.push_back(v);
    }
    w.sparse.offsets[x + 1] = static_cast<int>(w.sparse.cols.size());
  }
  ConnectedHom hom(w);

  if (!around_ones) return detail::to_bigint(hom(graphs::complete(k)));

  // Π_{i<j} (1 + E_ij) = Σ_T Π_{e∈T} E_e; each T splits into isolated
  // vertices (a factor n each) and connected components.
  std::vector<Edge> all;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) all.emplace_back(a, b);
  Int total = 0;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<Edge> chosen;
    for (int i = 0; i < pairs; ++i)
      if (mask >> i & 1) chosen.push_back(all[i]);
    Graph t(k, chosen);
    Int term = 1;
    for (const auto& comp : connected_components(t)) {
      if (comp.size() == 1) {
        term *= n;
      } else {
        term *= hom(t.induced(comp));
      }
      if (term == 0) break;
    }
    total += term;
  }
  return detail::to_bigint(total);
}

}  // namespace c4count
