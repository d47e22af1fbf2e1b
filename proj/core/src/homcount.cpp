#include "c4count/homcount.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "c4count/errors.hpp"
#include "c4count/structure.hpp"
#include "dp_engine.hpp"

namespace c4count {
namespace {

constexpr std::uint64_t kBruteGuard = 1'000'000'000ull;

std::size_t default_budget(HomMode mode) {
  return mode == HomMode::kExact ? (std::size_t{1} << 21) : (std::size_t{1} << 25);
}

void require_pattern(const Graph& f) {
  if (f.loop_count() > 0) throw InputError("pattern must be loop-free");
  if (f.vertex_count() > 64) throw InputError("pattern has more than 64 vertices");
}

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& f) {
  std::vector<Mask> adj(f.vertex_count(), 0);
  for (const Edge& e : f.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

// Vertices outside eliminated ∪ {v} reachable from v through eliminated ones.
Mask frontier(const std::vector<Mask>& adj, Mask eliminated, int v) {
  Mask seen = Mask{1} << v;
  Mask stack = Mask{1} << v;
  Mask out = 0;
  while (stack) {
    int w = std::countr_zero(stack);
    stack &= stack - 1;
    Mask nb = adj[w] & ~seen;
    seen |= nb;
    out |= nb & ~eliminated;
    stack |= nb & eliminated;
  }
  return out;
}

EliminationOrder exact_order(const Graph& f, const std::vector<Vertex>& u) {
  auto adj = adjacency_masks(f);
  const int m = static_cast<int>(u.size());
  const std::size_t states = std::size_t{1} << m;
  std::vector<int> best(states, std::numeric_limits<int>::max());
  std::vector<int> last(states, -1);
  best[0] = 0;
  for (std::size_t s = 1; s < states; ++s) {
    Mask elim_before_base = 0;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) elim_before_base |= Mask{1} << u[i];
    for (int i = 0; i < m; ++i) {
      if (!(s >> i & 1)) continue;
      std::size_t prev = s & ~(std::size_t{1} << i);
      Mask elim = elim_before_base & ~(Mask{1} << u[i]);
      int w = std::max(best[prev], std::popcount(frontier(adj, elim, u[i])));
      if (w < best[s]) {
        best[s] = w;
        last[s] = i;
      }
    }
  }
  EliminationOrder out;
  out.exact = true;
  out.width = best[states - 1];
  std::size_t s = states - 1;
  while (s) {
    int i = last[s];
    out.order.push_back(u[i]);
    s &= ~(std::size_t{1} << i);
  }
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

EliminationOrder min_fill_order(const Graph& f, const std::vector<Vertex>& u) {
  auto adj = adjacency_masks(f);
  Mask remaining = 0;
  for (Vertex v : u) remaining |= Mask{1} << v;
  EliminationOrder out;
  while (remaining) {
    int pick = -1;
    int pick_fill = 0, pick_deg = 0;
    for (Mask r = remaining; r; r &= r - 1) {
      int v = std::countr_zero(r);
      Mask nb = adj[v];
      int fill = 0;
      for (Mask a = nb; a; a &= a - 1) {
        int x = std::countr_zero(a);
        fill += std::popcount(nb & ~adj[x] & ~(Mask{1} << x));
      }
      fill /= 2;
      int deg = std::popcount(nb);
      if (pick < 0 || fill < pick_fill || (fill == pick_fill && deg < pick_deg)) {
        pick = v;
        pick_fill = fill;
        pick_deg = deg;
      }
    }
    Mask nb = adj[pick];
    out.width = std::max(out.width, std::popcount(nb));
    for (Mask a = nb; a; a &= a - 1) {
      int x = std::countr_zero(a);
      adj[x] |= nb & ~(Mask{1} << x);
      adj[x] &= ~(Mask{1} << pick);
    }
    adj[pick] = 0;
    remaining &= ~(Mask{1} << pick);
    out.order.push_back(pick);
  }
  return out;
}

std::vector<Vertex> sorted_keep(const Graph& f, std::span<const Vertex> keep) {
  std::vector<Vertex> k(keep.begin(), keep.end());
  std::sort(k.begin(), k.end());
  if (std::adjacent_find(k.begin(), k.end()) != k.end()) {
    throw InputError("kept vertex listed twice");
  }
  for (Vertex v : k)
    if (v < 0 || v >= f.vertex_count()) throw InputError("kept vertex out of range");
  return k;
}

template <class T>
struct Prepared {
  detail::HostMatrix<T> host;
  std::vector<std::vector<T>> alpha;
};

template <class T>
Prepared<T> prepare(const Graph& f, const ScaledHost& host, const VertexWeights& alpha,
                    std::span<const Vertex> skip_alpha) {
  Prepared<T> p;
  const int n = host.size();
  if (alpha.host_size() != n || alpha.pattern_vertices() != f.vertex_count()) {
    throw InputError("vertex weights do not match pattern and host sizes");
  }
  if (host.is_sparse()) {
    p.host = detail::sparse_unit_host<T>(host.sparse_host().graph);
  } else {
    const auto& h = host.dense_host();
    p.host.n = n;
    p.host.sparse = false;
    if constexpr (std::is_same_v<T, Rational>) {
      auto ex = h.exact_values();
      p.host.dense.assign(ex.begin(), ex.end());
    } else {
      auto vals = h.values();
      p.host.dense.assign(vals.begin(), vals.end());
    }
  }
  p.alpha.resize(f.vertex_count());
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (std::find(skip_alpha.begin(), skip_alpha.end(), v) != skip_alpha.end()) continue;
    auto d = alpha.of(v);
    bool ones = std::all_of(d.begin(), d.end(), [](double x) { return x == 1.0; });
    if constexpr (std::is_same_v<T, Rational>) {
      auto ex = alpha.exact_of(v);
      ones = std::all_of(ex.begin(), ex.end(), [](const Rational& x) { return x == 1; });
      if (!ones) p.alpha[v].assign(ex.begin(), ex.end());
    } else {
      if (!ones) p.alpha[v].assign(d.begin(), d.end());
    }
  }
  return p;
}

void require_exact(const ScaledHost& host, const VertexWeights& alpha) {
  if (!host.is_sparse() && !host.dense_host().has_exact()) {
    throw InputError("exact mode needs a host with rational entries");
  }
  if (!alpha.has_exact()) throw InputError("exact mode needs rational vertex weights");
}

Rational rational_power(const Rational& base, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// Factor by which raw sums over V^(free vertices) are multiplied:
// (c√n)^|E| / n^free for sparse hosts, 1 / n^free for dense ones.
Quadratic exact_scale(const ScaledHost& host, int edges, int free) {
  const long n = host.size();
  Rational r = 1 / rational_power(Rational(n), free);
  if (!host.is_sparse()) return Quadratic(r);
  r *= rational_power(host.sparse_host().c, edges) * rational_power(Rational(n), edges / 2);
  if (edges % 2 == 1) return Quadratic(0, r, n);
  return Quadratic(r);
}

double float_scale(const ScaledHost& host, int edges, int free) {
  const double n = host.size();
  if (!host.is_sparse()) return std::pow(n, -free);
  return std::pow(host.sparse_host().c.get_d(), edges) * std::pow(n, edges / 2.0 - free);
}

}  // namespace

std::uint64_t hom_brute(const Graph& f, const Graph& g,
                        const std::vector<std::vector<Vertex>>* sets) {
  require_pattern(f);
  const int k = f.vertex_count();
  const std::uint64_t n = g.vertex_count();
  if (detail::checked_power(n, k, kBruteGuard) > kBruteGuard) {
    throw ResourceError("hom_brute: |V(G)|^|V(F)| exceeds 10^9");
  }
  if (sets && static_cast<int>(sets->size()) != k) {
    throw InputError("hom_brute: one vertex set per pattern vertex required");
  }
  std::vector<std::vector<Vertex>> domain(k);
  for (int v = 0; v < k; ++v) {
    if (sets) {
      domain[v] = (*sets)[v];
    } else {
      for (Vertex x = 0; x < g.vertex_count(); ++x) domain[v].push_back(x);
    }
  }
  std::vector<std::vector<Vertex>> earlier(k);
  for (const Edge& e : f.edges()) earlier[e.v].push_back(e.u);
  std::vector<Vertex> image(k);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == k) {
      ++count;
      return;
    }
    for (Vertex x : domain[v]) {
      bool ok = true;
      for (Vertex u : earlier[v]) {
        if (!g.has_edge(image[u], x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = x;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return count;
}

EliminationOrder elimination_order(const Graph& f) { return elimination_order(f, {}); }

EliminationOrder elimination_order(const Graph& f, std::span<const Vertex> keep) {
  require_pattern(f);
  auto k = sorted_keep(f, keep);
  std::vector<Vertex> u;
  for (Vertex v = 0; v < f.vertex_count(); ++v)
    if (!std::binary_search(k.begin(), k.end(), v)) u.push_back(v);
  if (static_cast<int>(u.size()) <= kExactOrderLimit) return exact_order(f, u);
  return min_fill_order(f, u);
}

std::string HomResult::normalization() const {
  std::string v = std::to_string(pattern_vertices);
  if (!sparse_host) return "raw / n^" + v;
  return "raw * (c*sqrt(n))^" + std::to_string(pattern_edges) + " / n^" + v;
}

HomResult hom_weighted(const Graph& f, const ScaledHost& host, const VertexWeights& alpha,
                       const HomOptions& options) {
  require_pattern(f);
  const std::size_t budget =
      options.max_table_entries ? options.max_table_entries : default_budget(options.mode);
  auto order = elimination_order(f);
  HomResult r;
  r.mode = options.mode;
  r.pattern_vertices = f.vertex_count();
  r.pattern_edges = f.edge_count();
  r.host_size = host.size();
  r.sparse_host = host.is_sparse();
  if (host.is_sparse()) r.c = host.sparse_host().c;
  if (options.mode == HomMode::kExact) {
    require_exact(host, alpha);
    auto p = prepare<Rational>(f, host, alpha, {});
    auto out = detail::eliminate<Rational>(f, p.host, p.alpha, order.order, {}, budget);
    r.raw_exact = out.at(0);
    r.raw = r.raw_exact->get_d();
    r.value_exact = exact_scale(host, f.edge_count(), f.vertex_count()).scaled(*r.raw_exact);
    r.value = r.value_exact->to_double();
  } else {
    auto p = prepare<double>(f, host, alpha, {});
    auto out = detail::eliminate<double>(f, p.host, p.alpha, order.order, {}, budget);
    r.raw = out.at(0);
    r.value = r.raw * float_scale(host, f.edge_count(), f.vertex_count());
  }
  return r;
}

Profile::Profile(std::vector<Vertex> s, int n, std::vector<double> values,
                 std::optional<std::vector<Rational>> raw_exact, std::optional<Quadratic> scale)
    : s_(std::move(s)),
      n_(n),
      values_(std::move(values)),
      raw_exact_(std::move(raw_exact)),
      scale_(std::move(scale)) {
  if (raw_exact_.has_value() != scale_.has_value()) {
    throw InputError("exact profile needs both raw values and a scale");
  }
}

Quadratic Profile::exact_at(std::size_t index) const {
  if (!raw_exact_) throw InputError("profile has no exact values");
  return scale_->scaled((*raw_exact_)[index]);
}

double Profile::integral() const {
  double s = 0;
  for (double v : values_) s += v;
  return values_.empty() ? 0.0 : s / static_cast<double>(values_.size());
}

double Profile::integral_of_square() const {
  double s = 0;
  for (double v : values_) s += v * v;
  return values_.empty() ? 0.0 : s / static_cast<double>(values_.size());
}

Quadratic Profile::exact_integral() const {
  if (!raw_exact_) throw InputError("profile has no exact values");
  Rational s = 0;
  for (const auto& v : *raw_exact_) s += v;
  s /= static_cast<long>(raw_exact_->size());
  return scale_->scaled(s);
}

Quadratic Profile::exact_integral_of_square() const {
  if (!raw_exact_) throw InputError("profile has no exact values");
  Rational s = 0;
  for (const auto& v : *raw_exact_) s += v * v;
  s /= static_cast<long>(raw_exact_->size());
  return (*scale_ * *scale_).scaled(s);
}

Profile partial_profile(const Graph& f, std::span<const Vertex> s, const ScaledHost& host,
                        const VertexWeights& alpha, const HomOptions& options) {
  require_pattern(f);
  auto keep = sorted_keep(f, s);
  if (keep.size() > 3) throw InputError("profiles support |S| <= 3");
  const std::size_t budget =
      options.max_table_entries ? options.max_table_entries : default_budget(options.mode);
  auto order = elimination_order(f, keep);
  const int free = f.vertex_count() - static_cast<int>(keep.size());
  const int n = host.size();
  if (options.mode == HomMode::kExact) {
    require_exact(host, alpha);
    auto p = prepare<Rational>(f, host, alpha, keep);
    auto raw = detail::eliminate<Rational>(f, p.host, p.alpha, order.order, keep, budget);
    Quadratic scale = exact_scale(host, f.edge_count(), free);
    std::vector<double> vals(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) vals[i] = scale.scaled(raw[i]).to_double();
    return Profile(keep, n, std::move(vals), std::move(raw), std::move(scale));
  }
  auto p = prepare<double>(f, host, alpha, keep);
  auto raw = detail::eliminate<double>(f, p.host, p.alpha, order.order, keep, budget);
  const double scale = float_scale(host, f.edge_count(), free);
  for (double& v : raw) v *= scale;
  return Profile(keep, n, std::move(raw));
}

namespace {

Profile truncate_impl(const Profile& p, const std::optional<Rational>& t, bool keep_low) {
  if (t && *t <= 0) throw InputError("truncation threshold must be positive");
  std::vector<double> vals(p.values().begin(), p.values().end());
  std::optional<std::vector<Rational>> raw;
  std::optional<Quadratic> scale;
  if (p.is_exact()) {
    raw.emplace(p.raw_exact().begin(), p.raw_exact().end());
    scale = p.scale();
  }
  const double td = t ? t->get_d() : std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    bool above;
    if (!t) {
      above = false;
    } else if (p.is_exact()) {
      above = p.exact_at(i) > Quadratic(*t);
    } else {
      above = vals[i] > td;
    }
    if (above == keep_low) {
      vals[i] = 0.0;
      if (raw) (*raw)[i] = 0;
    }
  }
  return Profile(p.support(), p.host_size(), std::move(vals), std::move(raw), std::move(scale));
}

}  // namespace

Profile truncate_profile(const Profile& p, std::optional<Rational> t) {
  return truncate_impl(p, t, true);
}

Profile truncate_profile_above(const Profile& p, std::optional<Rational> t) {
  return truncate_impl(p, t, false);
}

BigInt hom_count(const Graph& f, const Graph& g, std::size_t max_table_entries) {
  require_pattern(f);
  if (g.loop_count() > 0) throw InputError("hom_count: host must be loop-free");
  // |hom| <= n^components * Δ^(|V| - components).
  const double n = g.vertex_count();
  const double delta = std::max(1, g.max_degree());
  const int comps = static_cast<int>(connected_components(f).size());
  const double log_bound =
      comps * std::log2(std::max(1.0, n)) + (f.vertex_count() - comps) * std::log2(delta);
  if (log_bound > 125) throw ResourceError("hom_count: count may exceed 128 bits");
  const std::size_t budget = max_table_entries ? max_table_entries : (std::size_t{1} << 24);
  auto order = elimination_order(f);
  auto host = detail::sparse_unit_host<__int128>(g);
  std::vector<std::vector<__int128>> alpha(f.vertex_count());
  auto out = detail::eliminate<__int128>(f, host, alpha, order.order, {}, budget);
  return detail::to_bigint(out.at(0));
}

}  // namespace c4count
