#include <algorithm>
#include <bit>
#include <map>

#include "c4count/canonical.hpp"
#include "c4count/certify.hpp"
#include "c4count/errors.hpp"
#include "c4count/structure.hpp"

namespace c4count {
namespace {

using Mask = std::uint64_t;

Graph delete_vertices(const Graph& g, std::vector<Vertex> gone, std::vector<Vertex>* kept_out) {
  std::sort(gone.begin(), gone.end());
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!std::binary_search(gone.begin(), gone.end(), v)) keep.push_back(v);
  if (kept_out) *kept_out = keep;
  return g.induced(keep);
}

std::vector<Vertex> inverse(const std::vector<Vertex>& perm) {
  std::vector<Vertex> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Vertex>(i);
  return inv;
}

class Searcher {
 public:
  explicit Searcher(const SearchOptions& options) : opt_(options) {}

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  std::optional<TameCertificate> tame(const Graph& g) {
    if (g.edge_count() == 0) return edgeless_tame(g.vertex_count());
    if (!opt_.memo) return tame_on(g);
    auto lab = canonical_labeling(g);
    auto it = tame_memo_.find(lab.form);
    if (it != tame_memo_.end()) {
      if (!it->second) return std::nullopt;
      return relabel(*it->second, lab.order);
    }
    Graph canon = g.relabeled(inverse(lab.order));
    auto r = tame_on(canon);
    if (!r && exhausted_) return std::nullopt;
    if (has_room(tame_memo_.size())) tame_memo_.emplace(lab.form, r);
    if (!r) return std::nullopt;
    return relabel(*r, lab.order);
  }

  std::optional<CountableCertificate> countable(const Graph& g) {
    if (g.edge_count() == 0) return edgeless_countable(g.vertex_count());
    auto gi = girth(g);
    if (gi && *gi <= 4) return std::nullopt;
    if (!opt_.memo) return countable_on(g);
    auto lab = canonical_labeling(g);
    auto it = countable_memo_.find(lab.form);
    if (it != countable_memo_.end()) {
      if (!it->second) return std::nullopt;
      return relabel(*it->second, lab.order);
    }
    Graph canon = g.relabeled(inverse(lab.order));
    auto r = countable_on(canon);
    if (!r && exhausted_) return std::nullopt;
    if (has_room(countable_memo_.size())) countable_memo_.emplace(lab.form, r);
    if (!r) return std::nullopt;
    return relabel(*r, lab.order);
  }

  /// Connector check: countable J and tame J ∨_I J.
  std::optional<std::pair<CountableCertificate, TameCertificate>> connector(
      const Graph& j, const std::vector<Vertex>& ends) {
    std::optional<CanonicalForm> key;
    if (opt_.memo) {
      key = canonical_form(j, ends);
      auto it = library_.find(*key);
      if (it != library_.end() && !it->second) return std::nullopt;
    }
    std::optional<std::pair<CountableCertificate, TameCertificate>> out;
    if (auto cc = countable(j)) {
      if (auto tc = tame(glue(RootedPattern{j, ends}))) out.emplace(std::move(*cc), std::move(*tc));
    }
    if (key && (out || !exhausted_) && has_room(library_.size())) library_[*key] = out.has_value();
    return out;
  }

  /// Paths with at most 6 edges and every independent end set of size <= 3.
  void seed_library() {
    if (!opt_.memo) return;
    for (int len = 1; len <= 6; ++len) {
      Graph p = graphs::path(len);
      const int n = p.vertex_count();
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if (std::popcount(m) > 3) continue;
        std::vector<Vertex> ends;
        for (int v = 0; v < n; ++v)
          if (m >> v & 1) ends.push_back(v);
        bool independent = true;
        for (std::size_t i = 0; i + 1 < ends.size(); ++i)
          independent = independent && ends[i + 1] != ends[i] + 1;
        if (independent) connector(p, ends);
      }
    }
  }

 private:
  bool has_room(std::size_t size) const { return opt_.memo_cap == 0 || size < opt_.memo_cap; }

  bool tick() {
    if (nodes_ >= opt_.budget) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  static TameCertificate edgeless_tame(int n) {
    TameCertificate c;
    c.base_vertices = n;
    for (int v = 0; v < n; ++v) c.vertex_map.push_back(v);
    return c;
  }

  static CountableCertificate edgeless_countable(int n) {
    CountableCertificate c;
    c.rule = CountableCertificate::Rule::kEdgeless;
    c.vertices = n;
    return c;
  }

  std::optional<TameCertificate> axiom_match(const Graph& g) {
    std::vector<Vertex> core, isolated;
    for (Vertex v = 0; v < g.vertex_count(); ++v) (g.degree(v) ? core : isolated).push_back(v);
    Graph h = g.induced(core);
    for (const auto& [name, a] : tame_axioms()) {
      if (a.vertex_count() != h.vertex_count() || a.edge_count() != h.edge_count()) continue;
      auto la = canonical_labeling(a);
      auto lh = canonical_labeling(h);
      if (la.form != lh.form) continue;
      TameCertificate c;
      c.base = TameCertificate::Base::kAxiom;
      c.axiom = name;
      c.base_vertices = static_cast<int>(isolated.size());
      c.vertex_map.assign(g.vertex_count(), -1);
      for (std::size_t i = 0; i < la.order.size(); ++i) c.vertex_map[la.order[i]] = core[lh.order[i]];
      for (std::size_t i = 0; i < isolated.size(); ++i) c.vertex_map[a.vertex_count() + i] = isolated[i];
      return c;
    }
    return std::nullopt;
  }

  std::optional<TameCertificate> tame_on(const Graph& g) {
    if (!tick()) return std::nullopt;
    if (opt_.allow_axioms) {
      if (auto c = axiom_match(g)) return c;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 1) continue;
      Vertex u = g.neighbors(v)[0];
      std::vector<Vertex> kept;
      Graph rest = delete_vertices(g, {v}, &kept);
      auto sub = tame(rest);
      if (!sub) return std::nullopt;
      return extend(*sub, kept, {TameStep::Rule::kPendant, u, u}, {v});
    }
    for (const Edge& e : g.edges()) {
      Vertex a = e.u, b = e.v;
      if (g.degree(a) != 2 || g.degree(b) != 2) continue;
      Vertex x = g.neighbors(a)[0] == b ? g.neighbors(a)[1] : g.neighbors(a)[0];
      Vertex y = g.neighbors(b)[0] == a ? g.neighbors(b)[1] : g.neighbors(b)[0];
      std::vector<Vertex> kept;
      Graph rest = delete_vertices(g, {a, b}, &kept);
      auto sub = tame(rest);
      if (sub) return extend(*sub, kept, {TameStep::Rule::kThreePath, x, y}, {a, b});
      if (exhausted_) return std::nullopt;
    }
    return std::nullopt;
  }

  // Appends one step to a certificate of g[kept]; step endpoints are given in
  // g's labels and the new vertices map to `fresh`.
  static TameCertificate extend(TameCertificate sub, const std::vector<Vertex>& kept,
                                TameStep step, const std::vector<Vertex>& fresh) {
    for (Vertex& v : sub.vertex_map) v = kept[v];
    auto built_index = [&](Vertex target) {
      auto it = std::find(sub.vertex_map.begin(), sub.vertex_map.end(), target);
      return static_cast<Vertex>(it - sub.vertex_map.begin());
    };
    step.u = built_index(step.u);
    step.v = built_index(step.v);
    sub.steps.push_back(step);
    for (Vertex v : fresh) sub.vertex_map.push_back(v);
    return sub;
  }

  std::optional<CountableCertificate> countable_on(const Graph& g) {
    if (!tick()) return std::nullopt;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 1) continue;
      auto sub = countable(delete_vertices(g, {v}, nullptr));
      if (sub) {
        CountableCertificate c;
        c.rule = CountableCertificate::Rule::kPendant;
        c.leaf = v;
        c.parent = Box<CountableCertificate>(std::move(*sub));
        return c;
      }
      if (exhausted_) return std::nullopt;
      break;
    }
    return islands_bridges(g);
  }

  struct Layout {
    std::vector<std::vector<Vertex>> islands;
    std::vector<std::vector<Vertex>> bridge_interiors;
    std::vector<std::vector<Vertex>> bridge_ends;
  };

  static std::vector<std::vector<Vertex>> components_within(const std::vector<Mask>& adj, Mask set) {
    std::vector<std::vector<Vertex>> out;
    Mask left = set;
    while (left) {
      Mask comp = left & (~left + 1);
      Mask frontier = comp;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask nb = adj[v] & set & ~comp;
        comp |= nb;
        frontier |= nb;
      }
      left &= ~comp;
      std::vector<Vertex> vs;
      for (Mask m = comp; m; m &= m - 1) vs.push_back(std::countr_zero(m));
      out.push_back(std::move(vs));
    }
    return out;
  }

  // Structural conditions of an islands-and-bridges layout given the island
  // vertex set; no recursion.
  static std::optional<Layout> layout_for(const Graph& g, const std::vector<Mask>& adj, Mask islands_mask) {
    const int n = g.vertex_count();
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    const Mask rest = all & ~islands_mask;
    Layout l;
    l.islands = components_within(adj, islands_mask);
    l.bridge_interiors = components_within(adj, rest);
    std::vector<int> island_of(n, -1);
    for (std::size_t i = 0; i < l.islands.size(); ++i)
      for (Vertex v : l.islands[i]) island_of[v] = static_cast<int>(i);
    const int m = g.edge_count();
    for (const auto& is : l.islands) {
      if (static_cast<int>(is.size()) == n) return std::nullopt;
    }
    std::vector<Mask> end_masks;
    for (const auto& interior : l.bridge_interiors) {
      Mask inner = 0;
      for (Vertex v : interior) inner |= Mask{1} << v;
      Mask ends = 0;
      int edges = 0;
      for (Vertex v : interior) {
        ends |= adj[v] & islands_mask;
        edges += std::popcount(adj[v] & islands_mask) * 2 + std::popcount(adj[v] & inner);
      }
      if (edges / 2 >= m && static_cast<int>(interior.size()) + std::popcount(ends) >= n) {
        return std::nullopt;
      }
      Mask seen_islands = 0;
      std::vector<Vertex> ev;
      for (Mask e = ends; e; e &= e - 1) {
        int v = std::countr_zero(e);
        Mask bit = Mask{1} << island_of[v];
        if (seen_islands & bit) return std::nullopt;
        seen_islands |= bit;
        ev.push_back(v);
      }
      for (Mask other : end_masks) {
        if (std::popcount(other & ends) > 1) return std::nullopt;
      }
      end_masks.push_back(ends);
      l.bridge_ends.push_back(std::move(ev));
    }
    return l;
  }

  std::optional<CountableCertificate> islands_bridges(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) return std::nullopt;
    std::vector<Mask> adj(n, 0);
    for (const Edge& e : g.edges()) {
      adj[e.u] |= Mask{1} << e.v;
      adj[e.v] |= Mask{1} << e.u;
    }
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    // Complements of the island set in order of increasing size.
    for (int w = 0; w < n; ++w) {
      Mask rest = w == 0 ? 0 : (Mask{1} << w) - 1;
      while (true) {
        if (!tick()) return std::nullopt;
        if (auto l = layout_for(g, adj, all & ~rest)) {
          if (auto c = realize(g, *l)) return c;
          if (exhausted_) return std::nullopt;
        }
        if (w == 0) break;
        // Gosper's hack: next mask with the same popcount.
        Mask c = rest & (~rest + 1);
        Mask r = rest + c;
        if (r == 0 || (n < 64 && r >> n)) break;
        rest = (((r ^ rest) >> 2) / c) | r;
        if (n < 64 && rest >> n) break;
      }
    }
    return std::nullopt;
  }

  std::optional<CountableCertificate> realize(const Graph& g, const Layout& l) {
    struct Done {
      Island island;
      bool tame;
    };
    std::vector<Done> islands;
    int untamed = 0;
    for (const auto& vs : l.islands) {
      Graph local = g.induced(vs);
      Island is;
      is.part.vertices = vs;
      const auto& local_edges = local.edges();
      is.part.edges.assign(local_edges.begin(), local_edges.end());
      is.tame = tame(local);
      if (!is.tame) {
        if (exhausted_ || ++untamed > 1) return std::nullopt;
      }
      islands.push_back({std::move(is), false});
      islands.back().tame = islands.back().island.tame.has_value();
    }
    for (auto& d : islands) {
      auto cc = countable(d.island.part.local());
      if (!cc) return std::nullopt;
      d.island.countable = std::move(*cc);
    }
    std::vector<ConnectorPart> connectors;
    for (std::size_t b = 0; b < l.bridge_interiors.size(); ++b) {
      std::vector<Vertex> vs = l.bridge_interiors[b];
      const auto& ends_global = l.bridge_ends[b];
      vs.insert(vs.end(), ends_global.begin(), ends_global.end());
      std::sort(vs.begin(), vs.end());
      std::vector<Vertex> ends;
      for (Vertex e : ends_global) ends.push_back(static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), e) - vs.begin()));
      std::sort(ends.begin(), ends.end());
      std::vector<Edge> edges;
      const Graph span_graph = g.induced(vs);
      for (const Edge& e : span_graph.edges()) {
        bool both_ends = std::binary_search(ends.begin(), ends.end(), e.u) &&
                         std::binary_search(ends.begin(), ends.end(), e.v);
        if (!both_ends) edges.push_back(e);
      }
      ConnectorPart cp;
      cp.part.vertices = vs;
      cp.part.edges = edges;
      cp.ends = ends;
      auto certs = connector(cp.part.local(), ends);
      if (!certs) return std::nullopt;
      cp.countable = std::move(certs->first);
      cp.glued_tame = std::move(certs->second);
      connectors.push_back(std::move(cp));
    }
    std::stable_partition(islands.begin(), islands.end(), [](const Done& d) { return d.tame; });
    CountableCertificate c;
    c.rule = CountableCertificate::Rule::kIslandsBridges;
    for (auto& d : islands) c.islands.push_back(std::move(d.island));
    c.connectors = std::move(connectors);
    return c;
  }

  SearchOptions opt_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::map<CanonicalForm, std::optional<TameCertificate>> tame_memo_;
  std::map<CanonicalForm, std::optional<CountableCertificate>> countable_memo_;
  std::map<CanonicalForm, bool> library_;
};

void require_searchable(const Graph& f) {
  if (f.loop_count() > 0) throw InputError("certify: graph has loops");
  if (f.vertex_count() > kCanonicalMaxVertices) {
    throw ResourceError("certify: search supports at most " +
                        std::to_string(kCanonicalMaxVertices) + " vertices");
  }
}

}  // namespace

TameSearchResult search_tame(const Graph& f, const SearchOptions& options) {
  require_searchable(f);
  Searcher s(options);
  TameSearchResult out;
  auto cert = s.tame(f);
  out.nodes = s.nodes();
  out.budget_exhausted = s.exhausted();
  if (cert && verify_tame_cert(f, *cert, options.allow_axioms)) out.certificate = std::move(cert);
  return out;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kCertified:
      return "certified";
    case VerdictStatus::kRefutedGirth:
      return "refuted_girth";
    case VerdictStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

VerdictStatus verdict_status_from_string(const std::string& s) {
  if (s == "certified") return VerdictStatus::kCertified;
  if (s == "refuted_girth") return VerdictStatus::kRefutedGirth;
  if (s == "unknown") return VerdictStatus::kUnknown;
  throw InputError("unknown verdict '" + s + "'");
}

Verdict search_countable(const Graph& f, const SearchOptions& options) {
  require_searchable(f);
  Verdict v;
  v.screen = two_density_screen(f);
  auto gi = girth(f);
  if (gi && *gi <= 4) {
    v.status = VerdictStatus::kRefutedGirth;
    v.witness = shortest_cycle(f);
    return v;
  }
  Searcher s(options);
  s.seed_library();
  const std::uint64_t seeded = s.nodes();
  auto cert = s.countable(f);
  v.nodes = s.nodes() - seeded;
  v.budget_exhausted = s.exhausted();
  if (cert && verify_countable_cert(f, *cert, options.allow_axioms)) {
    v.status = VerdictStatus::kCertified;
    v.certificate = std::move(cert);
  }
  return v;
}

}  // namespace c4count
