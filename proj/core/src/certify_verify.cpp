#include <algorithm>
#include <map>
#include <set>

#include "c4count/canonical.hpp"
#include "c4count/certify.hpp"
#include "c4count/errors.hpp"
#include "c4count/structure.hpp"

namespace c4count {
namespace {

CheckResult nested(const std::string& where, CheckResult r) {
  if (!r.ok) r.detail = where + (r.detail.empty() ? "" : ": " + r.detail);
  return r;
}

Graph delete_vertex(const Graph& g, Vertex leaf) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != leaf) keep.push_back(v);
  return g.induced(keep);
}

// Validates vertex labels and edges of a part against F; returns its local
// graph through `out`.
CheckResult check_part(const Graph& f, const Part& p, const std::string& name, Graph& out) {
  std::set<Vertex> distinct(p.vertices.begin(), p.vertices.end());
  if (distinct.size() != p.vertices.size()) {
    return CheckResult::fail("part", name + " lists a vertex twice");
  }
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= f.vertex_count()) return CheckResult::fail("part", name + " vertex out of range");
  }
  try {
    out = p.local();
  } catch (const InputError& e) {
    return CheckResult::fail("part", name + ": " + e.what());
  }
  for (const Edge& e : out.edges()) {
    if (!f.has_edge(p.vertices[e.u], p.vertices[e.v])) {
      return CheckResult::fail("part", name + " uses an edge absent from the graph");
    }
  }
  return CheckResult::pass();
}

CheckResult check_countable(const Graph& f, const CountableCertificate& c, bool allow_axioms);

CheckResult check_islands_bridges(const Graph& f, const CountableCertificate& c,
                                  bool allow_axioms) {
  if (c.islands.empty()) return CheckResult::fail("(a) islands", "no islands");
  const std::size_t k = c.islands.size();
  std::vector<Graph> island_graphs(k), connector_graphs(c.connectors.size());
  for (std::size_t i = 0; i < k; ++i) {
    auto r = check_part(f, c.islands[i].part, "island " + std::to_string(i), island_graphs[i]);
    if (!r) return r;
  }
  for (std::size_t j = 0; j < c.connectors.size(); ++j) {
    auto r = check_part(f, c.connectors[j].part, "connector " + std::to_string(j),
                        connector_graphs[j]);
    if (!r) return r;
  }

  // Edge-disjoint union covering F.
  std::map<Edge, int> used;
  std::vector<char> covered(f.vertex_count(), 0);
  auto account = [&](const Part& p, const Graph& local) {
    for (const Edge& e : local.edges()) ++used[Edge(p.vertices[e.u], p.vertices[e.v])];
    for (Vertex v : p.vertices) covered[v] = 1;
  };
  for (std::size_t i = 0; i < k; ++i) account(c.islands[i].part, island_graphs[i]);
  for (std::size_t j = 0; j < c.connectors.size(); ++j) {
    account(c.connectors[j].part, connector_graphs[j]);
  }
  for (const auto& [e, count] : used) {
    if (count > 1) {
      return CheckResult::fail("edge_partition", "edge (" + std::to_string(e.u) + "," +
                                                     std::to_string(e.v) + ") used twice");
    }
  }
  if (used.size() != static_cast<std::size_t>(f.edge_count())) {
    return CheckResult::fail("edge_partition", "parts do not cover every edge");
  }
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (!covered[v]) {
      return CheckResult::fail("edge_partition", "vertex " + std::to_string(v) + " not covered");
    }
  }

  // (a) islands vertex-disjoint and countable.
  std::vector<int> island_of(f.vertex_count(), -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : c.islands[i].part.vertices) {
      if (island_of[v] >= 0) {
        return CheckResult::fail("(a) vertex-disjoint islands",
                                 "vertex " + std::to_string(v) + " lies in islands " +
                                     std::to_string(island_of[v]) + " and " + std::to_string(i));
      }
      island_of[v] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    auto r = check_countable(island_graphs[i], *c.islands[i].countable, allow_axioms);
    if (!r) {
      return CheckResult::fail("(a) countable islands",
                               "island " + std::to_string(i) + ": [" + r.condition + "] " + r.detail);
    }
  }

  // (b) every island but the last is tame; a certificate on the last one
  // must also be valid when present.
  for (std::size_t i = 0; i < k; ++i) {
    const auto& tame = c.islands[i].tame;
    if (!tame) {
      if (i + 1 < k) {
        return CheckResult::fail("(b) tame islands",
                                 "island " + std::to_string(i) + " has no tame certificate");
      }
      continue;
    }
    auto r = verify_tame_cert(island_graphs[i], *tame, allow_axioms);
    if (!r) {
      return CheckResult::fail("(b) tame islands",
                               "island " + std::to_string(i) + ": [" + r.condition + "] " + r.detail);
    }
  }

  // (c) connectors.
  for (std::size_t j = 0; j < c.connectors.size(); ++j) {
    const ConnectorPart& cp = c.connectors[j];
    const Graph& local = connector_graphs[j];
    const std::string name = "connector " + std::to_string(j);
    std::set<Vertex> ends(cp.ends.begin(), cp.ends.end());
    if (ends.size() != cp.ends.size()) return CheckResult::fail("(c) connector ends", name + " repeats an end");
    for (Vertex e : ends) {
      if (e < 0 || e >= local.vertex_count()) {
        return CheckResult::fail("(c) connector ends", name + " end out of range");
      }
    }
    for (Vertex a : ends)
      for (Vertex b : ends)
        if (a < b && local.has_edge(a, b)) {
          return CheckResult::fail("(c) independent ends", name + " has adjacent ends");
        }
    std::set<Vertex> meet;
    for (Vertex v = 0; v < local.vertex_count(); ++v)
      if (island_of[cp.part.vertices[v]] >= 0) meet.insert(v);
    if (meet != ends) {
      return CheckResult::fail("(c) connector ends",
                               name + " ends differ from its intersection with the islands");
    }
    std::set<int> islands_hit;
    for (Vertex e : ends) {
      if (!islands_hit.insert(island_of[cp.part.vertices[e]]).second) {
        return CheckResult::fail("(c) one end per island",
                                 name + " has two ends in island " +
                                     std::to_string(island_of[cp.part.vertices[e]]));
      }
    }
    auto rc = check_countable(local, *cp.countable, allow_axioms);
    if (!rc) {
      return CheckResult::fail("(c) countable connector",
                               name + ": [" + rc.condition + "] " + rc.detail);
    }
    Graph glued = glue(RootedPattern{local, std::vector<Vertex>(ends.begin(), ends.end())});
    auto rt = verify_tame_cert(glued, cp.glued_tame, allow_axioms);
    if (!rt) {
      return CheckResult::fail("(c) tame gluing", name + ": [" + rt.condition + "] " + rt.detail);
    }
  }

  // (d) connectors share at most one vertex, and it is an end of both.
  for (std::size_t a = 0; a < c.connectors.size(); ++a) {
    for (std::size_t b = a + 1; b < c.connectors.size(); ++b) {
      const auto& pa = c.connectors[a];
      const auto& pb = c.connectors[b];
      std::vector<Vertex> shared;
      for (std::size_t x = 0; x < pa.part.vertices.size(); ++x) {
        auto it = std::find(pb.part.vertices.begin(), pb.part.vertices.end(), pa.part.vertices[x]);
        if (it == pb.part.vertices.end()) continue;
        Vertex y = static_cast<Vertex>(it - pb.part.vertices.begin());
        bool end_a = std::find(pa.ends.begin(), pa.ends.end(), static_cast<Vertex>(x)) != pa.ends.end();
        bool end_b = std::find(pb.ends.begin(), pb.ends.end(), y) != pb.ends.end();
        if (!end_a || !end_b) {
          return CheckResult::fail("(d) connector overlap",
                                   "connectors " + std::to_string(a) + " and " + std::to_string(b) +
                                       " share a vertex outside their end sets");
        }
        shared.push_back(pa.part.vertices[x]);
      }
      if (shared.size() > 1) {
        return CheckResult::fail("(d) connector overlap",
                                 "connectors " + std::to_string(a) + " and " + std::to_string(b) +
                                     " share " + std::to_string(shared.size()) + " vertices");
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_countable(const Graph& f, const CountableCertificate& c, bool allow_axioms) {
  switch (c.rule) {
    case CountableCertificate::Rule::kEdgeless:
      if (f.edge_count() != 0 || f.vertex_count() != c.vertices) {
        return CheckResult::fail("edgeless base", "graph is not edgeless on " +
                                                      std::to_string(c.vertices) + " vertices");
      }
      return CheckResult::pass();
    case CountableCertificate::Rule::kPendant: {
      if (c.leaf < 0 || c.leaf >= f.vertex_count() || f.degree(c.leaf) != 1) {
        return CheckResult::fail("pendant", "vertex " + std::to_string(c.leaf) + " is not a leaf");
      }
      if (!c.parent) return CheckResult::fail("pendant", "missing parent certificate");
      return nested("after deleting leaf " + std::to_string(c.leaf),
                    check_countable(delete_vertex(f, c.leaf), **c.parent, allow_axioms));
    }
    case CountableCertificate::Rule::kIslandsBridges:
      return check_islands_bridges(f, c, allow_axioms);
  }
  return CheckResult::fail("rule", "unknown rule");
}

}  // namespace

CheckResult verify_tame_cert(const Graph& f, const TameCertificate& cert, bool allow_axioms) {
  if (cert.base == TameCertificate::Base::kAxiom && !allow_axioms) {
    return CheckResult::fail("axiom", "axioms disabled");
  }
  Graph built;
  try {
    built = replay(cert);
  } catch (const InputError& e) {
    return CheckResult::fail("malformed step", e.what());
  }
  if (built.vertex_count() != f.vertex_count() || built.edge_count() != f.edge_count()) {
    return CheckResult::fail("replay", "replayed graph has " + std::to_string(built.vertex_count()) +
                                           " vertices and " + std::to_string(built.edge_count()) +
                                           " edges");
  }
  if (!cert.vertex_map.empty()) {
    const int n = f.vertex_count();
    if (static_cast<int>(cert.vertex_map.size()) != n) {
      return CheckResult::fail("vertex map", "wrong length");
    }
    std::vector<char> hit(n, 0);
    for (Vertex v : cert.vertex_map) {
      if (v < 0 || v >= n || hit[v]) return CheckResult::fail("vertex map", "not a bijection");
      hit[v] = 1;
    }
    for (const Edge& e : built.edges()) {
      if (!f.has_edge(cert.vertex_map[e.u], cert.vertex_map[e.v])) {
        return CheckResult::fail("vertex map", "maps an edge onto a non-edge");
      }
    }
    return CheckResult::pass();
  }
  if (f.vertex_count() > kCanonicalMaxVertices) {
    return CheckResult::fail("replay", "isomorphism check needs a vertex map above " +
                                           std::to_string(kCanonicalMaxVertices) + " vertices");
  }
  if (canonical_form(built) != canonical_form(f)) {
    return CheckResult::fail("replay", "replayed graph is not isomorphic to the target");
  }
  return CheckResult::pass();
}

CheckResult verify_countable_cert(const Graph& f, const CountableCertificate& cert,
                                  bool allow_axioms) {
  if (f.loop_count() > 0) return CheckResult::fail("input", "graph has loops");
  return check_countable(f, cert, allow_axioms);
}

}  // namespace c4count
