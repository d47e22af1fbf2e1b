#include "c4count/polarity.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <nlohmann/json.hpp>

#include "c4count/errors.hpp"
#include "c4count/field.hpp"
#include "c4count/random.hpp"
#include "c4count/structure.hpp"

namespace c4count {

PolarityGraph build_polarity(int q) {
  FiniteField f(q);
  PolarityGraph out;
  out.q = q;
  // Lexicographic over (x, y, z) keeping canonical representatives.
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) out.point_labels.push_back({x, y, z});
      }
  const int n = static_cast<int>(out.point_labels.size());
  auto dot = [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
  };
  std::vector<Edge> edges;
  std::vector<char> absolute(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (dot(out.point_labels[i], out.point_labels[j]) == 0) {
        edges.emplace_back(i, j);
        if (i == j) absolute[i] = 1;
      }
    }
  }
  out.g0 = Graph(n, std::move(edges), true);
  for (int v = 0; v < n; ++v)
    if (!absolute[v]) out.loopless_to_g0.push_back(v);
  out.loopless = out.g0.induced(out.loopless_to_g0).without_loops();
  return out;
}

bool PolarityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const PolarityCheck* PolarityReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string PolarityReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "c4count.polarity-report/1";
  j["q"] = q;
  j["all_passed"] = all_passed();
  for (const auto& c : checks) j["checks"][c.name] = c.passed;
  for (const auto& c : checks) j["details"][c.name] = c.detail;
  return j.dump(2);
}

PolarityReport verify_polarity(const PolarityGraph& p) {
  PolarityReport report;
  report.q = p.q;
  const Graph& g = p.g0;
  const int n = g.vertex_count();
  const int q = p.q;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // (A²)_ij = |N(i) ∩ N(j)| with a loop making i its own neighbor.
  bool square_ok = n == q * q + q + 1;
  bool unique_ok = true;
  std::string square_detail = square_ok ? "" : "vertex count " + std::to_string(n);
  for (int i = 0; i < n && (square_ok || unique_ok); ++i) {
    for (int j = i; j < n; ++j) {
      int entry = g.common_neighbor_count(i, j);
      int expected = (i == j ? q : 0) + 1;
      if (entry != expected && square_ok) {
        square_ok = false;
        square_detail = "(A^2)[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] = " + std::to_string(entry) + ", expected " +
                        std::to_string(expected);
      }
      if (i != j && entry != 1 && unique_ok) {
        unique_ok = false;
      }
    }
  }
  add("adjacency_square", square_ok, square_ok ? "A^2 = qI + J" : square_detail);
  add("unique_common_neighbor", unique_ok,
      unique_ok ? "every distinct pair has one common neighbor" : "violated");

  add("loop_count", g.loop_count() == q + 1,
      std::to_string(g.loop_count()) + " loops, expected " + std::to_string(q + 1));

  bool regular = true;
  for (int v = 0; v < n; ++v) regular = regular && g.degree(v) == q + 1;
  add("regularity", regular, "degree q+1 = " + std::to_string(q + 1));

  const Graph& h = p.loopless;
  add("loopless_vertex_count", h.vertex_count() == q * q,
      std::to_string(h.vertex_count()) + " vertices, expected " + std::to_string(q * q));
  add("loopless_c4_free", is_c4_free(h), "");

  auto per_edge = triangles_per_edge(h);
  auto bad = std::find_if(per_edge.begin(), per_edge.end(), [](int c) { return c != 1; });
  std::string tri_detail = std::to_string(h.edge_count()) + " edges, " +
                           std::to_string(triangles(h).size()) + " triangles";
  if (bad != per_edge.end()) {
    const Edge& e = h.edges()[bad - per_edge.begin()];
    tri_detail += "; edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") in " +
                  std::to_string(*bad) + " triangles";
  }
  add("loopless_unique_triangle", bad == per_edge.end(), tri_detail);
  return report;
}

Graph triangle_break(const Graph& g, std::uint64_t seed) {
  if (g.loop_count() > 0) throw InputError("triangle_break: graph has loops");
  auto per_edge = triangles_per_edge(g);
  for (std::size_t i = 0; i < per_edge.size(); ++i) {
    if (per_edge[i] != 1) {
      const Edge& e = g.edges()[i];
      throw PreconditionError("triangle_break: edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") lies in " +
                                  std::to_string(per_edge[i]) + " triangles",
                              e.u, e.v);
    }
  }
  Rng rng = Rng(seed).split("triangle_break");
  std::set<Edge> removed;
  for (const auto& t : triangles(g)) {
    const Edge choices[3] = {Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2])};
    removed.insert(choices[rng.below(3)]);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!removed.count(e)) kept.push_back(e);
  return g.with_edges(std::move(kept));
}

}  // namespace c4count
