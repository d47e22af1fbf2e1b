#include <gtest/gtest.h>

#include <random>
#include <set>

#include "c4count/canonical.hpp"
#include "c4count/corpus.hpp"
#include "c4count/edge_list.hpp"
#include "c4count/errors.hpp"
#include "c4count/graph.hpp"
#include "c4count/structure.hpp"
#include "../support/oracles.hpp"

namespace c4count {
namespace {

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
  Graph loops(3, {{1, 1}, {0, 1}}, true);
  EXPECT_EQ(loops.loop_count(), 1);
  EXPECT_EQ(loops.degree(1), 2);
}

TEST(Graph, AdjacencyQueriesMatchMatrix) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(30, 0.2, rng);
    auto a = oracle::matrix(g);
    for (int x = 0; x < 30; ++x) {
      for (int y = 0; y < 30; ++y) {
        ASSERT_EQ(g.has_edge(x, y), a[x][y] == 1);
        if (x == y) continue;
        int common = 0;
        for (int z = 0; z < 30; ++z) common += a[x][z] && a[y][z];
        ASSERT_EQ(g.common_neighbor_count(x, y), common);
      }
    }
  }
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(graphs::cycle(5)), 5);
  EXPECT_EQ(girth(graphs::path(6)), std::nullopt);
  EXPECT_EQ(girth(graphs::star(4)), std::nullopt);
  EXPECT_EQ(girth(graphs::petersen()), oracle::girth(graphs::petersen()));
  EXPECT_EQ(girth(graphs::petersen()), 5);
  EXPECT_EQ(girth(graphs::dodecahedron()), 5);
  EXPECT_EQ(girth(graphs::complete(4)), 3);
  EXPECT_THROW(girth(Graph(2, {{0, 0}}, true)), InputError);
}

TEST(Girth, ShortestCycleIsACycleOfGirthLength) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(12, 0.25, rng);
    auto cyc = shortest_cycle(g);
    auto gi = oracle::girth(g);
    if (!gi) {
      EXPECT_TRUE(cyc.empty());
      continue;
    }
    ASSERT_EQ(static_cast<int>(cyc.size()), *gi);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      EXPECT_TRUE(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
    EXPECT_EQ(std::set<Vertex>(cyc.begin(), cyc.end()).size(), cyc.size());
  }
}

TEST(C4Free, Examples) {
  EXPECT_FALSE(is_c4_free(graphs::cycle(4)));
  EXPECT_TRUE(is_c4_free(graphs::star(3)));
  EXPECT_TRUE(is_c4_free(graphs::petersen()));
}

// Three independent characterizations of C4-freeness agree.
TEST(C4Free, AgreesWithGirthAndCodegreeOn500RandomGraphs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 20);
  std::uniform_real_distribution<double> dens(0.05, 0.4);
  for (int t = 0; t < 500; ++t) {
    Graph g = oracle::random_graph(size(rng), dens(rng), rng);
    const bool free = is_c4_free(g);
    EXPECT_EQ(free, !oracle::has_c4(g));
    EXPECT_EQ(free, max_common_neighbors(g) <= 1);
    // Girth 3 graphs may still be C4-free, so compare on triangle-free ones.
    if (oracle::triangle_count(g) == 0) {
      auto gi = oracle::girth(g);
      EXPECT_EQ(free, !gi || *gi != 4);
    }
    EXPECT_EQ(girth(g), oracle::girth(g));
  }
}

TEST(Triangles, PerEdgeCountsMatchEnumeration) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(14, 0.35, rng);
    EXPECT_EQ(static_cast<std::int64_t>(triangles(g).size()), oracle::triangle_count(g));
    auto per = triangles_per_edge(g);
    auto a = oracle::matrix(g);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      int c = 0;
      for (int z = 0; z < 14; ++z) c += a[e.u][z] && a[e.v][z];
      EXPECT_EQ(per[i], c);
    }
  }
}

TEST(Glue, TwoPathGivesC4) {
  Graph glued = glue({graphs::path(2), {0, 2}});
  EXPECT_TRUE(oracle::isomorphic(glued, graphs::cycle(4)));
}

TEST(Glue, SingleVertexOnItself) {
  Graph glued = glue({Graph(1), {0}});
  EXPECT_EQ(glued.vertex_count(), 1);
  EXPECT_EQ(glued.edge_count(), 0);
}

TEST(Glue, FiveCyclePairConnectorGivesTameSequenceGraph) {
  Graph glued = glue(graphs::c5pair_connector());
  EXPECT_EQ(glued.vertex_count(), 14);
  EXPECT_EQ(canonical_form(glued), canonical_form(graphs::tame_sequence(4)));
}

TEST(Glue, RejectsDependentEnds) {
  EXPECT_THROW(glue({graphs::path(2), {0, 1}}), InputError);
}

TEST(Glue, CopiesAreIsomorphicToJ) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Graph j = oracle::random_graph(7, 0.35, rng);
    std::vector<Vertex> ends;
    for (Vertex v = 0; v < 7 && ends.size() < 3; ++v) {
      bool independent = std::none_of(ends.begin(), ends.end(), [&](Vertex e) { return j.has_edge(e, v); });
      if (independent && rng() % 2) ends.push_back(v);
    }
    RootedPattern rp{j, ends};
    Graph glued = glue(rp);
    EXPECT_EQ(glued.edge_count(), 2 * j.edge_count());
    EXPECT_EQ(glued.vertex_count(), 2 * 7 - static_cast<int>(ends.size()));
    std::vector<Vertex> first(7);
    std::iota(first.begin(), first.end(), 0);
    EXPECT_EQ(glued.induced(first), j);
    auto second = glue_second_copy(rp);
    EXPECT_EQ(glued.induced(second), j);
  }
}

TEST(DensityScreen, Examples) {
  EXPECT_FALSE(two_density_screen(graphs::complete(3)).pass);
  EXPECT_TRUE(two_density_screen(graphs::cycle(5)).pass);
  EXPECT_TRUE(two_density_screen(graphs::petersen()).pass);
  EXPECT_FALSE(two_density_screen(graphs::complete(4)).pass);
}

bool brute_two_density(const Graph& f) {
  const int n = f.vertex_count();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) vs.push_back(v);
    if (vs.size() < 3) continue;
    if (f.induced(vs).edge_count() > 2 * static_cast<int>(vs.size()) - 4) return false;
  }
  return true;
}

TEST(DensityScreen, ExhaustiveAndFlowAgreeWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 150; ++t) {
    Graph g = oracle::random_graph(9, 0.45, rng);
    const bool expect = brute_two_density(g);
    auto ex = two_density_screen_exhaustive(g);
    auto fl = two_density_screen_flow(g);
    EXPECT_EQ(ex.pass, expect);
    EXPECT_EQ(fl.pass, expect);
    for (const auto* s : {&ex, &fl}) {
      if (s->pass) continue;
      Graph w = g.induced(s->witness);
      EXPECT_GE(s->witness.size(), 3u);
      EXPECT_EQ(w.edge_count(), s->witness_edges);
      EXPECT_GT(w.edge_count(), 2 * static_cast<int>(s->witness.size()) - 4);
    }
  }
}

TEST(DensityScreen, MonotoneUnderEdgeDeletion) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_graph(10, 0.4, rng);
    if (!two_density_screen(g).pass) continue;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    while (!edges.empty()) {
      edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
      ASSERT_TRUE(two_density_screen(Graph(10, edges)).pass);
    }
  }
}

TEST(Canonical, Examples) {
  std::mt19937_64 rng(1);
  Graph c5 = graphs::cycle(5);
  for (int t = 0; t < 20; ++t) EXPECT_EQ(canonical_form(oracle::random_relabel(c5, rng)), canonical_form(c5));
  EXPECT_NE(canonical_form(c5), canonical_form(graphs::path(4)));
  std::vector<Vertex> ends{0, 2}, mixed{0, 1};
  EXPECT_NE(canonical_form(graphs::path(2), ends), canonical_form(graphs::path(2), mixed));
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(31);
  std::vector<Graph> library = {graphs::petersen(), graphs::dodecahedron(), graphs::tame_sequence(4),
                                graphs::c5_pair_by_paths(), graphs::complete_bipartite(3, 4)};
  for (int t = 0; t < 5; ++t) library.push_back(oracle::random_graph(16, 0.3, rng));
  for (const Graph& g : library) {
    auto form = canonical_form(g);
    for (int r = 0; r < 100; ++r) ASSERT_EQ(canonical_form(oracle::random_relabel(g, rng)), form);
  }
}

TEST(Canonical, RootedFormsTrackRoots) {
  std::mt19937_64 rng(37);
  RootedPattern j = graphs::c5pair_connector();
  auto form = canonical_form(j.pattern, j.ends);
  for (int r = 0; r < 50; ++r) {
    std::vector<Vertex> perm;
    Graph moved = oracle::random_relabel(j.pattern, rng, &perm);
    std::vector<Vertex> ends;
    for (Vertex e : j.ends) ends.push_back(perm[e]);
    std::sort(ends.begin(), ends.end());
    ASSERT_EQ(canonical_form(moved, ends), form);
  }
}

TEST(Canonical, LabelingOrderRealizesTheForm) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_graph(12, 0.3, rng);
    Graph h = oracle::random_relabel(g, rng);
    auto lg = canonical_labeling(g), lh = canonical_labeling(h);
    std::vector<Vertex> inv_g(12), inv_h(12);
    for (int i = 0; i < 12; ++i) inv_g[lg.order[i]] = i, inv_h[lh.order[i]] = i;
    EXPECT_EQ(g.relabeled(inv_g), h.relabeled(inv_h));
  }
}

TEST(Canonical, SeparatesNonIsomorphicLibrary) {
  std::vector<Graph> library;
  for (int n = 1; n <= 5; ++n)
    for (Graph& g : oracle::all_graphs(n, false)) library.push_back(std::move(g));
  ASSERT_GE(library.size(), 30u);
  std::set<CanonicalForm> forms;
  for (const Graph& g : library) forms.insert(canonical_form(g));
  EXPECT_EQ(forms.size(), library.size());
}

TEST(Canonical, DecidesIsomorphismLikeBruteForce) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    Graph a = oracle::random_graph(6, 0.5, rng);
    Graph b = oracle::random_graph(6, 0.5, rng);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), oracle::isomorphic(a, b));
  }
}

TEST(EdgeList, Examples) {
  Graph tri = parse_edge_list("3 3\n0 1\n1 2\n2 0");
  EXPECT_EQ(tri, graphs::cycle(3));
  Graph p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3");
  EXPECT_EQ(p4, graphs::path(3));
  try {
    parse_edge_list("2 1\n0 0");
    FAIL();
  } catch (const EdgeListError& e) {
    EXPECT_EQ(e.kind(), EdgeListErrorKind::kLoopNotAllowed);
  }
  EXPECT_EQ(parse_edge_list("2 1\n0 0", true).loop_count(), 1);
}

TEST(EdgeList, DistinctErrorKinds) {
  auto kind = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const EdgeListError& e) {
      return e.kind();
    }
    return EdgeListErrorKind::kMalformed;
  };
  EXPECT_EQ(kind("3 1\n0 3"), EdgeListErrorKind::kOutOfRange);
  EXPECT_EQ(kind("3 2\n0 1\n1 0"), EdgeListErrorKind::kDuplicateEdge);
  EXPECT_EQ(kind("3 2\n0 1"), EdgeListErrorKind::kCountMismatch);
  EXPECT_THROW(parse_edge_list("3 x\n"), EdgeListError);
  EXPECT_THROW(parse_edge_list(""), EdgeListError);
}

TEST(EdgeList, RoundTrip1000RandomGraphs) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> size(0, 40);
  for (int t = 0; t < 1000; ++t) {
    Graph g = oracle::random_graph(size(rng), 0.15, rng);
    ASSERT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(EdgeList, CommentsAndBlankLines) {
  Graph g = parse_edge_list("# a path\n3 2\n\n0 1\n# middle\n1 2\n");
  EXPECT_EQ(g, graphs::path(2));
}

TEST(Dot, MarksEnds) {
  std::vector<Vertex> ends{0, 2};
  std::string dot = to_dot(graphs::path(2), ends);
  EXPECT_NE(dot.find("0 [shape=triangle"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_EQ(dot.find("1 [shape=triangle"), std::string::npos);
}

TEST(Constructions, Sizes) {
  EXPECT_EQ(graphs::subdivision(graphs::complete(5)).vertex_count(), 15);
  EXPECT_EQ(graphs::subdivision(graphs::complete(5)).edge_count(), 20);
  EXPECT_EQ(graphs::petersen().edge_count(), 15);
  EXPECT_EQ(graphs::dodecahedron().vertex_count(), 20);
  EXPECT_EQ(graphs::dodecahedron().edge_count(), 30);
  EXPECT_EQ(graphs::c5_chain(3).vertex_count(), 11);
  EXPECT_EQ(graphs::c5_pair_by_paths().vertex_count(), 20);
  EXPECT_EQ(girth(graphs::c5_pair_by_paths()), 5);
  EXPECT_EQ(girth(graphs::c5pair_extended()), 5);
  // Trees on 1..10 vertices: 1,1,1,2,3,6,11,23,47,106.
  EXPECT_EQ(graphs::all_trees(10).size(), 201u);
}

}  // namespace
}  // namespace c4count
