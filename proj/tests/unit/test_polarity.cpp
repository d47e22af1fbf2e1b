#include <gtest/gtest.h>

#include <cmath>

#include "c4count/errors.hpp"
#include "c4count/field.hpp"
#include "c4count/harness.hpp"
#include "c4count/polarity.hpp"
#include "c4count/structure.hpp"
#include "../support/oracles.hpp"

namespace c4count {
namespace {

const std::vector<int> kSmallOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13};

TEST(Field, SupportedOrdersSatisfyAxioms) {
  for (int q : FiniteField::supported_orders()) {
    FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      ASSERT_EQ(f.add(a, 0), a);
      ASSERT_EQ(f.mul(a, 1), a);
      ASSERT_EQ(f.add(a, f.neg(a)), 0);
      if (a) ASSERT_EQ(f.mul(a, f.inv(a)), 1);
      for (int b = 0; b < q; ++b) {
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        for (int c = 0; c < q; ++c) ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST(Field, RejectsNonPrimePowers) {
  EXPECT_THROW(FiniteField(6), InputError);
  EXPECT_THROW(FiniteField(1), InputError);
  EXPECT_THROW(build_polarity(10), InputError);
}

// Brute force over F_2^3 \ {0}: every nonzero vector is its own point.
TEST(Polarity, QEquals2MatchesDirectEvaluation) {
  PolarityGraph p = build_polarity(2);
  EXPECT_EQ(p.g0.vertex_count(), 7);
  EXPECT_EQ(p.g0.loop_count(), 3);
  std::vector<std::array<int, 3>> pts;
  for (int v = 1; v < 8; ++v) pts.push_back({v >> 2 & 1, v >> 1 & 1, v & 1});
  int loops = 0, edges = 0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a; b < pts.size(); ++b) {
      int dot = (pts[a][0] * pts[b][0] + pts[a][1] * pts[b][1] + pts[a][2] * pts[b][2]) % 2;
      if (dot == 0) (a == b ? loops : edges) += 1;
    }
  EXPECT_EQ(loops, 3);
  EXPECT_EQ(p.g0.edge_count() - p.g0.loop_count(), edges);
  EXPECT_EQ(p.loopless.vertex_count(), 4);
  EXPECT_EQ(p.loopless.edge_count(), 3);
  EXPECT_EQ(oracle::triangle_count(p.loopless), 1);
  PolarityReport r = verify_polarity(p);
  ASSERT_NE(r.find("loopless_unique_triangle"), nullptr);
  EXPECT_TRUE(r.find("loopless_unique_triangle")->passed);
}

TEST(Polarity, QEquals3IsRegular) {
  PolarityGraph p = build_polarity(3);
  EXPECT_EQ(p.g0.vertex_count(), 13);
  EXPECT_EQ(p.g0.loop_count(), 4);
  for (int v = 0; v < 13; ++v) EXPECT_EQ(p.g0.degree(v), 4);
  EXPECT_TRUE(is_c4_free(p.loopless));
}

// A² = qI + J and the remaining structure, checked by matrix multiplication
// here rather than through the report.
TEST(Polarity, AdjacencySquareByMatrixProduct) {
  for (int q : kSmallOrders) {
    PolarityGraph p = build_polarity(q);
    const int n = p.g0.vertex_count();
    ASSERT_EQ(n, q * q + q + 1);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (const Edge& e : p.g0.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int s = 0;
        for (int z = 0; z < n; ++z) s += a[x][z] * a[z][y];
        ASSERT_EQ(s, (x == y ? q : 0) + 1) << "q=" << q;
      }
    EXPECT_EQ(p.g0.loop_count(), q + 1);
    EXPECT_EQ(p.loopless.vertex_count(), q * q);
    EXPECT_TRUE(verify_polarity(p).all_passed()) << "q=" << q;
  }
}

TEST(Polarity, LooplessDegreesAndUniqueTriangles) {
  for (int q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 17}) {
    PolarityGraph p = build_polarity(q);
    long sum = 0;
    int isolated = 0;
    for (int v = 0; v < p.loopless.vertex_count(); ++v) {
      int d = p.loopless.degree(v);
      sum += d;
      // In characteristic 2 the absolute points lie on one line whose pole
      // loses all of its neighbors.
      if (d == 0 && q % 2 == 0) {
        ++isolated;
        continue;
      }
      EXPECT_GE(d, q - 1);
      EXPECT_LE(d, q + 1);
    }
    EXPECT_EQ(isolated, q % 2 == 0 ? 1 : 0);
    EXPECT_EQ(sum, 2L * p.loopless.edge_count());
    EXPECT_LE(p.loopless.max_degree(), 2 * q);
    for (int t : triangles_per_edge(p.loopless)) ASSERT_EQ(t, 1) << "q=" << q;
    EXPECT_FALSE(oracle::has_c4(p.loopless));
  }
}

TEST(Polarity, SpectrumIsTopPlusMinusRootQ) {
  for (int q : kSmallOrders) {
    PolarityGraph p = build_polarity(q);
    auto ev = adjacency_spectrum(p.g0);
    const double root = std::sqrt(static_cast<double>(q));
    ASSERT_NEAR(ev.back(), q + 1, 1e-9);
    double trace = 0;
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
      ASSERT_NEAR(std::abs(ev[i]), root, 1e-9) << "q=" << q;
      trace += ev[i];
    }
    trace += ev.back();
    // trace(A) is the number of loops.
    EXPECT_NEAR(trace, q + 1, 1e-7);
  }
}

TEST(Polarity, PerturbationBreaksSquareIdentity) {
  PolarityGraph p = build_polarity(5);
  std::vector<Edge> edges(p.g0.edges().begin(), p.g0.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edges[i].is_loop()) {
      edges.erase(edges.begin() + static_cast<long>(i));
      break;
    }
  }
  PolarityGraph broken = p;
  broken.g0 = Graph(p.g0.vertex_count(), edges, true);
  PolarityReport r = verify_polarity(broken);
  EXPECT_FALSE(r.find("adjacency_square")->passed);
  EXPECT_FALSE(r.all_passed());
}

TEST(Polarity, PointLabelsAreOrthogonalityGraph) {
  for (int q : {4, 7, 9}) {
    PolarityGraph p = build_polarity(q);
    FiniteField f(q);
    for (int a = 0; a < p.g0.vertex_count(); ++a)
      for (int b = a; b < p.g0.vertex_count(); ++b) {
        const auto& x = p.point_labels[a];
        const auto& y = p.point_labels[b];
        int dot = f.add(f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1])), f.mul(x[2], y[2]));
        ASSERT_EQ(p.g0.has_edge(a, b), dot == 0);
      }
  }
}

TEST(TriangleBreak, SingleTriangleBecomesPath) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = triangle_break(graphs::cycle(3), seed);
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_EQ(oracle::girth(g), std::nullopt);
  }
}

TEST(TriangleBreak, PolarityBecomesTriangleFree) {
  for (int q : {5, 7, 11}) {
    Graph g = build_polarity(q).loopless;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Graph h = triangle_break(g, seed);
      ASSERT_EQ(oracle::triangle_count(h), 0);
      ASSERT_EQ(3 * h.edge_count(), 2 * g.edge_count());
      for (const Edge& e : h.edges()) ASSERT_TRUE(g.has_edge(e.u, e.v));
    }
  }
  Graph g = build_polarity(11).loopless;
  EXPECT_EQ(triangle_break(g, 42), triangle_break(g, 42));
  EXPECT_NE(triangle_break(g, 42), triangle_break(g, 43));
}

TEST(TriangleBreak, RejectsEdgesOutsideTriangles) {
  try {
    triangle_break(graphs::cycle(5), 1);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_GE(e.witness_u(), 0);
  }
}

TEST(PolarityReport, JsonHasSchemaAndChecks) {
  std::string j = verify_polarity(build_polarity(3)).to_json();
  EXPECT_NE(j.find("\"schema\""), std::string::npos);
  EXPECT_NE(j.find("adjacency_square"), std::string::npos);
}

}  // namespace
}  // namespace c4count
