#include <gtest/gtest.h>

#include <random>

#include "c4count/errors.hpp"
#include "c4count/homcount.hpp"
#include "c4count/polarity.hpp"
#include "c4count/structure.hpp"
#include "c4count/corpus.hpp"
#include "../support/oracles.hpp"

namespace c4count {
namespace {

HomOptions exact_mode() {
  HomOptions o;
  o.mode = HomMode::kExact;
  return o;
}

Quadratic scaled_sparse_density(const Rational& raw, const Rational& c, int n, int v, int e) {
  // raw · (c√n)^e / n^v
  Quadratic s(Rational(1));
  Quadratic cs = Quadratic::sqrt_of(n).scaled(c);
  for (int i = 0; i < e; ++i) s = s * cs;
  return s.scaled(raw / oracle::power(n, v));
}

TEST(HomBrute, Examples) {
  EXPECT_EQ(hom_brute(graphs::cycle(5), graphs::cycle(5)), 10u);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    EXPECT_EQ(hom_brute(Graph(1), g), 9u);
    EXPECT_EQ(hom_brute(graphs::path(1), g), 2u * g.edge_count());
    std::uint64_t cubes = 0;
    for (int x = 0; x < 9; ++x) cubes += static_cast<std::uint64_t>(g.degree(x)) * g.degree(x) * g.degree(x);
    EXPECT_EQ(hom_brute(graphs::star(3), g), cubes);
    EXPECT_EQ(Rational(hom_brute(graphs::cycle(4), g)), oracle::plain_hom(graphs::cycle(4), g));
  }
}

TEST(HomBrute, GuardsEnumerationSize) {
  EXPECT_THROW(hom_brute(graphs::path(9), graphs::cycle(20)), ResourceError);
}

TEST(EliminationOrder, Widths) {
  for (const Graph& t : graphs::all_trees(8)) {
    if (t.edge_count() == 0) continue;
    EXPECT_EQ(elimination_order(t).width, 1);
  }
  EXPECT_EQ(elimination_order(graphs::cycle(5)).width, 2);
  EXPECT_EQ(elimination_order(graphs::petersen()).width, 4);
  EXPECT_TRUE(elimination_order(graphs::petersen()).exact);
}

TEST(HomWeighted, EdgelessDensityIsOne) {
  Graph g = build_polarity(3).loopless;
  for (int k = 1; k <= 4; ++k) {
    HomResult r = hom_weighted(Graph(k), ScaledHost::sparse(g), VertexWeights::ones(k, 9), exact_mode());
    EXPECT_EQ(*r.value_exact, Quadratic(Rational(1)));
  }
}

TEST(HomWeighted, SingleEdgeIsEdgeDensity) {
  Graph g = build_polarity(5).loopless;
  const Rational c(1, 2);
  HomResult r = hom_weighted(graphs::path(1), ScaledHost::sparse(g, c), VertexWeights::ones(2, 25), exact_mode());
  // c·2|E|/n^{3/2} with n = 25.
  Rational expect = c * 2 * g.edge_count() / Rational(125);
  EXPECT_EQ(*r.value_exact, Quadratic(expect));
  EXPECT_NEAR(r.value, expect.get_d(), 1e-12);
}

TEST(HomWeighted, FiveCycleOnPolarityMatchesBrute) {
  for (int q : {3, 5}) {
    Graph g = build_polarity(q).loopless;
    const int n = g.vertex_count();
    const Rational c(1, 2);
    HomResult r = hom_weighted(graphs::cycle(5), ScaledHost::sparse(g, c), VertexWeights::ones(5, n), exact_mode());
    Rational brute(hom_brute(graphs::cycle(5), g));
    EXPECT_EQ(*r.raw_exact, brute);
    EXPECT_EQ(*r.value_exact, scaled_sparse_density(brute, c, n, 5, 5));
    HomResult fl = hom_weighted(graphs::cycle(5), ScaledHost::sparse(g, c), VertexWeights::ones(5, n));
    EXPECT_NEAR(fl.value, r.value_exact->to_double(), 1e-12 * std::max(1.0, fl.value));
  }
}

// Indicator weights restrict each pattern vertex to a set; the DP must agree
// with restricted enumeration on every connected pattern up to 4 vertices.
TEST(HomWeighted, IndicatorWeightsMatchRestrictedBrute) {
  std::mt19937_64 rng(99);
  std::vector<Graph> patterns;
  for (int k = 1; k <= 4; ++k)
    for (Graph& f : oracle::all_graphs(k, true)) patterns.push_back(std::move(f));
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> size(3, 9);
    Graph g = oracle::random_graph(size(rng), 0.4, rng);
    const int n = g.vertex_count();
    for (const Graph& f : patterns) {
      std::vector<std::vector<Vertex>> sets(f.vertex_count());
      for (auto& s : sets)
        for (int x = 0; x < n; ++x)
          if (rng() % 3) s.push_back(x);
      HomResult r = hom_weighted(f, ScaledHost::sparse(g, Rational(1, 2)), VertexWeights::indicators(n, sets),
                                 exact_mode());
      ASSERT_EQ(*r.raw_exact, Rational(hom_brute(f, g, &sets)));
    }
  }
}

TEST(HomWeighted, DenseHostMatchesWeightedOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const int n = 4;
    std::vector<Rational> h(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) h[x * n + y] = h[y * n + x] = Rational(static_cast<long>(rng() % 5), 4);
    Graph f = oracle::random_graph(4, 0.6, rng);
    std::vector<std::vector<Rational>> w(4, std::vector<Rational>(n));
    for (auto& row : w)
      for (auto& v : row) v = Rational(static_cast<long>(rng() % 4), 3);
    HomResult r = hom_weighted(f, ScaledHost::dense(WeightedHost::from_rationals(n, h)),
                               VertexWeights::from_rationals(n, w), exact_mode());
    Rational expect = oracle::weighted_hom(
        f, n, [&](int x, int y) { return h[x * n + y]; }, [&](int v, int x) { return w[v][x]; });
    EXPECT_EQ(*r.raw_exact, expect);
    EXPECT_EQ(*r.value_exact, Quadratic(expect / oracle::power(n, 4)));
  }
}

TEST(HomWeighted, ExactModeNeedsExactInputs) {
  WeightedHost h = WeightedHost::from_doubles(2, {0.5, 0.25, 0.25, 0.5});
  EXPECT_THROW(hom_weighted(graphs::path(1), ScaledHost::dense(h), VertexWeights::ones(2, 2), exact_mode()),
               InputError);
  EXPECT_NO_THROW(hom_weighted(graphs::path(1), ScaledHost::dense(h), VertexWeights::ones(2, 2)));
}

TEST(HomWeighted, TableBudgetRaisesResourceError) {
  HomOptions o;
  o.max_table_entries = 4;
  EXPECT_THROW(hom_weighted(graphs::cycle(5), ScaledHost::sparse(build_polarity(5).loopless),
                            VertexWeights::ones(5, 25), o),
               ResourceError);
}

// The gap t^α(F,g) − t^α(F,h) is affine in each single weight α_v(x), so
// rounding one coordinate to the better endpoint never increases it.
TEST(HomWeighted, GreedyRoundingNeverIncreasesGap) {
  std::mt19937_64 rng(77);
  const int n = 4;
  for (int t = 0; t < 8; ++t) {
    Graph g = oracle::random_graph(n, 0.5, rng);
    Graph f = oracle::random_graph(3, 0.7, rng);
    std::vector<Rational> h(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) h[x * n + y] = h[y * n + x] = Rational(static_cast<long>(rng() % 5), 4);
    ScaledHost sg = ScaledHost::sparse(g, Rational(1, 2));
    ScaledHost sh = ScaledHost::dense(WeightedHost::from_rationals(n, h));
    std::vector<std::vector<Rational>> w(3, std::vector<Rational>(n));
    for (auto& row : w)
      for (auto& v : row) v = Rational(static_cast<long>(1 + rng() % 5), 7);
    auto gap = [&](const std::vector<std::vector<Rational>>& a) {
      VertexWeights vw = VertexWeights::from_rationals(n, a);
      return *hom_weighted(f, sg, vw, exact_mode()).value_exact - *hom_weighted(f, sh, vw, exact_mode()).value_exact;
    };
    Quadratic current = gap(w);
    for (int v = 0; v < 3; ++v)
      for (int x = 0; x < n; ++x) {
        auto lo = w, hi = w;
        lo[v][x] = 0;
        hi[v][x] = 1;
        Quadratic g0 = gap(lo), g1 = gap(hi);
        // Affine: the current value lies between the endpoint values.
        Rational s = w[v][x];
        EXPECT_EQ(current, g0.scaled(1 - s) + g1.scaled(s));
        w = g0 <= g1 ? lo : hi;
        Quadratic next = g0 <= g1 ? g0 : g1;
        ASSERT_TRUE(next <= current);
        current = next;
      }
  }
}

TEST(Profile, TwoPathEndpointsIsScaledCodegree) {
  Graph g = build_polarity(3).loopless;
  const Rational c(1, 2);
  std::vector<Vertex> s{0, 2};
  Profile p = partial_profile(graphs::path(2), s, ScaledHost::sparse(g, c), VertexWeights::ones(3, 9), exact_mode());
  ASSERT_EQ(p.size(), 81u);
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) {
      int codeg = 0;
      for (int z = 0; z < 9; ++z) codeg += g.has_edge(x, z) && g.has_edge(y, z);
      // c²n·codeg/n with n = 9.
      EXPECT_EQ(p.exact_at(x * 9 + y), Quadratic(c * c * codeg));
    }
}

TEST(Profile, EmptySupportIsDensity) {
  Graph g = build_polarity(5).loopless;
  ScaledHost h = ScaledHost::sparse(g);
  Profile p = partial_profile(graphs::cycle(5), {}, h, VertexWeights::ones(5, 25), exact_mode());
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.exact_at(0), *hom_weighted(graphs::cycle(5), h, VertexWeights::ones(5, 25), exact_mode()).value_exact);
}

TEST(Profile, EdgeRootedAtOneEndIsScaledDegree) {
  Graph g = build_polarity(5).loopless;
  const Rational c(1, 2);
  std::vector<Vertex> s{0};
  Profile p = partial_profile(graphs::path(1), s, ScaledHost::sparse(g, c), VertexWeights::ones(2, 25), exact_mode());
  for (int x = 0; x < 25; ++x) EXPECT_EQ(p.exact_at(x), Quadratic(c * g.degree(x) / 5));
}

TEST(Profile, RejectsLargeSupport) {
  std::vector<Vertex> s{0, 1, 2, 3};
  EXPECT_THROW(partial_profile(graphs::cycle(5), s, ScaledHost::sparse(graphs::cycle(6)), VertexWeights::ones(5, 6)),
               InputError);
}

TEST(Truncation, Examples) {
  Profile p({0}, 2, {0.5, 3.0});
  Profile t = truncate_profile(p, Rational(1));
  EXPECT_EQ(t.at(0), 0.5);
  EXPECT_EQ(t.at(1), 0.0);
  Profile same = truncate_profile(p, std::nullopt);
  EXPECT_EQ(same.at(1), 3.0);
  Profile zero = truncate_profile(p, Rational(1, 4));
  EXPECT_EQ(zero.at(0), 0.0);
  EXPECT_EQ(zero.at(1), 0.0);
  Profile above = truncate_profile_above(p, Rational(1));
  EXPECT_EQ(above.at(0), 0.0);
  EXPECT_EQ(above.at(1), 3.0);
}

// Markov: ∫ p_{>t} <= (1/t) ∫ p², and truncation only lowers values.
TEST(Truncation, MarkovAndMonotone) {
  Graph g = build_polarity(5).loopless;
  RootedPattern j = graphs::c5pair_connector();
  for (const Rational& c : {Rational(1, 2), Rational(1, 4)}) {
    Profile p = partial_profile(j.pattern, j.ends, ScaledHost::sparse(g, c),
                                VertexWeights::ones(j.pattern.vertex_count(), 25), exact_mode());
    for (const Rational& t : {Rational(1, 10), Rational(1), Rational(3), Rational(20)}) {
      Profile lo = truncate_profile(p, t);
      Profile hi = truncate_profile_above(p, t);
      for (std::size_t i = 0; i < p.size(); ++i) {
        ASSERT_TRUE(lo.exact_at(i) <= p.exact_at(i));
        ASSERT_EQ(lo.exact_at(i) + hi.exact_at(i), p.exact_at(i));
      }
      EXPECT_TRUE(hi.exact_integral().scaled(t) <= p.exact_integral_of_square());
    }
  }
}

// ∫ g_{J,I}² = t(J ∨_I J, g), the second side from brute-force counting.
TEST(Gluing, IdentityAgainstBruteAtQ3) {
  Graph g = build_polarity(3).loopless;
  const Rational c(1, 2);
  for (const RootedPattern& j : {RootedPattern{graphs::path(2), {0, 2}}, graphs::c5pair_connector()}) {
    const int k = j.pattern.vertex_count();
    Profile p = partial_profile(j.pattern, j.ends, ScaledHost::sparse(g, c), VertexWeights::ones(k, 9), exact_mode());
    Graph glued = glue(j);
    Rational brute = oracle::plain_hom(glued, g);
    EXPECT_EQ(p.exact_integral_of_square(),
              scaled_sparse_density(brute, c, 9, glued.vertex_count(), glued.edge_count()));
  }
}

TEST(HomCount, MatchesBrute) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_graph(8, 0.4, rng);
    Graph f = oracle::random_graph(5, 0.5, rng);
    EXPECT_EQ(hom_count(f, g), BigInt(hom_brute(f, g)));
  }
  Graph p = build_polarity(7).loopless;
  EXPECT_EQ(hom_count(graphs::cycle(4), p), BigInt(hom_brute(graphs::cycle(4), p)));
}

TEST(HomCount, SubdividedCliqueMatchesGeneralCount) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    Graph g = oracle::random_graph(7, 0.45, rng);
    for (int k = 2; k <= 4; ++k) {
      EXPECT_EQ(hom_subdivided_clique(k, g), hom_count(graphs::subdivision(graphs::complete(k)), g)) << k;
    }
  }
  Graph p = build_polarity(3).loopless;
  EXPECT_EQ(hom_subdivided_clique(5, p), hom_count(graphs::subdivision(graphs::complete(5)), p));
  // Direct summation of Π M(x_i, x_j) over V^5 with M = A², done outside
  // this code base.
  Graph p5 = build_polarity(5).loopless;
  EXPECT_EQ(hom_subdivided_clique(5, p5), BigInt("705349440"));
}

}  // namespace
}  // namespace c4count
