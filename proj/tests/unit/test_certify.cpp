#include <gtest/gtest.h>
#include <fstream>
#include <sstream>

#include <functional>
#include <random>

#include "c4count/certify.hpp"
#include "c4count/corpus.hpp"
#include "c4count/errors.hpp"
#include "c4count/homcount.hpp"
#include "c4count/polarity.hpp"
#include "c4count/structure.hpp"
#include "../support/oracles.hpp"

namespace c4count {
namespace {

Graph k4_subdivision() { return graphs::subdivision(graphs::complete(4)); }

TEST(TameCert, FiveCycleFromPendantsAndOnePath) {
  TameCertificate c;
  c.base_vertices = 1;
  c.steps = {{TameStep::Rule::kPendant, 0, 0}, {TameStep::Rule::kPendant, 1, 1}, {TameStep::Rule::kThreePath, 2, 0}};
  EXPECT_TRUE(oracle::isomorphic(replay(c), graphs::cycle(5)));
  EXPECT_TRUE(verify_tame_cert(graphs::cycle(5), c));
  TameCertificate empty;
  empty.base_vertices = 5;
  CheckResult r = verify_tame_cert(graphs::cycle(5), empty);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.condition.empty());
}

TEST(TameCert, MalformedStepsThrow) {
  TameCertificate c;
  c.base_vertices = 2;
  c.steps = {{TameStep::Rule::kPendant, 5, 5}};
  EXPECT_THROW(replay(c), InputError);
  TameCertificate axiom;
  axiom.base = TameCertificate::Base::kAxiom;
  axiom.axiom = "nope";
  EXPECT_THROW(replay(axiom), InputError);
}

TEST(TameCert, VertexMapMustBeAnIsomorphism) {
  TameCertificate c;
  c.base_vertices = 1;
  c.steps = {{TameStep::Rule::kPendant, 0, 0}, {TameStep::Rule::kPendant, 1, 1}};
  c.vertex_map = {0, 1, 2};
  EXPECT_TRUE(verify_tame_cert(graphs::path(2), c));
  c.vertex_map = {1, 0, 2};
  EXPECT_FALSE(verify_tame_cert(graphs::path(2), c));
}

TEST(TameSearch, CyclesAreTame) {
  for (int l = 3; l <= 12; ++l) {
    TameSearchResult r = search_tame(graphs::cycle(l));
    ASSERT_TRUE(r.certificate) << l;
    EXPECT_TRUE(verify_tame_cert(graphs::cycle(l), *r.certificate));
  }
}

TEST(TameSearch, K23HasNoDerivation) {
  TameSearchResult r = search_tame(graphs::complete_bipartite(2, 3));
  EXPECT_FALSE(r.certificate);
  EXPECT_FALSE(r.budget_exhausted);
}

TEST(TameSearch, SubdividedK4NeedsTheAxiom) {
  TameSearchResult with = search_tame(k4_subdivision());
  ASSERT_TRUE(with.certificate);
  EXPECT_EQ(with.certificate->base, TameCertificate::Base::kAxiom);
  EXPECT_TRUE(verify_tame_cert(k4_subdivision(), *with.certificate));
  EXPECT_FALSE(verify_tame_cert(k4_subdivision(), *with.certificate, false));
  SearchOptions o;
  o.allow_axioms = false;
  EXPECT_FALSE(search_tame(k4_subdivision(), o).certificate);
}

TEST(TameSearch, TameSequence) {
  for (int s = 0; s <= 4; ++s) {
    Graph g = graphs::tame_sequence(s);
    TameSearchResult r = search_tame(g);
    ASSERT_TRUE(r.certificate) << s;
    EXPECT_TRUE(verify_tame_cert(g, *r.certificate));
  }
}

TEST(TameSearch, PendantClosure) {
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(8, 0.3, rng);
    if (!search_tame(g).certificate) continue;
    for (Vertex v = 0; v < 8; v += 3) {
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      edges.emplace_back(v, 8);
      Graph h(9, edges);
      auto r = search_tame(h);
      ASSERT_TRUE(r.certificate);
      ASSERT_TRUE(verify_tame_cert(h, *r.certificate));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(TameSearch, BudgetIsReported) {
  SearchOptions o;
  o.budget = 2;
  TameSearchResult r = search_tame(graphs::tame_sequence(4), o);
  EXPECT_FALSE(r.certificate);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_LE(r.nodes, 2u);
}

TEST(CountableSearch, Cycles) {
  for (int l = 5; l <= 12; ++l) {
    Verdict v = search_countable(graphs::cycle(l));
    ASSERT_EQ(v.status, VerdictStatus::kCertified) << l;
    EXPECT_TRUE(verify_countable_cert(graphs::cycle(l), *v.certificate));
  }
  for (int l : {3, 4}) {
    Verdict v = search_countable(graphs::cycle(l));
    EXPECT_EQ(v.status, VerdictStatus::kRefutedGirth);
    EXPECT_EQ(static_cast<int>(v.witness.size()), l);
  }
}

TEST(CountableSearch, FiveCycleCertificateShape) {
  Verdict v = search_countable(graphs::cycle(5));
  ASSERT_TRUE(v.certificate);
  const CountableCertificate& c = *v.certificate;
  ASSERT_EQ(c.rule, CountableCertificate::Rule::kIslandsBridges);
  EXPECT_GE(c.islands.size(), 2u);
  EXPECT_GE(c.connectors.size(), 1u);
}

TEST(CountableSearch, TreesByPeeling) {
  for (const Graph& t : graphs::all_trees(10)) {
    Verdict v = search_countable(t);
    ASSERT_EQ(v.status, VerdictStatus::kCertified);
    ASSERT_TRUE(verify_countable_cert(t, *v.certificate));
  }
}

TEST(CountableSearch, GirthRefutationMatchesGirth) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(9, 0.3, rng);
    Verdict v = search_countable(g);
    auto gi = oracle::girth(g);
    EXPECT_EQ(v.status == VerdictStatus::kRefutedGirth, gi && *gi <= 4);
  }
}

TEST(CountableSearch, OpenCasesStayUnknown) {
  Verdict v = search_countable(graphs::petersen());
  EXPECT_EQ(v.status, VerdictStatus::kUnknown);
  EXPECT_TRUE(v.screen.pass);
}

TEST(CountableSearch, ScreenFlagIsReportedNotEnforced) {
  Verdict v = search_countable(graphs::complete(4));
  EXPECT_EQ(v.status, VerdictStatus::kRefutedGirth);
  EXPECT_FALSE(v.screen.pass);
}

// Every certificate the search returns passes independent verification, also
// after a JSON round trip.
TEST(Soundness, RandomGraphs) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> size(2, 10);
  int countable = 0, tame = 0;
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(size(rng), 0.3, rng);
    Verdict v = search_countable(g);
    if (v.certificate) {
      ++countable;
      ASSERT_TRUE(verify_countable_cert(g, *v.certificate));
      CertificateDocument doc = parse_certificate(certificate_json(g, *v.certificate));
      ASSERT_EQ(doc.target, g);
      ASSERT_TRUE(verify_countable_cert(g, *doc.countable));
    }
    TameSearchResult r = search_tame(g);
    if (r.certificate) {
      ++tame;
      ASSERT_TRUE(verify_tame_cert(g, *r.certificate));
      CertificateDocument doc = parse_certificate(certificate_json(g, *r.certificate));
      ASSERT_TRUE(verify_tame_cert(g, *doc.tame));
    }
  }
  EXPECT_GT(countable, 50);
  EXPECT_GT(tame, 50);
}

TEST(Soundness, CertificateForWrongGraphIsRejected) {
  Verdict v = search_countable(graphs::cycle(6));
  ASSERT_TRUE(v.certificate);
  EXPECT_FALSE(verify_countable_cert(graphs::cycle(7), *v.certificate));
  EXPECT_FALSE(verify_countable_cert(graphs::path(5), *v.certificate));
}

// Visits every islands-and-bridges node of a certificate tree.
void for_each_ib(CountableCertificate& c, const std::function<void(CountableCertificate&)>& fn) {
  if (c.rule == CountableCertificate::Rule::kPendant && c.parent) for_each_ib(**c.parent, fn);
  if (c.rule != CountableCertificate::Rule::kIslandsBridges) return;
  fn(c);
  for (Island& is : c.islands) for_each_ib(*is.countable, fn);
  for (ConnectorPart& cp : c.connectors) for_each_ib(*cp.countable, fn);
}

using Mutation = std::function<bool(CountableCertificate&)>;

// Each mutation returns false when it does not apply to the node.
const std::vector<std::pair<std::string, Mutation>>& mutations() {
  static const std::vector<std::pair<std::string, Mutation>> m = {
      {"islands_share_vertex",
       [](CountableCertificate& c) {
         if (c.islands.size() < 2) return false;
         c.islands[1].part.vertices.push_back(c.islands[0].part.vertices[0]);
         return true;
       }},
      {"dependent_ends",
       [](CountableCertificate& c) {
         for (ConnectorPart& cp : c.connectors) {
           Graph local = cp.part.local();
           for (Vertex e : cp.ends)
             for (Vertex w : local.neighbors(e)) {
               if (std::find(cp.ends.begin(), cp.ends.end(), w) != cp.ends.end()) continue;
               cp.ends.push_back(w);
               std::sort(cp.ends.begin(), cp.ends.end());
               return true;
             }
         }
         return false;
       }},
      {"overlapping_connectors",
       [](CountableCertificate& c) {
         if (c.connectors.empty()) return false;
         c.connectors.push_back(c.connectors.front());
         return true;
       }},
      {"missing_tame_certificate",
       [](CountableCertificate& c) {
         if (c.islands.size() < 2 || !c.islands[0].tame) return false;
         c.islands[0].tame.reset();
         return true;
       }},
  };
  return m;
}

TEST(Mutations, RejectedOnEveryCorpusCertificate) {
  const std::filesystem::path dir = C4COUNT_CORPUS_DIR;
  int applied = 0;
  std::vector<int> per_class(mutations().size(), 0);
  for (const CorpusEntry& e : load_corpus(dir)) {
    if (e.certificate.empty() || e.check != CorpusCheck::kCountable) continue;
    std::ifstream in(dir / e.certificate);
    std::stringstream ss;
    ss << in.rdbuf();
    CertificateDocument doc = parse_certificate(ss.str());
    ASSERT_TRUE(doc.countable);
    ASSERT_TRUE(verify_countable_cert(e.graph, *doc.countable)) << e.name;
    for (std::size_t k = 0; k < mutations().size(); ++k) {
      // Mutate one node at a time.
      int nodes = 0;
      for_each_ib(*doc.countable, [&](CountableCertificate&) { ++nodes; });
      for (int target = 0; target < nodes; ++target) {
        CountableCertificate copy = *doc.countable;
        int index = 0;
        bool done = false;
        for_each_ib(copy, [&](CountableCertificate& node) {
          if (index++ == target) done = mutations()[k].second(node);
        });
        if (!done) continue;
        ++applied;
        ++per_class[k];
        CheckResult r = verify_countable_cert(e.graph, copy);
        EXPECT_FALSE(r) << e.name << " " << mutations()[k].first << " node " << target;
      }
    }
  }
  EXPECT_GT(applied, 0);
  for (std::size_t k = 0; k < per_class.size(); ++k) EXPECT_GT(per_class[k], 0) << mutations()[k].first;
}

TEST(Mutations, ConnectorsSharingTwoVerticesNameConditionD) {
  Verdict v = search_countable(graphs::cycle(5));
  ASSERT_TRUE(v.certificate);
  CountableCertificate c = *v.certificate;
  ASSERT_FALSE(c.connectors.empty());
  c.connectors.push_back(c.connectors.front());
  CheckResult r = verify_countable_cert(graphs::cycle(5), c);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.condition.empty());
}

TEST(Memo, ResultsIndependentOfMemoization) {
  SearchOptions off;
  off.memo = false;
  SearchOptions capped;
  capped.memo_cap = 8;
  for (const CorpusEntry& e : builtin_corpus()) {
    if (e.graph.vertex_count() > 14) continue;
    if (e.check == CorpusCheck::kCountable) {
      auto a = search_countable(e.graph).status;
      EXPECT_EQ(search_countable(e.graph, off).status, a) << e.name;
      EXPECT_EQ(search_countable(e.graph, capped).status, a) << e.name;
    } else {
      SearchOptions o;
      o.allow_axioms = e.check == CorpusCheck::kTame;
      SearchOptions o_off = off;
      o_off.allow_axioms = o.allow_axioms;
      EXPECT_EQ(search_tame(e.graph, o).certificate.has_value(),
                search_tame(e.graph, o_off).certificate.has_value())
          << e.name;
    }
  }
}

// t(H, c√n·G) <= 1 by direct counting: hom² c^{2E} n^E <= n^{2V}.
bool density_at_most_one(const Graph& h, const Graph& g, const Rational& c) {
  Rational hom = oracle::plain_hom(h, g);
  const long n = g.vertex_count();
  Rational lhs = hom * hom * oracle::power(n, h.edge_count());
  for (int i = 0; i < 2 * h.edge_count(); ++i) lhs *= c;
  return lhs <= oracle::power(n, 2 * h.vertex_count());
}

TEST(ScaleConstant, EdgelessCertificate) {
  Verdict v = search_countable(Graph(3));
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(compute_scale_constant(*v.certificate, build_polarity(3).loopless).c, Rational(1, 2));
}

TEST(ScaleConstant, FiveCycleOnPolarityIsTight) {
  Graph g = build_polarity(3).loopless;
  Verdict v = search_countable(graphs::cycle(5));
  ASSERT_TRUE(v.certificate);
  ScaleConstant s = compute_scale_constant(*v.certificate, g);
  EXPECT_EQ(s.c, Rational(1, 1L << s.halvings));
  ASSERT_FALSE(s.constrained.empty());
  for (const Graph& h : s.constrained) EXPECT_TRUE(density_at_most_one(h, g, s.c));
  if (s.halvings > 1) {
    bool some_fails = false;
    for (const Graph& h : s.constrained) some_fails |= !density_at_most_one(h, g, s.c * 2);
    EXPECT_TRUE(some_fails);
  }
}

TEST(ScaleConstant, NonIncreasingAsHostGetsDenser) {
  std::mt19937_64 rng(13);
  Verdict v = search_countable(graphs::cycle(5));
  ASSERT_TRUE(v.certificate);
  Graph g = oracle::random_graph(9, 0.2, rng);
  Rational prev = compute_scale_constant(*v.certificate, g).c;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b) {
      if (g.has_edge(a, b) || rng() % 3) continue;
      edges.emplace_back(a, b);
      Rational c = compute_scale_constant(*v.certificate, Graph(9, edges)).c;
      EXPECT_LE(c, prev);
      prev = c;
    }
}

TEST(Refute, SlopesOnSmallRange) {
  const std::vector<int> qs = {5, 7, 11, 13};
  TameGrowthReport k23 = refute_tame_empirical(graphs::complete_bipartite(2, 3), qs);
  EXPECT_TRUE(k23.not_tame);
  EXPECT_GT(k23.slope, 0.3);
  TameGrowthReport c5 = refute_tame_empirical(graphs::cycle(5), qs);
  EXPECT_FALSE(c5.not_tame);
  EXPECT_LT(std::abs(c5.slope), 0.15);
  // Row values against brute-force counting at q = 5.
  Graph g = build_polarity(5).loopless;
  EXPECT_EQ(k23.rows[0].hom, BigInt(hom_brute(graphs::complete_bipartite(2, 3), g)));
}

TEST(VerdictStatus, StringRoundTrip) {
  for (auto s : {VerdictStatus::kCertified, VerdictStatus::kRefutedGirth, VerdictStatus::kUnknown})
    EXPECT_EQ(verdict_status_from_string(to_string(s)), s);
  EXPECT_EQ(to_string(VerdictStatus::kRefutedGirth), "refuted_girth");
}

}  // namespace
}  // namespace c4count
