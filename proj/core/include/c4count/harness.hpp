#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4count/exact.hpp"
#include "c4count/graph.hpp"
#include "c4count/host.hpp"

namespace c4count {

/// Eigenvalues of the adjacency matrix (a loop is a diagonal 1), ascending.
/// Throws ResourceError above 10^4 vertices.
std::vector<double> adjacency_spectrum(const Graph& g);

struct SpectralDiscrepancy {
  int n = 0;
  double mean_degree = 0.0;
  /// Spectral norm of A - (d̄/n)J.
  double lambda = 0.0;
  /// λ̂/√n, an upper bound on the discrepancy against the constant host h̄.
  double delta_up = 0.0;
  double h_bar = 0.0;
};

/// d̄ = 2|E|/n, h̄ = min(1, d̄/√n). Since |e_G(A,B) - (d̄/n)|A||B|| <= λ̂n,
/// the discrepancy against the all-h̄ host is at most λ̂/√n whenever h̄ = d̄/√n.
SpectralDiscrepancy discrepancy_spectral(const Graph& g);

/// Constant host min(1, d̄/√n), with exact entries (the value is rational
/// when n is a perfect square; otherwise the double value's exact expansion).
WeightedHost constant_host(const Graph& g);

struct DiscrepancyWitness {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::int64_t e_g = 0;  // ordered pairs (x, y) ∈ A×B with xy ∈ E(G)
  double e_h = 0.0;      // Σ_{A×B} H
  /// |e_G/n^{3/2} - e_H/n^2| at the witness.
  double gap = 0.0;
};

struct DiscrepancySearch {
  DiscrepancyWitness best;
  int iters = 0;
  std::uint64_t seed = 0;
};

/// Alternating maximization of ±(√n·e_G(A,B) - e_H(A,B)): fix A and take
/// every b whose marginal has the right sign, swap roles, repeat until
/// stable. The start pair of each restart is random; iters = 0 evaluates the
/// seeded start pair only. The reported gap is evaluated at the witness.
DiscrepancySearch discrepancy_search(const Graph& g, const WeightedHost& h, int iters,
                                     std::uint64_t seed);

/// H(x,y) = min(1, √n·e_G(P(x),P(y)) / (|P(x)||P(y)|)); parts must cover V
/// disjointly and be nonempty.
WeightedHost partition_host(const Graph& g, const std::vector<std::vector<Vertex>>& parts);

enum class WeightFamily { kOnes, kDisjointIndicators, kUniform };
std::string to_string(WeightFamily f);

struct GapTrial {
  int index = 0;
  WeightFamily family = WeightFamily::kOnes;
  double t_sparse = 0.0;
  double t_dense = 0.0;
  double gap = 0.0;
};

struct GapReport {
  Graph pattern;
  int n = 0;
  Rational c{1};
  std::uint64_t seed = 0;
  std::vector<GapTrial> trials;
  double min_gap = 0.0;
  /// Minimum over the trials of each family, indexed by WeightFamily.
  std::vector<double> min_gap_by_family;
};

/// Trial i draws α from family i mod 3 using the stream split(i) of seed:
/// constant 1, indicators of a uniformly random partition of V into |V(F)|
/// sets, or i.i.d. uniform [0,1] values. Gaps are t^α(F, c√n·G) - t^α(F, H)
/// in float mode.
GapReport counting_experiment(const Graph& f, const Graph& g, const WeightedHost& h,
                              const Rational& c, int trials, std::uint64_t seed);

struct C4CounterexampleReport {
  int q = 0;
  int n = 0;
  bool host_c4_free = false;
  BigInt sparse_count;    // hom_A(C4, G)
  BigInt dense_count;     // hom_A(C4, all-1)
  Rational dense_density; // hom_A(C4, H) / n^4
  Rational expected;      // ⌊n/4⌋^4 / n^4
};

/// A_1..A_4 are the consecutive quarters of size ⌊n/4⌋ of the loopless
/// polarity graph, H is all-1.
C4CounterexampleReport c4_counterexample(int q);

struct TriangleCounterexampleReport {
  int q = 0;
  int n = 0;
  std::uint64_t seed = 0;
  int edges_before = 0;
  int edges_after = 0;
  BigInt triangle_homs;   // hom(C3, G')
  Rational dense_density; // t(C3, all-2/3)
  DiscrepancySearch discrepancy;
};

TriangleCounterexampleReport triangle_counterexample(int q, std::uint64_t seed,
                                                     int discrepancy_iters = 4);

struct TrimReport {
  Graph trimmed;
  std::vector<Vertex> removed;  // S̄ = {v : deg(v) > 2√n}
  int removed_edges = 0;
  int pairs_checked = 0;
  int pairs_failed = 0;
  /// n·δ at (S̄, V) against |S̄|: the bound |S̄| <= δn.
  bool size_bound_holds = false;
  double delta_at_complement = 0.0;
  bool all_hold() const { return pairs_failed == 0 && size_bound_holds; }
};

/// Keeps the edges with both ends in S = {v : deg(v) <= 2√n} and checks,
/// exactly in Q(√n), |√n·e_G'(A,B) - e_H(A,B)| <= |√n·e_G(A∩S,B∩S) -
/// e_H(A∩S,B∩S)| + (|A∖S| + |B∖S|)·n on `samples` random pairs plus (S̄, V).
TrimReport trim(const Graph& g, const WeightedHost& h, int samples = 1000,
                std::uint64_t seed = 0);

struct TruncationReport {
  Rational delta;
  Quadratic integral;            // ∫ g_{J,I}
  Quadratic integral_truncated;  // ∫ g_{J,I,<=1/δ}
  Quadratic tail;                // ∫ g_{J,I,>1/δ}
  Quadratic integral_of_square;  // ∫ g_{J,I}^2
  Quadratic glued_density;       // t(J ∨_I J, g)
  bool hypothesis_holds = false; // t(J ∨_I J, g) <= 1
  bool markov_holds = false;     // tail <= δ ∫ g^2
  bool bound_holds = false;      // tail <= δ, meaningful under the hypothesis
  bool gluing_holds = false;     // ∫ g^2 = t(J ∨_I J, g)
};

/// Exact profile of J with its ends pinned over the sparse host c√n·G.
/// Requires |I| <= 2.
TruncationReport truncation_check(const RootedPattern& j, const Graph& g, const Rational& delta,
                                  const Rational& c);

/// Versioned JSON renderings of the reports.
std::string to_json(const SpectralDiscrepancy& r);
std::string to_json(const DiscrepancySearch& r);
std::string to_json(const GapReport& r);
std::string to_json(const C4CounterexampleReport& r);
std::string to_json(const TriangleCounterexampleReport& r);
std::string to_json(const TrimReport& r);
std::string to_json(const TruncationReport& r);

}  // namespace c4count
