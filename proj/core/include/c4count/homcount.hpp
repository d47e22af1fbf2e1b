#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "c4count/exact.hpp"
#include "c4count/graph.hpp"
#include "c4count/host.hpp"

namespace c4count {

/// Plain homomorphism count by full enumeration of V(G)^V(F). When `sets` is
/// given, vertex v of F must map into sets[v]. Throws ResourceError if
/// |V(G)|^|V(F)| exceeds 10^9.
std::uint64_t hom_brute(const Graph& f, const Graph& g,
                        const std::vector<std::vector<Vertex>>* sets = nullptr);

struct EliminationOrder {
  std::vector<Vertex> order;
  /// Largest |Q| over the eliminations, where Q is the set of not yet
  /// eliminated vertices joined to the eliminated one in the elimination
  /// graph. A DP step touches n^(|Q|+1) host tuples.
  int width = 0;
  bool exact = false;
};

inline constexpr int kExactOrderLimit = 12;

/// Exact minimum width for up to kExactOrderLimit eliminated vertices,
/// min-fill greedy otherwise.
EliminationOrder elimination_order(const Graph& f);
/// Order that eliminates every vertex except `keep`.
EliminationOrder elimination_order(const Graph& f, std::span<const Vertex> keep);

enum class HomMode { kExact, kFloat };

struct HomOptions {
  HomMode mode = HomMode::kFloat;
  /// Largest DP table allowed, in entries; 0 picks a per-mode default
  /// (2^25 for doubles, 2^21 for rationals).
  std::size_t max_table_entries = 0;
};

/// t^α(F, host) with its normalization.
///
/// raw is Σ over x ∈ V^V(F) of Π_edges host(x_u, x_v) Π_v α_v(x_v), where a
/// sparse host contributes its 0/1 adjacency. The density is
///   sparse: raw · (c√n)^|E| / n^|V|,   dense: raw / n^|V|.
struct HomResult {
  HomMode mode = HomMode::kFloat;
  int pattern_vertices = 0;
  int pattern_edges = 0;
  int host_size = 0;
  bool sparse_host = false;
  Rational c{1};

  std::optional<Rational> raw_exact;
  double raw = 0.0;
  std::optional<Quadratic> value_exact;
  double value = 0.0;

  /// e.g. "raw * (c*sqrt(n))^5 / n^5".
  std::string normalization() const;
};

/// Throws ResourceError when a DP table would exceed the budget, and
/// InputError when exact mode is requested for a host or weights without
/// exact values.
HomResult hom_weighted(const Graph& f, const ScaledHost& host, const VertexWeights& alpha,
                       const HomOptions& options = {});

/// g^α_{F,S} on V^S. Index of x_S is ((x_{S0}·n + x_{S1})·n + x_{S2}) for
/// S sorted increasingly. Weights of the vertices in S are ignored.
class Profile {
 public:
  Profile() = default;
  Profile(std::vector<Vertex> s, int n, std::vector<double> values,
          std::optional<std::vector<Rational>> raw_exact = std::nullopt,
          std::optional<Quadratic> scale = std::nullopt);

  const std::vector<Vertex>& support() const { return s_; }
  int host_size() const { return n_; }
  std::size_t size() const { return values_.size(); }
  bool is_exact() const { return raw_exact_.has_value(); }

  double at(std::size_t index) const { return values_[index]; }
  std::span<const double> values() const { return values_; }
  /// Exact value: scale · raw.
  Quadratic exact_at(std::size_t index) const;
  std::span<const Rational> raw_exact() const { return *raw_exact_; }
  const Quadratic& scale() const { return *scale_; }

  /// ∫ p(x_S) dx_S and ∫ p(x_S)^2 dx_S.
  double integral() const;
  double integral_of_square() const;
  Quadratic exact_integral() const;
  Quadratic exact_integral_of_square() const;

 private:
  std::vector<Vertex> s_;
  int n_ = 0;
  std::vector<double> values_;
  std::optional<std::vector<Rational>> raw_exact_;
  std::optional<Quadratic> scale_;
};

/// Throws InputError for |S| > 3 or S out of range.
Profile partial_profile(const Graph& f, std::span<const Vertex> s, const ScaledHost& host,
                        const VertexWeights& alpha, const HomOptions& options = {});

/// f_{<=t}: entries above t set to zero. nullopt threshold means +∞.
Profile truncate_profile(const Profile& p, std::optional<Rational> t);
/// f_{>t}: entries at most t set to zero.
Profile truncate_profile_above(const Profile& p, std::optional<Rational> t);

/// hom(F, G) as an exact integer via the elimination DP with 128-bit
/// accumulators. Throws ResourceError if the a-priori magnitude bound could
/// overflow or a table exceeds the budget.
BigInt hom_count(const Graph& f, const Graph& g, std::size_t max_table_entries = 0);

/// hom(K'_k, G) for the 1-subdivision K'_k of K_k, 2 <= k <= 6, as
/// Σ_{x ∈ V^k} Π_{i<j} M(x_i, x_j) with M = A², evaluated through an
/// expansion of M around the all-ones matrix (or around zero when M is
/// sparse), so that only homomorphism counts of graphs on <= k vertices into
/// a sparse integer matrix remain.
BigInt hom_subdivided_clique(int k, const Graph& g);

}  // namespace c4count
