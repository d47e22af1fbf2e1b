#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4count/certificate.hpp"
#include "c4count/exact.hpp"
#include "c4count/graph.hpp"
#include "c4count/structure.hpp"

namespace c4count {

/// Outcome of a certificate check; `condition` names the violated rule.
struct CheckResult {
  bool ok = true;
  std::string condition;
  std::string detail;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string condition, std::string detail = {}) {
    return {false, std::move(condition), std::move(detail)};
  }
};

/// Replays the certificate and compares with F: through vertex_map when one
/// is given (it must be an isomorphism onto F), up to isomorphism otherwise.
/// Axiom bases are rejected when allow_axioms is false.
CheckResult verify_tame_cert(const Graph& f, const TameCertificate& cert, bool allow_axioms = true);

/// Checks the decomposition invariants of every islands-and-bridges node:
/// edge-disjoint cover of F, (a) vertex-disjoint countable islands,
/// (b) tame certificates on all islands but the last, (c) connector ends
/// equal to the connector's meet with the islands, independent, meeting each
/// island at most once, with a countable connector and a tame gluing, and
/// (d) connectors pairwise sharing at most one vertex, lying in both end sets.
CheckResult verify_countable_cert(const Graph& f, const CountableCertificate& cert,
                                  bool allow_axioms = true);

struct SearchOptions {
  /// Explored search nodes (reverse-rule applications and candidate island
  /// sets) shared across the whole search, including sub-searches.
  std::uint64_t budget = 1'000'000;
  bool allow_axioms = true;
  bool memo = true;
  /// Largest number of entries per memo table; 0 means unbounded. Lookups
  /// continue once full, new results are no longer stored.
  std::size_t memo_cap = 0;
};

struct TameSearchResult {
  std::optional<TameCertificate> certificate;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Backtracking over the reverse rules (delete a leaf; delete two adjacent
/// degree-2 vertices that form the interior of a 3-edge path or triangle),
/// memoized by canonical form. A returned certificate has been replayed and
/// verified. Throws ResourceError above kCanonicalMaxVertices vertices.
TameSearchResult search_tame(const Graph& f, const SearchOptions& options = {});

enum class VerdictStatus { kCertified, kRefutedGirth, kUnknown };
std::string to_string(VerdictStatus s);
VerdictStatus verdict_status_from_string(const std::string& s);

struct Verdict {
  VerdictStatus status = VerdictStatus::kUnknown;
  std::optional<CountableCertificate> certificate;
  /// Shortest cycle (length <= 4) when refuted.
  std::vector<Vertex> witness;
  /// 2-density screen; a conjectural necessary condition only.
  DensityScreen screen;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Girth check (girth <= 4 refutes), 2-density screen (flag only), leaf
/// peeling, then islands-and-bridges search.
Verdict search_countable(const Graph& f, const SearchOptions& options = {});

struct TameGrowthRow {
  int q = 0;
  int n = 0;
  BigInt hom;
  /// log(hom / n^(|V|-|E|/2)).
  double log_ratio = 0.0;
};

struct TameGrowthReport {
  std::vector<TameGrowthRow> rows;
  double slope = 0.0;
  double intercept = 0.0;
  double threshold = 0.2;
  bool not_tame = false;  // slope > threshold: "empirically not tame"
  std::string method;     // "subdivided_clique" or "elimination"
};

/// Fits log r(q) against log n over loopless polarity graphs, with
/// r = hom(F, G) / n^(|V(F)| - |E(F)|/2).
TameGrowthReport refute_tame_empirical(const Graph& f, const std::vector<int>& q_list,
                                       double threshold = 0.2);

struct ScaleConstant {
  Rational c{1, 2};
  int halvings = 1;  // c = 2^-halvings
  /// Graphs whose density bounded c: tame islands and glued connectors.
  std::vector<Graph> constrained;
};

/// Largest c = 2^-m <= 1/2 with t(H, c√n·G) <= 1 for every tame island and
/// every glued connector H in the certificate tree, by exact comparison of
/// hom(H, G)² with 2^(2m|E(H)|) n^(2|V(H)|-|E(H)|).
ScaleConstant compute_scale_constant(const CountableCertificate& cert, const Graph& g);

}  // namespace c4count
