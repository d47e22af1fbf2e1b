#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "c4count/exact.hpp"
#include "c4count/graph.hpp"

namespace c4count {

/// Symmetric n×n matrix with entries in [0,1]: the dense approximation h.
///
/// Float values are always present. Exact rational values are present when
/// the host was built from rationals, and are required for exact counting.
class WeightedHost {
 public:
  WeightedHost() = default;

  static WeightedHost constant(int n, const Rational& value);
  /// Row-major n×n values; throws InputError if asymmetric or out of [0,1].
  static WeightedHost from_doubles(int n, std::vector<double> values);
  static WeightedHost from_rationals(int n, std::vector<Rational> values);

  int size() const { return n_; }
  double at(int x, int y) const { return values_[static_cast<std::size_t>(x) * n_ + y]; }
  std::span<const double> values() const { return values_; }
  bool has_exact() const { return exact_.has_value(); }
  std::span<const Rational> exact_values() const;

 private:
  int n_ = 0;
  std::vector<double> values_;
  std::optional<std::vector<Rational>> exact_;
};

/// Per-pattern-vertex weight functions α_v : V(host) → [0,1].
class VertexWeights {
 public:
  VertexWeights() = default;

  static VertexWeights ones(int pattern_vertices, int host_size);
  /// Indicator of A_v for each pattern vertex.
  static VertexWeights indicators(int host_size, const std::vector<std::vector<Vertex>>& sets);
  static VertexWeights from_doubles(int host_size, std::vector<std::vector<double>> values);
  static VertexWeights from_rationals(int host_size, std::vector<std::vector<Rational>> values);

  int pattern_vertices() const { return static_cast<int>(values_.size()); }
  int host_size() const { return n_; }
  std::span<const double> of(Vertex v) const { return values_[v]; }
  bool has_exact() const { return exact_.has_value(); }
  std::span<const Rational> exact_of(Vertex v) const;

  /// Copy with α_v replaced (exactness kept only if `exact` is given and the
  /// rest is exact).
  VertexWeights with(Vertex v, std::vector<double> values,
                     std::optional<std::vector<Rational>> exact = std::nullopt) const;

 private:
  int n_ = 0;
  std::vector<std::vector<double>> values_;
  std::optional<std::vector<std::vector<Rational>>> exact_;
};

/// g = c·√n·G over a sparse graph.
struct SparseHost {
  Graph graph;
  Rational c;
};

/// Either g = c√n·G or a dense weighted host h.
class ScaledHost {
 public:
  /// c must lie in (0, 1]. The counting lemma setup uses c <= 1/2, which
  /// with max degree <= 2√n gives ∫ g(x,y) dy <= 1; c = 1 is the unscaled
  /// normalization hom/n^{|V|-|E|/2}.
  static ScaledHost sparse(Graph g, Rational c = Rational(1, 2));
  static ScaledHost dense(WeightedHost h);

  int size() const;
  bool is_sparse() const { return std::holds_alternative<SparseHost>(kind_); }
  const SparseHost& sparse_host() const { return std::get<SparseHost>(kind_); }
  const WeightedHost& dense_host() const { return std::get<WeightedHost>(kind_); }

  /// Sparse hosts: max degree <= 2√n and c <= 1/2 (so ∫ g(x,·) <= 1).
  bool satisfies_row_bound() const;

 private:
  std::variant<SparseHost, WeightedHost> kind_;
};

}  // namespace c4count
