#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "c4count/graph.hpp"

namespace c4count {

inline constexpr int kCanonicalMaxVertices = 32;

/// Isomorphism-invariant encoding of a graph with an optional root set.
/// Equal iff the graphs are isomorphic by a map carrying roots onto roots.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the vertex placed at canonical position i.
  std::vector<Vertex> order;
};

/// Color refinement followed by individualization search with automorphism
/// pruning. Throws ResourceError above kCanonicalMaxVertices.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const Vertex> roots = {});

inline CanonicalForm canonical_form(const Graph& g, std::span<const Vertex> roots = {}) {
  return canonical_labeling(g, roots).form;
}

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const;
};

}  // namespace c4count
