#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "c4count/graph.hpp"

namespace c4count {

/// Owning pointer with value semantics, for recursive certificate trees.
template <class T>
class Box {
 public:
  Box() : p_(std::make_unique<T>()) {}
  Box(T value) : p_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& o) : p_(std::make_unique<T>(*o.p_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& o) {
    if (this != &o) p_ = std::make_unique<T>(*o.p_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *p_; }
  const T& operator*() const { return *p_; }
  T* operator->() { return p_.get(); }
  const T* operator->() const { return p_.get(); }

 private:
  std::unique_ptr<T> p_;
};

struct TameStep {
  enum class Rule { kPendant, kThreePath };
  Rule rule = Rule::kPendant;
  /// Pendant: u is the attachment vertex. ThreePath: u and v are the path's
  /// end vertices (u == v makes a triangle). Indices refer to the graph built
  /// so far; new vertices are appended (one for a pendant, two for a path,
  /// the one adjacent to u first).
  Vertex u = 0;
  Vertex v = 0;
};

/// Derivation of tameness from an edgeless graph or an axiom.
struct TameCertificate {
  enum class Base { kEdgeless, kAxiom };
  Base base = Base::kEdgeless;
  /// Edgeless base: its vertex count. Axiom base: extra isolated vertices
  /// appended after the axiom graph's vertices.
  int base_vertices = 0;
  std::string axiom;
  std::vector<TameStep> steps;
  /// Built vertex i corresponds to target vertex vertex_map[i]. When empty,
  /// the replayed graph is compared to the target up to isomorphism.
  std::vector<Vertex> vertex_map;
};

/// Axiom table: name → graph. Holds exactly the 1-subdivision of K4, whose
/// tameness is asserted by a case check rather than by the two rules.
const std::vector<std::pair<std::string, Graph>>& tame_axioms();
inline constexpr const char* kK4SubdivisionAxiom = "K4_subdivision";

/// Throws InputError on malformed steps (unknown axiom, index out of range,
/// pendant or path creating a duplicate edge).
Graph replay(const TameCertificate& cert);

struct CountableCertificate;

/// Subgraph of the certified graph: local vertex i is vertices[i], and
/// `edges` uses local indices.
struct Part {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  /// Throws InputError if an edge index is out of range or repeated.
  Graph local() const;
};

struct Island {
  Part part;
  Box<CountableCertificate> countable;
  std::optional<TameCertificate> tame;
};

struct ConnectorPart {
  Part part;
  std::vector<Vertex> ends;  // local indices
  Box<CountableCertificate> countable;
  /// Certificate for glue({part.local(), ends}) in the labeling of glue().
  TameCertificate glued_tame;
};

struct CountableCertificate {
  enum class Rule { kEdgeless, kPendant, kIslandsBridges };
  Rule rule = Rule::kEdgeless;
  /// kEdgeless: the vertex count.
  int vertices = 0;
  /// kPendant: the leaf; `parent` certifies the graph with the leaf deleted
  /// and higher vertices shifted down by one.
  Vertex leaf = -1;
  std::optional<Box<CountableCertificate>> parent;
  /// kIslandsBridges. Every island except possibly the last carries a tame
  /// certificate.
  std::vector<Island> islands;
  std::vector<ConnectorPart> connectors;
};

/// JSON documents: {"schema": "c4count.certificate/1", "kind": "tame" |
/// "countable", "target": {"n": .., "edges": [[u, v], ...]}, "tree": {...}}.
std::string certificate_json(const Graph& target, const TameCertificate& cert);
std::string certificate_json(const Graph& target, const CountableCertificate& cert);

struct CertificateDocument {
  std::string kind;
  Graph target;
  std::optional<TameCertificate> tame;
  std::optional<CountableCertificate> countable;
};

/// Throws InputError on malformed JSON or unknown rule names.
CertificateDocument parse_certificate(const std::string& text);

/// Certificate for the graph relabeled by perm (vertex v becomes perm[v]).
TameCertificate relabel(const TameCertificate& cert, const std::vector<Vertex>& perm);
CountableCertificate relabel(const CountableCertificate& cert, const std::vector<Vertex>& perm);

}  // namespace c4count
