#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "genfx/graph.hpp"

namespace genfx {

/// Subset of {1..n} as a bitmask; bit v-1 stands for vertex v.
using VertexMask = std::uint32_t;

inline constexpr std::size_t kMaxMatchingVertices = 12;

VertexMask mask_of(std::initializer_list<Vertex> vertices);
std::vector<Vertex> vertices_of(VertexMask m);

/// A family of distinct nonempty subsets of {1..n}, kept sorted.
class SetSystem {
 public:
  SetSystem(std::size_t ground, std::vector<VertexMask> sets);

  std::size_t ground_size() const noexcept { return ground_; }
  const std::vector<VertexMask>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool contains(VertexMask m) const;

  /// Can `v` be written as a disjoint union of members? (Empty: vacuously yes.)
  bool is_disjoint_union(VertexMask v) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t ground_;
  std::vector<VertexMask> sets_;
};

SetSystem intersect(const SetSystem& a, const SetSystem& b);

/// Each connected component replaced by a clique on its vertices.
Graph clique_closure(const Graph& g);

bool is_clique_union(const Graph& g);

/// M(G): nonempty vertex sets whose induced subgraph has a perfect matching.
/// For a disjoint union of cliques that is every set meeting each clique in
/// an even number of vertices. Throws PreconditionError otherwise.
SetSystem matchable_sets(const Graph& g);

/// HM = {{s}, {t}} u {V - {s, t} : V minimal in M}, empty differences dropped.
///
/// Members that are themselves a disjoint union of smaller members are
/// removed; this does not change which sets are disjoint unions of members.
SetSystem hm(const SetSystem& m, Vertex s, Vertex t);

/// Is v a disjoint union of HM members for each graph, but not for the
/// shared system HM(M n M')?
bool is_witness(const Graph& g, const Graph& g2, Vertex s, Vertex t, VertexMask v);

struct CombinatorialDecision {
  bool path = false;
  /// Minimum-cardinality witness, lexicographically smallest among those.
  std::optional<VertexMask> witness;
};

/// Subset search for a witness set. Graphs are replaced by their clique
/// closures first. Requires n <= 12 (SizeError) and that neither graph
/// alone joins s and t (PreconditionError).
CombinatorialDecision combinatorial_decide(const Graph& g, const Graph& g2, Vertex s, Vertex t);

}  // namespace genfx
