#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "genfx/exactseq.hpp"
#include "genfx/graph.hpp"
#include "genfx/subspace.hpp"

namespace genfx {

/// Where one distinguished endpoint lives: an id in g, an id in g2, or both.
struct EndpointLocation {
  std::optional<Vertex> in_g;
  std::optional<Vertex> in_g2;
  friend bool operator==(const EndpointLocation&, const EndpointLocation&) = default;
};

/// Two graphs glued along a common vertex set, with endpoints s and t.
class GluingSpec {
 public:
  /// Validates every invariant; throws InputError naming the field at fault.
  ///
  /// An endpoint given only by its id on one side is also placed on the
  /// other side when that id is a common vertex.
  GluingSpec(Graph g, Graph g2, std::vector<std::pair<Vertex, Vertex>> common, EndpointLocation s,
             EndpointLocation t);

  const Graph& g() const noexcept { return g_; }
  const Graph& g2() const noexcept { return g2_; }
  /// (id in g, id in g2) pairs, 1-based, in the order given.
  const std::vector<std::pair<Vertex, Vertex>>& common() const noexcept { return common_; }
  const EndpointLocation& s() const noexcept { return s_; }
  const EndpointLocation& t() const noexcept { return t_; }

  /// 0-based coordinates of the common vertices inside g (resp. g2).
  std::vector<std::size_t> common_coords_g() const;
  std::vector<std::size_t> common_coords_g2() const;
  /// 0-based index into common() of a g-vertex, if it is common.
  std::optional<std::size_t> common_slot_of_g(Vertex v) const;
  std::optional<std::size_t> common_slot_of_g2(Vertex v) const;

 private:
  Graph g_;
  Graph g2_;
  std::vector<std::pair<Vertex, Vertex>> common_;
  EndpointLocation s_;
  EndpointLocation t_;
};

struct GluedGraph {
  /// On n + n' - c vertices.
  Graph g_star;
  /// j_map[v] is the id of g-vertex v in g_star (index 0 unused).
  std::vector<Vertex> j_map;
  std::vector<Vertex> j2_map;
};

/// g keeps ids 1..n; the non-common vertices of g2 follow in ascending order.
GluedGraph glue(const GluingSpec& spec);

/// Endpoint of the glued graph for a location, through j or j'.
Vertex glued_endpoint(const GluingSpec& spec, const GluedGraph& glued, const EndpointLocation& loc);

struct JSpaces {
  Subspace j_g;      ///< in R^n
  Subspace j_g2;     ///< in R^{n'}
  Subspace j_star;   ///< in R^c
};

/// Spans of the coordinate vectors of whichever of s, t lie in V, V', C.
JSpaces j_spaces(const GluingSpec& spec);

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  /// dim R^V / (I + J).
  std::size_t h1_dim = 0;
  /// s and t both present and already joined in this graph alone.
  bool has_path = false;
};

/// Every quantity printed by the verbose decision report.
struct DimensionReport {
  GraphSummary g;
  GraphSummary g2;
  std::size_t common_count = 0;
  std::size_t pullback_from_g = 0;   ///< c - dim pi(I_G)
  std::size_t pullback_from_g2 = 0;  ///< c - dim pi'(I_G')
  std::size_t common_system_dim = 0; ///< c - dim(pi n pi')
  std::size_t h1_common = 0;         ///< c - dim(pi n pi' + J*)
  std::size_t pi_h1_g = 0;           ///< c - dim pi(I_G + J_G)
  std::size_t pi_h1_g2 = 0;          ///< c - dim pi'(I_G' + J_G')
  std::size_t kernel_dim = 0;        ///< dim of the numerator
  std::size_t quotienting_dim = 0;   ///< dim of the denominator
  std::size_t pi_i_g = 0;
  std::size_t pi_i_g2 = 0;
  std::size_t pi_intersection = 0;
  std::size_t augmented_dim = 0;     ///< (1): denominator
  std::size_t pi_aug_g = 0;
  std::size_t pi_aug_g2 = 0;
  std::size_t numerator_dim = 0;     ///< (2): numerator
};

struct Decision {
  PathVerdict verdict = PathVerdict::NoPath;
  std::size_t numerator_dim = 0;
  std::size_t denominator_dim = 0;
  DimensionReport report;
};

/// Decides whether gluing creates an s-t path, by comparing
///   pi(I_G + J_G) n pi'(I_G' + J_G')   against   pi(I_G) n pi'(I_G') + J*.
/// The report is filled in even when one graph already joins s and t.
Decision decide(const GluingSpec& spec);

/// Ground truth by union-find on g, g2 and the glued graph.
PathVerdict oracle_decide(const GluingSpec& spec);

}  // namespace genfx
