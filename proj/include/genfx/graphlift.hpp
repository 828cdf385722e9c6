#pragma once

#include <cstddef>
#include <span>

#include "genfx/graph.hpp"
#include "genfx/matrix.hpp"
#include "genfx/subspace.hpp"

namespace genfx {

/// I_G: span of e_u - e_v over the edges {u, v} of g, inside R^n.
Subspace edge_space(const Graph& g);

/// e_s - e_t for 1-based s, t.
Vector endpoint_difference(std::size_t n, Vertex s, Vertex t);

/// Span of e_v for the listed 1-based vertices.
Subspace endpoint_space(std::size_t n, std::span<const Vertex> vertices);

/// Phi(J): kernel of R^2 -> R^n / J, generators sent to e_s and e_t.
Subspace phi_space(const Subspace& j, Vertex s, Vertex t);

/// dim R^n / (I_G + span{e_v : v in endpoints}).
std::size_t endpoint_cokernel_dim(const Graph& g, std::span<const Vertex> endpoints);

/// The linear lift of one graph with distinguished endpoints s, t.
struct LiftData {
  Graph graph;
  Vertex s = 0;
  Vertex t = 0;
  Subspace i_g;
  /// dim Phi(I_G): 1 iff s and t are connected.
  std::size_t phi_dim = 0;
  /// dim H(I_G) = dim R^n / (I_G + <e_s, e_t>).
  std::size_t h_dim = 0;
  Components components;
};

/// Builds the lift and cross-checks it against union-find.
/// Throws InvariantError if the two disagree.
LiftData lift(const Graph& g, Vertex s, Vertex t);

/// I_{g u g2}, checked equal to I_g + I_{g2}.
Subspace union_lift(const Graph& g, const Graph& g2);

/// The canonical surjection R^n/I_H -> R^n/I_G for a subgraph h of g,
/// written in component bases (components ordered by minimum vertex).
/// Entry (c, d) is 1 iff component d of h lies inside component c of g.
Matrix induced_map_on_quotients(const Graph& h, const Graph& g);

}  // namespace genfx
