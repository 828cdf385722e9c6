#include "genfx/graphlift.hpp"

#include <string>

#include "genfx/errors.hpp"
#include "genfx/linear_map.hpp"

namespace genfx {
namespace {

void check_vertex(std::size_t n, Vertex v, const char* what) {
  if (v < 1 || v > n) {
    throw InputError(std::string(what) + " vertex " + std::to_string(v) + " is outside 1.." + std::to_string(n));
  }
}

}  // namespace

Subspace edge_space(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix gens(g.edge_count(), n);
  std::size_t r = 0;
  for (const auto& e : g.edges()) {
    gens(r, e.u - 1) = 1;
    gens(r, e.v - 1) = -1;
    ++r;
  }
  return Subspace::row_space(std::move(gens));
}

Vector endpoint_difference(std::size_t n, Vertex s, Vertex t) {
  check_vertex(n, s, "endpoint");
  check_vertex(n, t, "endpoint");
  Vector v(n);
  v[s - 1] += 1;
  v[t - 1] -= 1;
  return v;
}

Subspace endpoint_space(std::size_t n, std::span<const Vertex> vertices) {
  std::vector<std::size_t> coords;
  for (Vertex v : vertices) {
    check_vertex(n, v, "endpoint");
    coords.push_back(v - 1);
  }
  return Subspace::coordinate(n, coords);
}

Subspace phi_space(const Subspace& j, Vertex s, Vertex t) {
  const std::size_t n = j.ambient_dim();
  check_vertex(n, s, "endpoint");
  check_vertex(n, t, "endpoint");
  const Vector qs = j.quotient_coordinates(unit_vector(n, s - 1));
  const Vector qt = j.quotient_coordinates(unit_vector(n, t - 1));
  Matrix map(qs.size(), 2);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    map(i, 0) = qs[i];
    map(i, 1) = qt[i];
  }
  return kernel(map);
}

std::size_t endpoint_cokernel_dim(const Graph& g, std::span<const Vertex> endpoints) {
  const std::size_t n = g.vertex_count();
  return n - sum(edge_space(g), endpoint_space(n, endpoints)).dim();
}

LiftData lift(const Graph& g, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  check_vertex(n, s, "s");
  check_vertex(n, t, "t");
  if (s == t) throw InputError("lift needs distinct endpoints s and t");

  LiftData out{g, s, t, edge_space(g), 0, 0, components(g)};
  out.phi_dim = phi_space(out.i_g, s, t).dim();
  const Vertex ends[] = {s, t};
  out.h_dim = n - sum(out.i_g, endpoint_space(n, ends)).dim();

  // Union-find characterisations of the same three numbers.
  if (n - out.i_g.dim() != out.components.size()) {
    throw InvariantError("dim R^n/I_G differs from the number of connected components");
  }
  const bool linked = out.i_g.contains(endpoint_difference(n, s, t));
  if (linked != connected(g, s, t) || out.phi_dim != (linked ? 1u : 0u)) {
    throw InvariantError("Phi(I_G) disagrees with s-t connectivity");
  }
  std::size_t avoiding = 0;
  for (const auto& comp : out.components) {
    bool touches = false;
    for (Vertex v : comp) touches = touches || v == s || v == t;
    if (!touches) ++avoiding;
  }
  if (avoiding != out.h_dim) {
    throw InvariantError("H(I_G) disagrees with the count of components avoiding s and t");
  }
  return out;
}

Subspace union_lift(const Graph& g, const Graph& g2) {
  if (g.vertex_count() != g2.vertex_count()) throw InputError("union_lift needs graphs on the same vertex count");
  Subspace direct = edge_space(graph_union(g, g2));
  if (direct != sum(edge_space(g), edge_space(g2))) {
    throw InvariantError("I_{G u G'} differs from I_G + I_G'");
  }
  return direct;
}

Matrix induced_map_on_quotients(const Graph& h, const Graph& g) {
  if (!h.is_subgraph_of(g)) throw PreconditionError("induced_map_on_quotients: h is not a subgraph of g");
  const std::size_t n = g.vertex_count();
  const Subspace i_g = edge_space(g);
  const Components comps_h = components(h);
  const Components comps_g = components(g);

  // Change of basis from the complement-coordinate basis of R^n/I_G to the
  // component basis {[e_min C]}.
  Matrix to_complement(n - i_g.dim(), comps_g.size());
  for (std::size_t c = 0; c < comps_g.size(); ++c) {
    const Vector q = i_g.quotient_coordinates(unit_vector(n, comps_g[c].front() - 1));
    for (std::size_t i = 0; i < q.size(); ++i) to_complement(i, c) = q[i];
  }

  Matrix out(comps_g.size(), comps_h.size());
  for (std::size_t d = 0; d < comps_h.size(); ++d) {
    const Vector q = i_g.quotient_coordinates(unit_vector(n, comps_h[d].front() - 1));
    const auto x = solve(to_complement, q);
    if (!x) throw InvariantError("component classes do not span R^n/I_G");
    for (std::size_t c = 0; c < comps_g.size(); ++c) out(c, d) = (*x)[c];
  }
  return out;
}

}  // namespace genfx
