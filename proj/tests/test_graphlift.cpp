#include <doctest.h>

#include "genfx/errors.hpp"
#include "genfx/graphlift.hpp"
#include "genfx/matching.hpp"
#include "support.hpp"

using namespace genfx;
using namespace genfx::testing;

namespace {

const Graph kRun3G(13, {{3, 5}, {1, 7}, {6, 7}, {6, 12}, {12, 2}, {10, 8}, {8, 9}, {11, 9}, {9, 4}, {13, 4}});
const Graph kRun3H(17, {{2, 4}, {1, 5}, {5, 13}, {3, 7}, {7, 9}, {9, 15}, {11, 9}, {11, 13}, {6, 10}});

std::size_t components_avoiding(const Graph& g, Vertex s, Vertex t) {
  std::size_t out = 0;
  for (const auto& comp : components(g))
    if (std::find(comp.begin(), comp.end(), s) == comp.end() && std::find(comp.begin(), comp.end(), t) == comp.end())
      ++out;
  return out;
}

}  // namespace

TEST_CASE("graph construction") {
  Graph g(3, {{1, 2}, {2, 1}, {2, 3}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.add_edge(1, 2));
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
  CHECK(Graph(3, {{1, 2}}) == Graph(3, {{2, 1}}));
  CHECK(Graph(3, {{1, 2}}).is_subgraph_of(g));
  CHECK_FALSE(g.is_subgraph_of(Graph(3, {{1, 2}})));
}

TEST_CASE("components") {
  CHECK(components(Graph(4)).size() == 4);
  CHECK(components(kRun3G).size() == 3);
  CHECK(components(kRun3H).size() == 8);
  const auto comps = components(Graph(5, {{4, 2}, {5, 1}}));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{1, 5});
  CHECK(comps[1] == std::vector<Vertex>{2, 4});
  CHECK(comps[2] == std::vector<Vertex>{3});
}

TEST_CASE("union-find agrees with breadth-first search") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform_size(rng, 2, 10);
    const Graph g = random_graph(rng, n, 0.25);
    for (Vertex s = 1; s <= n; ++s)
      for (Vertex t = 1; t <= n; ++t) CHECK(connected(g, s, t) == bfs_connected(g, s, t));
  }
}

TEST_CASE("edge_space examples") {
  CHECK(edge_space(Graph(4)).is_zero());
  // a, b, c = 1, 2, 3.
  const Subspace q1 = edge_space(Graph(3, {{2, 1}}));
  CHECK(q1.dim() == 1);
  CHECK(q1.contains(endpoint_difference(3, 1, 2)));
  const Subspace q2 = edge_space(Graph(5, {{2, 1}, {4, 3}}));
  CHECK(q2.dim() == 2);
  CHECK(q2.contains(endpoint_difference(5, 1, 2)));
  CHECK(q2.contains(endpoint_difference(5, 4, 3)));
}

TEST_CASE("lift examples") {
  const LiftData q1 = lift(Graph(3, {{2, 1}}), 1, 3);
  CHECK(q1.phi_dim == 0);
  CHECK(q1.h_dim == 0);

  const std::vector<Vertex> a{10};
  CHECK(endpoint_cokernel_dim(kRun3G, a) == 2);
  const std::vector<Vertex> e{9};
  CHECK(endpoint_cokernel_dim(kRun3H, e) == 7);

  CHECK_THROWS_AS(lift(Graph(3), 2, 2), InputError);
  CHECK_THROWS_AS(lift(Graph(3), 1, 4), InputError);
}

TEST_CASE("lift invariants on random graphs") {
  Rng rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = uniform_size(rng, 2, 10);
    const Graph g = random_graph(rng, n, 0.3);
    const Vertex s = uniform_size(rng, 1, n);
    Vertex t = uniform_size(rng, 1, n - 1);
    if (t >= s) ++t;
    const LiftData d = lift(g, s, t);
    CHECK(n - d.i_g.dim() == components(g).size());
    CHECK((d.phi_dim == 1) == bfs_connected(g, s, t));
    CHECK(d.h_dim == components_avoiding(g, s, t));
    CHECK(phi_space(d.i_g, s, t).dim() == d.phi_dim);
  }
}

TEST_CASE("union_lift") {
  Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform_size(rng, 1, 9);
    const Graph g = random_graph(rng, n, 0.3);
    const Graph g2 = random_graph(rng, n, 0.3);
    CHECK(union_lift(g, g2) == edge_space(graph_union(g, g2)));
    CHECK(union_lift(g, g2) == sum(edge_space(g), edge_space(g2)));
  }
  CHECK_THROWS_AS(union_lift(Graph(3), Graph(4)), InputError);
}

TEST_CASE("a graph and its clique closure have the same lift") {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, uniform_size(rng, 1, 9), 0.25);
    CHECK(edge_space(clique_closure(g)) == edge_space(g));
  }
}

TEST_CASE("induced_map_on_quotients") {
  const Graph g(4, {{1, 2}, {3, 4}});
  CHECK(induced_map_on_quotients(g, g) == Matrix::identity(2));
  const Graph path(3, {{1, 2}, {2, 3}});
  CHECK(induced_map_on_quotients(Graph(3), path) == Matrix::from_rows({{1, 1, 1}}));
  // Zigzag: G = {a-b, c-d} inside G u H, one component on a..e.
  const Graph q2g(5, {{1, 2}, {4, 3}});
  const Graph q2u(5, {{1, 2}, {4, 3}, {2, 3}, {4, 5}});
  CHECK(induced_map_on_quotients(q2g, q2u) == Matrix::from_rows({{1, 1, 1}}));
  CHECK_THROWS_AS(induced_map_on_quotients(path, Graph(3)), PreconditionError);

  Rng rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform_size(rng, 1, 9);
    const Graph h = random_graph(rng, n, 0.2);
    const Graph big = graph_union(h, random_graph(rng, n, 0.2));
    const Matrix m = induced_map_on_quotients(h, big);
    const auto ch = components(h);
    const auto cg = components(big);
    const auto where = component_index(cg, n);
    REQUIRE(m.rows() == cg.size());
    REQUIRE(m.cols() == ch.size());
    for (std::size_t d = 0; d < ch.size(); ++d)
      for (std::size_t c = 0; c < cg.size(); ++c) CHECK(m(c, d) == (where[ch[d].front()] == c ? 1 : 0));
  }
}
