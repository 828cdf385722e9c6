#include <doctest.h>

#include <string>

#include "genfx/batch.hpp"
#include "genfx/errors.hpp"
#include "genfx/graphlift.hpp"
#include "genfx/gluing.hpp"
#include "support.hpp"

using namespace genfx;
using namespace genfx::testing;

namespace {

using Common = std::vector<std::pair<Vertex, Vertex>>;

const Common kFull3{{1, 1}, {2, 2}, {3, 3}};
const Common kFirst5{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}};

GluingSpec run1() {
  return GluingSpec(Graph(3, {{1, 2}}), Graph(3, {{2, 3}}), kFull3, {1, 1}, {3, 3});
}
GluingSpec run2() {
  return GluingSpec(Graph(3, {{1, 2}}), Graph(3, {{1, 2}}), kFull3, {1, 1}, {3, 3});
}
GluingSpec run3() {
  return GluingSpec(
      Graph(13, {{3, 5}, {1, 7}, {6, 7}, {6, 12}, {12, 2}, {10, 8}, {8, 9}, {11, 9}, {9, 4}, {13, 4}}),
      Graph(17, {{2, 4}, {1, 5}, {5, 13}, {3, 7}, {7, 9}, {9, 15}, {11, 9}, {11, 13}, {6, 10}}), kFirst5,
      {10, std::nullopt}, {std::nullopt, 9});
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("spec validation names the field at fault") {
  const Graph g(3, {{1, 2}});
  CHECK(message_of([&] { GluingSpec(g, g, {{1, 1}, {4, 2}}, {1, 1}, {3, 3}); }).find("common[1] (id in g)") !=
        std::string::npos);
  CHECK(message_of([&] { GluingSpec(g, g, {{1, 1}, {1, 2}}, {1, 1}, {3, 3}); }).find("common[1]") !=
        std::string::npos);
  CHECK(message_of([&] { GluingSpec(g, g, kFull3, {1, 1}, {3, 9}); }).find("endpoints.t_in_g2") !=
        std::string::npos);
  CHECK(message_of([&] { GluingSpec(g, g, kFull3, {1, 2}, {3, 3}); }).find("endpoints.s") != std::string::npos);
  CHECK(message_of([&] { GluingSpec(g, g, kFull3, {}, {3, 3}); }).find("endpoints.s") != std::string::npos);
  CHECK(message_of([&] { GluingSpec(g, g, kFull3, {1, std::nullopt}, {std::nullopt, 1}); }).find("coincide") !=
        std::string::npos);
}

TEST_CASE("endpoints on a common vertex are placed on both sides") {
  const Graph g(3);
  const GluingSpec spec(g, g, {{2, 3}}, {2, std::nullopt}, {std::nullopt, 1});
  CHECK(spec.s() == EndpointLocation{2, 3});
  CHECK(spec.t() == EndpointLocation{std::nullopt, 1});
}

TEST_CASE("glue") {
  const GluedGraph r1 = glue(run1());
  CHECK(r1.g_star == Graph(3, {{1, 2}, {2, 3}}));

  const GluedGraph r3 = glue(run3());
  CHECK(r3.g_star.vertex_count() == 25);

  const GluingSpec spec(Graph(3, {{1, 2}}), Graph(4, {{1, 4}, {2, 3}}), {{3, 2}}, {1, std::nullopt},
                        {std::nullopt, 4});
  const GluedGraph glued = glue(spec);
  CHECK(glued.j2_map[2] == 3);
  CHECK(glued.j2_map[1] == 4);
  CHECK(glued.j2_map[3] == 5);
  CHECK(glued.j2_map[4] == 6);
  CHECK(glued.g_star == Graph(6, {{1, 2}, {4, 6}, {3, 5}}));
}

TEST_CASE("glued graph invariants on random specs") {
  for (std::size_t i = 0; i < 300; ++i) {
    const GluingSpec spec = random_gluing_spec(99, i, {});
    const GluedGraph glued = glue(spec);
    const std::size_t n = spec.g().vertex_count();
    const std::size_t n2 = spec.g2().vertex_count();
    CHECK(glued.g_star.vertex_count() == n + n2 - spec.common().size());
    std::vector<int> hits(glued.g_star.vertex_count() + 1, 0);
    for (Vertex v = 1; v <= n; ++v) ++hits[glued.j_map[v]];
    for (Vertex v = 1; v <= n2; ++v) ++hits[glued.j2_map[v]];
    std::size_t shared = 0;
    for (std::size_t v = 1; v < hits.size(); ++v) {
      CHECK(hits[v] >= 1);
      if (hits[v] == 2) ++shared;
    }
    CHECK(shared == spec.common().size());
    Graph rebuilt(glued.g_star.vertex_count());
    for (const auto& e : spec.g().edges()) rebuilt.add_edge(glued.j_map[e.u], glued.j_map[e.v]);
    for (const auto& e : spec.g2().edges()) rebuilt.add_edge(glued.j2_map[e.u], glued.j2_map[e.v]);
    CHECK(rebuilt == glued.g_star);
  }
}

TEST_CASE("j_spaces case table") {
  const JSpaces both = j_spaces(run1());
  const std::vector<Vertex> st{1, 3};
  CHECK(both.j_g == endpoint_space(3, st));
  CHECK(both.j_g2 == endpoint_space(3, st));
  CHECK(both.j_star == Subspace::coordinate(3, std::vector<std::size_t>{0, 2}));

  const JSpaces r3 = j_spaces(run3());
  const std::vector<Vertex> a{10};
  const std::vector<Vertex> e{9};
  CHECK(r3.j_g == endpoint_space(13, a));
  CHECK(r3.j_g2 == endpoint_space(17, e));
  CHECK(r3.j_star.is_zero());

  const GluingSpec neither(Graph(2), Graph(3), {{1, 1}}, {std::nullopt, 2}, {std::nullopt, 3});
  CHECK(j_spaces(neither).j_g.is_zero());
}

TEST_CASE("reference run 1") {
  const Decision d = decide(run1());
  const DimensionReport& r = d.report;
  CHECK(r.g.components == 2);
  CHECK(r.g.h1_dim == 0);
  CHECK(r.g2.h1_dim == 0);
  CHECK(r.pullback_from_g == 2);
  CHECK(r.pullback_from_g2 == 2);
  CHECK(r.common_system_dim == 3);
  CHECK(r.h1_common == 1);
  CHECK(r.pi_h1_g == 0);
  CHECK(r.pi_h1_g2 == 0);
  CHECK(r.kernel_dim == 3);
  CHECK(r.quotienting_dim == 2);
  CHECK(r.pi_i_g == 1);
  CHECK(r.pi_i_g2 == 1);
  CHECK(r.pi_intersection == 0);
  CHECK(r.augmented_dim == 2);
  CHECK(r.pi_aug_g == 3);
  CHECK(r.pi_aug_g2 == 3);
  CHECK(r.numerator_dim == 3);
  CHECK(d.verdict == PathVerdict::EmergedPath);
}

TEST_CASE("reference run 2") {
  const Decision d = decide(run2());
  CHECK(d.report.common_system_dim == 2);
  CHECK(d.report.h1_common == 0);
  CHECK(d.report.quotienting_dim == 3);
  CHECK(d.report.pi_intersection == 1);
  CHECK(d.report.augmented_dim == 3);
  CHECK(d.report.numerator_dim == 3);
  CHECK(d.verdict == PathVerdict::NoPath);
}

TEST_CASE("reference run 3") {
  const Decision d = decide(run3());
  const DimensionReport& r = d.report;
  CHECK(r.g.nodes == 13);
  CHECK(r.g.edges == 10);
  CHECK(r.g.components == 3);
  CHECK(r.g.h1_dim == 2);
  CHECK(r.g2.nodes == 17);
  CHECK(r.g2.components == 8);
  CHECK(r.g2.h1_dim == 7);
  CHECK(r.pullback_from_g == 3);
  CHECK(r.pullback_from_g2 == 2);
  CHECK(r.common_system_dim == 4);
  CHECK(r.h1_common == 4);
  CHECK(r.pi_h1_g == 2);
  CHECK(r.pi_h1_g2 == 1);
  CHECK(r.kernel_dim == 2);
  CHECK(r.quotienting_dim == 1);
  CHECK(r.pi_i_g == 2);
  CHECK(r.pi_i_g2 == 3);
  CHECK(r.pi_intersection == 1);
  CHECK(r.augmented_dim == 1);
  CHECK(r.pi_aug_g == 3);
  CHECK(r.pi_aug_g2 == 4);
  CHECK(r.numerator_dim == 2);
  CHECK(d.verdict == PathVerdict::EmergedPath);

}

TEST_CASE("already connected verdicts") {
  const Graph path(3, {{1, 2}, {2, 3}});
  CHECK(decide(GluingSpec(path, Graph(3), kFull3, {1, 1}, {3, 3})).verdict == PathVerdict::AlreadyConnectedInG);
  CHECK(decide(GluingSpec(Graph(3), path, kFull3, {1, 1}, {3, 3})).verdict == PathVerdict::AlreadyConnectedInG2);
}

TEST_CASE("the three special cases come out of the general table") {
  // s, t in g only; g2 bridges them through common vertices.
  const GluingSpec case1(Graph(4, {{1, 2}, {3, 4}}), Graph(2, {{1, 2}}), {{2, 1}, {3, 2}}, {1, std::nullopt},
                         {4, std::nullopt});
  CHECK(decide(case1).verdict == PathVerdict::EmergedPath);
  // s in g only, t common.
  const GluingSpec case2(Graph(3, {{1, 2}}), Graph(3, {{1, 2}}), {{2, 1}, {3, 2}}, {1, std::nullopt},
                         {3, std::nullopt});
  CHECK(decide(case2).verdict == PathVerdict::EmergedPath);
  // s in g only, t in g2 only.
  const GluingSpec case3(Graph(2, {{1, 2}}), Graph(2, {{1, 2}}), {{2, 1}}, {1, std::nullopt}, {std::nullopt, 2});
  CHECK(decide(case3).verdict == PathVerdict::EmergedPath);
  const GluingSpec cut(Graph(2, {{1, 2}}), Graph(3, {{1, 2}}), {{2, 1}}, {1, std::nullopt}, {std::nullopt, 3});
  CHECK(decide(cut).verdict == PathVerdict::NoPath);
}

TEST_CASE("decide agrees with the union-find oracle on random specs") {
  for (std::size_t i = 0; i < 600; ++i) {
    const GluingSpec spec = random_gluing_spec(2024, i, {8, 4});
    const Decision d = decide(spec);
    CHECK(d.verdict == oracle_decide(spec));
    CHECK(d.numerator_dim >= d.denominator_dim);
    CHECK(d.report.kernel_dim == d.numerator_dim);
    CHECK(d.report.augmented_dim == d.denominator_dim);
    const std::size_t c = spec.common().size();
    CHECK(d.report.pi_h1_g == c - d.report.pi_aug_g);
    CHECK(d.report.pi_h1_g2 == c - d.report.pi_aug_g2);
  }
}

TEST_CASE("full overlap reduces to the same-vertex criterion") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform_size(rng, 2, 8);
    const Graph g = random_graph(rng, n, 0.25);
    const Graph g2 = random_graph(rng, n, 0.25);
    const Vertex s = uniform_size(rng, 1, n);
    Vertex t = uniform_size(rng, 1, n - 1);
    if (t >= s) ++t;
    Common identity;
    for (Vertex v = 1; v <= n; ++v) identity.emplace_back(v, v);
    const Decision d = decide(GluingSpec(g, g2, identity, {s, s}, {t, t}));
    const SameVertexEmergence e = emergence_same_vertices(g, g2, s, t);
    CHECK(d.verdict == e.verdict);
    if (e.verdict == PathVerdict::EmergedPath || e.verdict == PathVerdict::NoPath) {
      CHECK(d.numerator_dim - d.denominator_dim == e.numerator_dim - e.denominator_dim);
    }
  }
}
