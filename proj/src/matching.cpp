#include "genfx/matching.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "genfx/errors.hpp"
#include "genfx/graphlift.hpp"

namespace genfx {
namespace {

VertexMask bit(Vertex v) { return VertexMask{1} << (v - 1); }

VertexMask full_mask(std::size_t n) { return n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

void check_size(std::size_t n) {
  if (n > kMaxMatchingVertices) {
    throw SizeError("set-system routines enumerate subsets; n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxMatchingVertices));
  }
}

// cover[m] is true iff m is a disjoint union of members of `family`.
std::vector<bool> cover_table(const std::vector<VertexMask>& family, std::size_t n) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<bool> cover(count, false);
  cover[0] = true;
  for (std::size_t m = 1; m < count; ++m) {
    const auto mask = static_cast<VertexMask>(m);
    const VertexMask low = mask & (~mask + 1);
    for (VertexMask f : family) {
      if ((f & low) && (f & ~mask) == 0 && cover[mask ^ f]) {
        cover[m] = true;
        break;
      }
    }
  }
  return cover;
}

bool lex_less(VertexMask a, VertexMask b) { return vertices_of(a) < vertices_of(b); }

}  // namespace

VertexMask mask_of(std::initializer_list<Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

std::vector<Vertex> vertices_of(VertexMask m) {
  std::vector<Vertex> out;
  for (Vertex v = 1; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

SetSystem::SetSystem(std::size_t ground, std::vector<VertexMask> sets) : ground_(ground), sets_(std::move(sets)) {
  check_size(ground_);
  for (VertexMask m : sets_) {
    if (m == 0) throw InputError("set systems hold nonempty sets only");
    if (m & ~full_mask(ground_)) throw InputError("set-system member lies outside the ground set");
  }
  std::ranges::sort(sets_);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetSystem::contains(VertexMask m) const { return std::ranges::binary_search(sets_, m); }

bool SetSystem::is_disjoint_union(VertexMask v) const {
  if (v == 0) return true;
  const VertexMask low = v & (~v + 1);
  for (VertexMask f : sets_) {
    if ((f & low) && (f & ~v) == 0 && is_disjoint_union(v ^ f)) return true;
  }
  return false;
}

SetSystem intersect(const SetSystem& a, const SetSystem& b) {
  if (a.ground_size() != b.ground_size()) throw InputError("set systems over different ground sets");
  std::vector<VertexMask> out;
  std::ranges::set_intersection(a.sets(), b.sets(), std::back_inserter(out));
  return SetSystem(a.ground_size(), std::move(out));
}

Graph clique_closure(const Graph& g) {
  Graph out(g.vertex_count());
  for (const auto& comp : components(g))
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j) out.add_edge(comp[i], comp[j]);
  return out;
}

bool is_clique_union(const Graph& g) { return clique_closure(g) == g; }

SetSystem matchable_sets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  check_size(n);
  if (!is_clique_union(g)) throw PreconditionError("matchable_sets needs a disjoint union of cliques");

  std::vector<VertexMask> cliques;
  for (const auto& comp : components(g)) {
    VertexMask m = 0;
    for (Vertex v : comp) m |= bit(v);
    cliques.push_back(m);
  }
  std::vector<VertexMask> sets;
  for (VertexMask v = 1; v <= full_mask(n); ++v) {
    const bool even = std::ranges::all_of(cliques, [&](VertexMask k) { return std::popcount(v & k) % 2 == 0; });
    if (even) sets.push_back(v);
  }
  return SetSystem(n, std::move(sets));
}

SetSystem hm(const SetSystem& m, Vertex s, Vertex t) {
  const std::size_t n = m.ground_size();
  if (s < 1 || s > n || t < 1 || t > n) throw InputError("hm: endpoint outside the ground set");
  const VertexMask ends = bit(s) | bit(t);

  std::vector<VertexMask> split{bit(s), bit(t)};
  for (VertexMask v : m.sets()) {
    const bool minimal = std::ranges::none_of(m.sets(), [&](VertexMask w) { return w != v && (w & ~v) == 0; });
    if (minimal && (v & ~ends) != 0) split.push_back(v & ~ends);
  }
  std::ranges::sort(split, [](VertexMask a, VertexMask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  split.erase(std::unique(split.begin(), split.end()), split.end());

  std::vector<VertexMask> kept;
  for (VertexMask v : split) {
    if (std::popcount(v) > 1 && SetSystem(n, kept).is_disjoint_union(v)) continue;
    kept.push_back(v);
  }
  return SetSystem(n, std::move(kept));
}

namespace {

struct WitnessTables {
  std::vector<bool> c1;
  std::vector<bool> c1_prime;
  std::vector<bool> c2_fails;
};

WitnessTables witness_tables(const Graph& g, const Graph& g2, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  const SetSystem m = matchable_sets(clique_closure(g));
  const SetSystem m2 = matchable_sets(clique_closure(g2));
  return {cover_table(hm(m, s, t).sets(), n), cover_table(hm(m2, s, t).sets(), n),
          cover_table(hm(intersect(m, m2), s, t).sets(), n)};
}

void check_pair(const Graph& g, const Graph& g2, Vertex s, Vertex t) {
  if (g.vertex_count() != g2.vertex_count()) throw InputError("graphs must share the vertex set");
  check_size(g.vertex_count());
  if (s < 1 || s > g.vertex_count() || t < 1 || t > g.vertex_count() || s == t) {
    throw InputError("endpoints must be distinct vertices of the graphs");
  }
}

}  // namespace

bool is_witness(const Graph& g, const Graph& g2, Vertex s, Vertex t, VertexMask v) {
  check_pair(g, g2, s, t);
  if (v == 0 || (v & ~full_mask(g.vertex_count()))) return false;
  const auto tables = witness_tables(g, g2, s, t);
  return tables.c1[v] && tables.c1_prime[v] && !tables.c2_fails[v];
}

CombinatorialDecision combinatorial_decide(const Graph& g, const Graph& g2, Vertex s, Vertex t) {
  check_pair(g, g2, s, t);
  const std::size_t n = g.vertex_count();
  const Vector diff = endpoint_difference(n, s, t);
  if (edge_space(g).contains(diff) || edge_space(g2).contains(diff)) {
    throw PreconditionError("combinatorial criterion assumes neither graph alone joins s and t");
  }

  const auto tables = witness_tables(g, g2, s, t);
  CombinatorialDecision out;
  for (VertexMask v = 1; v <= full_mask(n); ++v) {
    if (!tables.c1[v] || !tables.c1_prime[v] || tables.c2_fails[v]) continue;
    if (!out.witness || std::popcount(v) < std::popcount(*out.witness) ||
        (std::popcount(v) == std::popcount(*out.witness) && lex_less(v, *out.witness))) {
      out.witness = v;
    }
  }
  out.path = out.witness.has_value();
  return out;
}

}  // namespace genfx
