#pragma once

// Generators and independent oracles shared by the unit tests. Nothing here
// calls into the library's linear algebra.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "genfx/graph.hpp"
#include "genfx/matrix.hpp"

namespace genfx::testing {

using Rng = std::mt19937_64;

inline long uniform_long(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::vector<long>> random_int_rows(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::vector<std::vector<long>> out(rows, std::vector<long>(cols));
  for (auto& row : out)
    for (auto& x : row) x = uniform_long(rng, lo, hi);
  return out;
}

inline Matrix to_matrix(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

/// Rank by fraction-free Bareiss elimination over mpz.
inline std::size_t bareiss_rank(std::vector<std::vector<long>> rows_in) {
  if (rows_in.empty()) return 0;
  const std::size_t rows = rows_in.size();
  const std::size_t cols = rows_in[0].size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = rows_in[r][c];
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Erdos-Renyi graph, each edge present with probability p.
inline Graph random_graph(Rng& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// A disjoint union of cliques over a random partition of 1..n.
inline Graph random_clique_union(Rng& rng, std::size_t n, std::size_t max_blocks) {
  std::vector<std::size_t> block(n + 1);
  for (Vertex v = 1; v <= n; ++v) block[v] = uniform_size(rng, 0, max_blocks - 1);
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (block[u] == block[v]) g.add_edge(u, v);
  return g;
}

/// Reachability by breadth-first search on the adjacency lists.
inline bool bfs_connected(const Graph& g, Vertex s, Vertex t) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count() + 1);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(g.vertex_count() + 1, false);
  std::vector<Vertex> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v == t) return true;
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

/// Does the subgraph induced on `mask` (bit v-1 = vertex v) have a perfect
/// matching? Exhaustive: match the lowest vertex with each neighbour.
inline bool has_perfect_matching(const Graph& g, std::uint32_t mask) {
  if (mask == 0) return true;
  const int low = __builtin_ctz(mask);
  const Vertex u = static_cast<Vertex>(low) + 1;
  for (Vertex v = u + 1; v <= g.vertex_count(); ++v) {
    if (!(mask >> (v - 1) & 1) || !g.has_edge(u, v)) continue;
    if (has_perfect_matching(g, mask & ~(1u << (u - 1)) & ~(1u << (v - 1)))) return true;
  }
  return false;
}

/// Boolean Floyd-Warshall on an n x n adjacency matrix; the diagonal is
/// cleared at the end.
inline std::vector<std::vector<bool>> warshall(std::vector<std::vector<bool>> r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  for (std::size_t i = 0; i < n; ++i) r[i][i] = false;
  return r;
}

}  // namespace genfx::testing
