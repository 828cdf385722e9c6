#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace genfx {

/// 1-based vertex id.
using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 1..n.
///
/// Edges keep their insertion order and orientation for reporting;
/// duplicates (in either orientation) are dropped and self-loops rejected.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : n_(n) {}
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Adds {u, v}; returns false if it was already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  /// True if every edge of *this is an edge of `g` and the vertex sets agree.
  bool is_subgraph_of(const Graph& g) const;

  /// Set equality on vertex count and edges, ignoring order and orientation.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::set<std::pair<Vertex, Vertex>> keys_;
};

/// Same vertex set, union of the edge sets.
Graph graph_union(const Graph& a, const Graph& b);

/// Disjoint-set forest with path halving and union by size (0-based).
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false if x and y were already joined.
  bool unite(std::size_t x, std::size_t y);
  bool connected(std::size_t x, std::size_t y) { return find(x) == find(y); }
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// Connected components as sorted vertex lists, ordered by minimum vertex.
using Components = std::vector<std::vector<Vertex>>;

/// Connected components by union-find; no linear algebra involved.
Components components(const Graph& g);

/// components(g) as a vertex -> component index lookup (index 0 unused).
std::vector<std::size_t> component_index(const Components& comps, std::size_t n);

bool connected(const Graph& g, Vertex s, Vertex t);

}  // namespace genfx
