#include "genfx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "genfx/errors.hpp"

namespace genfx {
namespace {

std::pair<Vertex, Vertex> key(Vertex u, Vertex v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside 1.." +
                     std::to_string(n_));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u) + " is not allowed");
  if (!keys_.insert(key(u, v)).second) return false;
  edges_.push_back({u, v});
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const { return keys_.contains(key(u, v)); }

bool Graph::is_subgraph_of(const Graph& g) const {
  if (n_ != g.n_) return false;
  return std::ranges::all_of(keys_, [&](const auto& k) { return g.keys_.contains(k); });
}

bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.keys_ == b.keys_; }

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) throw InputError("graph union needs equal vertex counts");
  Graph g(a.vertex_count(), a.edges());
  for (const auto& e : b.edges()) g.add_edge(e.u, e.v);
  return g;
}

DisjointSet::DisjointSet(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

Components components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DisjointSet ds(n);
  for (const auto& e : g.edges()) ds.unite(e.u - 1, e.v - 1);

  std::vector<std::size_t> slot(n, n);
  Components comps;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = ds.find(v);
    if (slot[root] == n) {
      slot[root] = comps.size();
      comps.emplace_back();
    }
    comps[slot[root]].push_back(v + 1);
  }
  return comps;
}

std::vector<std::size_t> component_index(const Components& comps, std::size_t n) {
  std::vector<std::size_t> idx(n + 1, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) idx[v] = c;
  return idx;
}

bool connected(const Graph& g, Vertex s, Vertex t) {
  if (s < 1 || s > g.vertex_count() || t < 1 || t > g.vertex_count()) throw InputError("vertex out of range");
  DisjointSet ds(g.vertex_count());
  for (const auto& e : g.edges()) ds.unite(e.u - 1, e.v - 1);
  return ds.connected(s - 1, t - 1);
}

}  // namespace genfx
