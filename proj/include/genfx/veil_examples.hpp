#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "genfx/graph.hpp"
#include "genfx/semilattice.hpp"

namespace genfx {

/// Systems are subsets of U = {1..u} joined by union; the phenome is {*}
/// exactly for S = U and empty otherwise. Element index = subset bitmask.
Veil subset_of_u_veil(std::size_t u);

/// Behaviors over S x R, pair (i, j) at bit i * |R| + j (0-based), joined
/// by intersection; the phenome is the projection to S, also joined by
/// intersection. Element index = bitmask. Requires |S| * |R| <= 6.
Veil behavioral_veil(std::size_t s_count, std::size_t r_count);

/// Projection of a behavior mask onto S.
std::uint32_t behavior_projection(std::uint32_t behavior, std::size_t s_count, std::size_t r_count);

/// Activation threshold of one node; nullopt never activates.
using Threshold = std::optional<std::size_t>;

/// f(A): the black set reached from A when a node turns black once at
/// least its threshold of neighbours are black.
ClosureOperator threshold_system(const Graph& g, const std::vector<Threshold>& thresholds);

/// Per-node minimum.
std::vector<Threshold> threshold_join(const std::vector<Threshold>& a, const std::vector<Threshold>& b);

/// Black set after activating nodes one at a time in a caller-chosen order:
/// `pick` receives the currently activatable nodes and returns one of them.
template <class Pick>
ClosureOperator::Mask threshold_sequential(const Graph& g, const std::vector<Threshold>& thresholds, Pick pick);

/// Every closure operator on {1..ground}, ascending by table.
std::vector<ClosureOperator> all_closure_operators(std::size_t ground);

/// Systems are all closure operators on 3 points; the phenome is the least
/// fixed point f(empty) in 2^3 under union.
Veil threshold_veil();

/// Index of `f` in threshold_veil()'s source.
std::size_t threshold_index(const ClosureOperator& f);

/// Off-diagonal relations on {1..n}: pair (a, b) with a != b at a fixed bit.
std::uint32_t relation_bit(std::size_t n, std::size_t a, std::size_t b);
std::size_t relation_pair_count(std::size_t n);

/// Smallest transitive relation containing r (diagonal pairs dropped).
std::uint32_t transitive_closure(std::size_t n, std::uint32_t r);

/// Systems are the transitive relations on {1..n}, joined by closing the
/// union; the phenome is the relation itself among all relations, joined
/// by union. Requires n <= 4 (SizeError).
struct ReachabilityVeil {
  std::size_t n;
  /// systems[i] is the relation mask of source element i, ascending.
  std::vector<std::uint32_t> systems;
  Veil veil;
};
ReachabilityVeil reachability_veil(std::size_t n);

struct RewriteRule {
  std::string lhs;
  std::string rhs;
};

inline constexpr std::size_t kDefaultRewriteLength = 8;

/// Words over {a, b} of length <= max_len reachable from w by replacing an
/// occurrence of either side of a rule with the other side.
std::set<std::string> rewriting_phenome(const std::vector<RewriteRule>& rules, const std::string& w,
                                        std::size_t max_len = kDefaultRewriteLength);

/// Systems are subsets of a rule pool joined by union (element index =
/// bitmask over the pool); the phenome is rewriting_phenome from w. The
/// phenome lattice is the union-closure of the attained phenomes. Requires
/// max_len <= 5 so that every word fits one 64-bit mask.
struct RewritingVeil {
  std::vector<RewriteRule> pool;
  std::string word;
  std::size_t max_len;
  /// All words over {a, b} of length <= max_len, shortlex; bit i = words[i].
  std::vector<std::string> words;
  /// phenomes[i] is the word mask of target element i.
  std::vector<std::uint64_t> phenomes;
  Veil veil;
};
RewritingVeil rewriting_veil(std::vector<RewriteRule> pool, std::string w, std::size_t max_len);

/// Systems, phenomes and every witness of one named example.
/// Names: subset-of-u, behavioral, threshold, reachability, rewriting.
/// Throws InputError on an unknown name.
std::string veil_demo(const std::string& name);

template <class Pick>
ClosureOperator::Mask threshold_sequential(const Graph& g, const std::vector<Threshold>& thresholds, Pick pick) {
  const std::size_t n = g.vertex_count();
  ClosureOperator::Mask black = 0;
  for (;;) {
    std::vector<Vertex> ready;
    for (Vertex v = 1; v <= n; ++v) {
      if (black >> (v - 1) & 1 || !thresholds[v - 1]) continue;
      std::size_t lit = 0;
      for (const auto& e : g.edges()) {
        if (e.u == v && (black >> (e.v - 1) & 1)) ++lit;
        if (e.v == v && (black >> (e.u - 1) & 1)) ++lit;
      }
      if (lit >= *thresholds[v - 1]) ready.push_back(v);
    }
    if (ready.empty()) return black;
    black |= ClosureOperator::Mask{1} << (pick(ready) - 1);
  }
}

}  // namespace genfx
