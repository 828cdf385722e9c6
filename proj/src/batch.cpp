#include "genfx/batch.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "genfx/errors.hpp"
#include "genfx/input_document.hpp"

namespace genfx {
namespace {

struct Outcome {
  PathVerdict linear = PathVerdict::NoPath;
  PathVerdict oracle = PathVerdict::NoPath;
  std::exception_ptr error;
};

Outcome evaluate(std::uint64_t seed, std::size_t index, const BatchBounds& bounds) {
  Outcome out;
  try {
    const GluingSpec spec = random_gluing_spec(seed, index, bounds);
    out.linear = decide(spec).verdict;
    out.oracle = oracle_decide(spec);
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

BatchSummary summarise(std::uint64_t seed, const BatchBounds& bounds, const std::vector<Outcome>& outcomes) {
  BatchSummary s;
  s.count = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.error) std::rethrow_exception(o.error);
    if (o.linear == o.oracle) {
      ++s.agreements;
    } else if (!s.first_disagreement) {
      s.first_disagreement = i;
      s.replay = serialize(to_document(random_gluing_spec(seed, i, bounds)));
    }
    switch (o.linear) {
      case PathVerdict::EmergedPath: ++s.emerged; break;
      case PathVerdict::NoPath: ++s.no_path; break;
      default: ++s.already_connected; break;
    }
  }
  return s;
}

}  // namespace

GluingSpec random_gluing_spec(std::uint64_t seed, std::size_t index, const BatchBounds& bounds) {
  if (bounds.max_nodes < 2) throw InputError("batch: max-nodes must be at least 2");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  const std::size_t n = uniform(1, bounds.max_nodes);
  const std::size_t n2 = uniform(n == 1 ? 2 : 1, bounds.max_nodes);
  const std::size_t c = uniform(0, std::min({n, n2, bounds.max_common}));

  auto random_graph = [&](std::size_t size) {
    const double density = 0.1 + 0.4 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    Graph g(size);
    for (Vertex u = 1; u <= size; ++u)
      for (Vertex v = u + 1; v <= size; ++v)
        if (coin(density)) coin(0.5) ? g.add_edge(u, v) : g.add_edge(v, u);
    return g;
  };
  Graph g = random_graph(n);
  Graph g2 = random_graph(n2);

  std::vector<Vertex> ids(n);
  std::vector<Vertex> ids2(n2);
  std::iota(ids.begin(), ids.end(), 1);
  std::iota(ids2.begin(), ids2.end(), 1);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::shuffle(ids2.begin(), ids2.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> common;
  for (std::size_t k = 0; k < c; ++k) common.emplace_back(ids[k], ids2[k]);

  // Endpoints are drawn from the glued vertex set: 1..n are g's vertices,
  // then the non-common vertices of g2.
  std::vector<Vertex> private2;
  for (std::size_t k = c; k < n2; ++k) private2.push_back(ids2[k]);
  const std::size_t total = n + private2.size();
  const std::size_t s_at = uniform(0, total - 1);
  std::size_t t_at = uniform(0, total - 2);
  if (t_at >= s_at) ++t_at;

  auto locate = [&](std::size_t at) {
    EndpointLocation loc;
    if (at >= n) {
      loc.in_g2 = private2[at - n];
      return loc;
    }
    const Vertex v = at + 1;
    const auto slot = std::find_if(common.begin(), common.end(), [&](const auto& p) { return p.first == v; });
    if (slot == common.end()) {
      loc.in_g = v;
    } else {
      // Common endpoints are given on one side or both; the spec fills in the rest.
      switch (uniform(0, 2)) {
        case 0: loc.in_g = v; break;
        case 1: loc.in_g2 = slot->second; break;
        default: loc.in_g = v; loc.in_g2 = slot->second; break;
      }
    }
    return loc;
  };
  const EndpointLocation s = locate(s_at);
  const EndpointLocation t = locate(t_at);
  return GluingSpec(std::move(g), std::move(g2), std::move(common), s, t);
}

BatchSummary run_batch(std::uint64_t seed, std::size_t count, const BatchBounds& bounds) {
  std::vector<Outcome> outcomes(count);
  const auto signed_count = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < signed_count; ++i) {
    outcomes[static_cast<std::size_t>(i)] = evaluate(seed, static_cast<std::size_t>(i), bounds);
  }
  return summarise(seed, bounds, outcomes);
}

BatchSummary run_batch_serial(std::uint64_t seed, std::size_t count, const BatchBounds& bounds) {
  std::vector<Outcome> outcomes(count);
  for (std::size_t i = 0; i < count; ++i) outcomes[i] = evaluate(seed, i, bounds);
  return summarise(seed, bounds, outcomes);
}

std::string to_string(const BatchSummary& s) {
  std::ostringstream out;
  out << "instances: " << s.count << "\nagreements: " << s.agreements << "/" << s.count << "\nemerged: " << s.emerged
      << "\nno path: " << s.no_path << "\nalready connected: " << s.already_connected << "\n";
  if (s.first_disagreement) {
    out << "first disagreement: instance " << *s.first_disagreement << "\nreplay: " << s.replay << "\n";
  }
  return out.str();
}

}  // namespace genfx
