#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "genfx/gluing.hpp"

namespace genfx {

struct BatchBounds {
  /// Upper bound on the vertex count of each graph.
  std::size_t max_nodes = 8;
  /// Upper bound on the number of common vertices.
  std::size_t max_common = 4;
};

/// Instance `index` of the campaign seeded by `seed`; depends on nothing else.
GluingSpec random_gluing_spec(std::uint64_t seed, std::size_t index, const BatchBounds& bounds);

struct BatchSummary {
  std::size_t count = 0;
  std::size_t agreements = 0;
  std::size_t emerged = 0;
  std::size_t no_path = 0;
  std::size_t already_connected = 0;
  /// Lowest disagreeing index and its input, serialised for replay.
  std::optional<std::size_t> first_disagreement;
  std::string replay;

  bool all_agree() const { return agreements == count; }
  friend bool operator==(const BatchSummary&, const BatchSummary&) = default;
};

/// Compares decide against oracle_decide on `count` instances, in parallel.
BatchSummary run_batch(std::uint64_t seed, std::size_t count, const BatchBounds& bounds);
/// Same campaign on one thread; reference for run_batch.
BatchSummary run_batch_serial(std::uint64_t seed, std::size_t count, const BatchBounds& bounds);

std::string to_string(const BatchSummary& s);

}  // namespace genfx
