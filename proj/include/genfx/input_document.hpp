#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genfx/gluing.hpp"

namespace genfx {

struct GraphInput {
  std::size_t nodes = 0;
  std::vector<Edge> edges;
};

/// The JSON decision input, field for field:
///
///   {"g": {"nodes": n, "edges": [[u, v], ...]}, "g2": {...},
///    "common": [[id_in_g, id_in_g2], ...],
///    "endpoints": {"a_in_g": id|null, "a_in_g2": id|null,
///                  "e_in_g": id|null, "e_in_g2": id|null}}
///
/// A is the endpoint s and E the endpoint t.
struct InputDocument {
  GraphInput g;
  GraphInput g2;
  std::vector<std::pair<Vertex, Vertex>> common;
  std::optional<Vertex> a_in_g;
  std::optional<Vertex> a_in_g2;
  std::optional<Vertex> e_in_g;
  std::optional<Vertex> e_in_g2;
};

/// Throws InputError with the line for syntax errors and the field path
/// (e.g. "g.edges[2][1]") for schema errors.
InputDocument parse_input(std::string_view text);
InputDocument load_input(const std::string& path);

/// Validates into a GluingSpec; errors name the offending field.
GluingSpec to_spec(const InputDocument& doc);
InputDocument to_document(const GluingSpec& spec);

/// Compact single-line JSON that parse_input reads back.
std::string serialize(const InputDocument& doc);

}  // namespace genfx
