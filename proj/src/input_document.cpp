#include "genfx/input_document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "genfx/errors.hpp"

namespace genfx {
namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "." + key + ": missing");
  return *it;
}

Vertex vertex_id(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path + ": expected a positive integer vertex id");
  const auto id = v.get<std::int64_t>();
  if (id < 1) throw InputError(path + ": vertex ids start at 1, got " + std::to_string(id));
  return static_cast<Vertex>(id);
}

std::pair<Vertex, Vertex> id_pair(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw InputError(path + ": expected a pair [u, v]");
  return {vertex_id(v[0], path + "[0]"), vertex_id(v[1], path + "[1]")};
}

GraphInput graph_input(const json& obj, const std::string& path) {
  GraphInput out;
  const json& nodes = field(obj, "nodes", path);
  if (!nodes.is_number_integer() || nodes.get<std::int64_t>() < 0) {
    throw InputError(path + ".nodes: expected a nonnegative integer");
  }
  out.nodes = nodes.get<std::size_t>();
  const json& edges = field(obj, "edges", path);
  if (!edges.is_array()) throw InputError(path + ".edges: expected an array");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string at = path + ".edges[" + std::to_string(k) + "]";
    const auto [u, v] = id_pair(edges[k], at);
    if (u > out.nodes || v > out.nodes) {
      throw InputError(at + ": vertex outside 1.." + std::to_string(out.nodes));
    }
    if (u == v) throw InputError(at + ": self-loop on vertex " + std::to_string(u));
    out.edges.push_back({u, v});
  }
  return out;
}

std::optional<Vertex> endpoint(const json& obj, const char* key) {
  const std::string path = std::string("endpoints.") + key;
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + ": missing (use null for absent)");
  if (it->is_null()) return std::nullopt;
  return vertex_id(*it, path);
}

json graph_json(const GraphInput& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.v});
  return {{"nodes", g.nodes}, {"edges", edges}};
}

json optional_json(const std::optional<Vertex>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

InputDocument parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw InputError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw InputError("document: expected a JSON object");

  InputDocument out;
  out.g = graph_input(field(doc, "g", "document"), "g");
  out.g2 = graph_input(field(doc, "g2", "document"), "g2");
  const json& common = field(doc, "common", "document");
  if (!common.is_array()) throw InputError("common: expected an array of [id_in_g, id_in_g2] pairs");
  for (std::size_t k = 0; k < common.size(); ++k) out.common.push_back(id_pair(common[k], "common[" + std::to_string(k) + "]"));
  const json& ends = field(doc, "endpoints", "document");
  if (!ends.is_object()) throw InputError("endpoints: expected an object");
  out.a_in_g = endpoint(ends, "a_in_g");
  out.a_in_g2 = endpoint(ends, "a_in_g2");
  out.e_in_g = endpoint(ends, "e_in_g");
  out.e_in_g2 = endpoint(ends, "e_in_g2");
  return out;
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_input(text.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

GluingSpec to_spec(const InputDocument& doc) {
  // Field names follow the document: A is s and E is t.
  try {
    return GluingSpec(Graph(doc.g.nodes, doc.g.edges), Graph(doc.g2.nodes, doc.g2.edges), doc.common,
                      EndpointLocation{doc.a_in_g, doc.a_in_g2}, EndpointLocation{doc.e_in_g, doc.e_in_g2});
  } catch (const InputError& e) {
    std::string msg = e.what();
    for (const auto& [from, to] : {std::pair<std::string, std::string>{"endpoints.s_in_", "endpoints.a_in_"},
                                   {"endpoints.t_in_", "endpoints.e_in_"},
                                   {"endpoints.s:", "endpoints.a:"},
                                   {"endpoints.t:", "endpoints.e:"},
                                   {"s and t", "A and E"}}) {
      if (auto pos = msg.find(from); pos != std::string::npos) msg.replace(pos, from.size(), to);
    }
    throw InputError(msg);
  }
}

InputDocument to_document(const GluingSpec& spec) {
  InputDocument out;
  out.g = {spec.g().vertex_count(), spec.g().edges()};
  out.g2 = {spec.g2().vertex_count(), spec.g2().edges()};
  out.common = spec.common();
  out.a_in_g = spec.s().in_g;
  out.a_in_g2 = spec.s().in_g2;
  out.e_in_g = spec.t().in_g;
  out.e_in_g2 = spec.t().in_g2;
  return out;
}

std::string serialize(const InputDocument& doc) {
  json common = json::array();
  for (const auto& [a, b] : doc.common) common.push_back({a, b});
  const json out = {{"g", graph_json(doc.g)},
                    {"g2", graph_json(doc.g2)},
                    {"common", common},
                    {"endpoints",
                     {{"a_in_g", optional_json(doc.a_in_g)},
                      {"a_in_g2", optional_json(doc.a_in_g2)},
                      {"e_in_g", optional_json(doc.e_in_g)},
                      {"e_in_g2", optional_json(doc.e_in_g2)}}}};
  return out.dump();
}

}  // namespace genfx
