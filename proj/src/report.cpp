#include "genfx/report.hpp"

#include <sstream>

#include <json.hpp>

namespace genfx {
namespace {

using nlohmann::json;

constexpr const char* kRule = "-------------------------";
constexpr const char* kBanner = "#########################";

void header(std::ostream& out, const std::string& title) { out << kRule << "\n " << title << "\n" << kRule << "\n"; }

std::string id_list(const std::vector<std::pair<Vertex, Vertex>>& common, bool second) {
  std::string out = "[ ";
  for (std::size_t k = 0; k < common.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(second ? common[k].second : common[k].first);
  }
  return out + " ]";
}

std::string edge_list(const Graph& g) {
  std::string out = "[ ";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (k) out += ", ";
    out += "[ " + std::to_string(g.edges()[k].u) + ", " + std::to_string(g.edges()[k].v) + " ]";
  }
  return out + " ]";
}

long sentinel(const std::optional<Vertex>& v) { return v ? static_cast<long>(*v) : -1L; }

void graph_info(std::ostream& out, const std::string& title, const std::string& letter, const Graph& g,
                const GraphSummary& s) {
  header(out, title);
  out << " Nb of nodes: " << s.nodes << "\n Nb of edges: " << s.edges << "\n List of Edges: " << edge_list(g)
      << "\n Nb of Components: " << s.components << "\n Dim of H^1(" << letter << "): " << s.h1_dim << "\n\n "
      << (s.has_path ? "Path in " : "No path in ") << letter << ".\n\n";
}

json graph_json(const Graph& g, const GraphSummary& s) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"nodes", s.nodes},       {"edges", s.edges},   {"edge_list", edges},
          {"components", s.components}, {"h1", s.h1_dim}, {"has_path", s.has_path}};
}

json optional_json(const std::optional<Vertex>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string verbose_report(const GluingSpec& spec, const Decision& d) {
  const DimensionReport& r = d.report;
  std::ostringstream out;
  graph_info(out, "Info of G:", "G", spec.g(), r.g);
  graph_info(out, "Info on H:", "H", spec.g2(), r.g2);

  header(out, "Info on Common:");
  out << " Nb of nodes: " << r.common_count << "\n IDs in G: " << id_list(spec.common(), false)
      << "\n IDs in H: " << id_list(spec.common(), true) << "\n\n";

  header(out, "Distinguished nodes:");
  out << " A value of -1 indicates non-existence.\n A in G @: " << sentinel(spec.s().in_g)
      << "\n E in G @: " << sentinel(spec.t().in_g) << "\n A in H @: " << sentinel(spec.s().in_g2)
      << "\n E in H @: " << sentinel(spec.t().in_g2) << "\n\n";

  header(out, "Pulling Back");
  out << " Dim of pullback from G: " << r.pullback_from_g << "\n Dim of pullback from H: " << r.pullback_from_g2
      << "\n Dim of Common System: " << r.common_system_dim << "\n Dim of H^1(Common): " << r.h1_common << "\n\n";

  header(out, "Decision Criterion:");
  out << " Dim of piH^1(G): " << r.pi_h1_g << "\n Dim of piH^1(H): " << r.pi_h1_g2 << "\n Dim of Kernel of F^"
      << r.common_count << " --> piH^1(G)(+)piH^1(H): " << r.kernel_dim
      << "\n Quotienting subspace in H^1(Common): " << r.quotienting_dim << "\n\n";
  out << " The program computes 4 objects:\n\n";
  out << " Dim of piI_G: " << r.pi_i_g << "\n Dim of piI_H: " << r.pi_i_g2 << "\n Dim of intersection: "
      << r.pi_intersection << "\n Augmented Dimension: " << r.augmented_dim << "    (1)\n\n";
  out << " Dim of pi(I_G+<A,E>): " << r.pi_aug_g << "\n Dim of pi(I_H+<A,E>): " << r.pi_aug_g2
      << "\n Dim of intersection: " << r.numerator_dim << "    (2)\n\n";
  out << " Compare (1) and (2):  path emerges iff different.\n\n";

  out << kBanner << "\n";
  switch (d.verdict) {
    case PathVerdict::EmergedPath: out << " Path exists!\n" << kBanner << "\n\n Path emerged!\n"; break;
    case PathVerdict::NoPath: out << " No Path.\n" << kBanner << "\n"; break;
    case PathVerdict::AlreadyConnectedInG: out << " Path exists!\n" << kBanner << "\n\n Path already in G.\n"; break;
    case PathVerdict::AlreadyConnectedInG2: out << " Path exists!\n" << kBanner << "\n\n Path already in H.\n"; break;
  }
  return out.str();
}

std::string json_report(const GluingSpec& spec, const Decision& d) {
  const DimensionReport& r = d.report;
  json ids_g = json::array();
  json ids_g2 = json::array();
  for (const auto& [a, b] : spec.common()) {
    ids_g.push_back(a);
    ids_g2.push_back(b);
  }
  const json out = {
      {"g", graph_json(spec.g(), r.g)},
      {"g2", graph_json(spec.g2(), r.g2)},
      {"common", {{"count", r.common_count}, {"ids_in_g", ids_g}, {"ids_in_g2", ids_g2}}},
      {"endpoints",
       {{"a_in_g", optional_json(spec.s().in_g)},
        {"a_in_g2", optional_json(spec.s().in_g2)},
        {"e_in_g", optional_json(spec.t().in_g)},
        {"e_in_g2", optional_json(spec.t().in_g2)}}},
      {"pulling_back",
       {{"pullback_from_g", r.pullback_from_g},
        {"pullback_from_g2", r.pullback_from_g2},
        {"common_system", r.common_system_dim},
        {"h1_common", r.h1_common}}},
      {"decision",
       {{"pi_h1_g", r.pi_h1_g},
        {"pi_h1_g2", r.pi_h1_g2},
        {"kernel", r.kernel_dim},
        {"quotienting", r.quotienting_dim},
        {"pi_i_g", r.pi_i_g},
        {"pi_i_g2", r.pi_i_g2},
        {"pi_intersection", r.pi_intersection},
        {"augmented", r.augmented_dim},
        {"pi_aug_g", r.pi_aug_g},
        {"pi_aug_g2", r.pi_aug_g2},
        {"numerator", r.numerator_dim}}},
      {"verdict", std::string(to_string(d.verdict))},
      {"path", d.verdict != PathVerdict::NoPath},
  };
  return out.dump(2) + "\n";
}

}  // namespace genfx
