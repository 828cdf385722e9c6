#include "genfx/gluing.hpp"

#include <string>

#include "genfx/errors.hpp"
#include "genfx/graphlift.hpp"

namespace genfx {
namespace {

void check_id(std::size_t n, Vertex v, const std::string& field) {
  if (v < 1 || v > n) {
    throw InputError(field + ": vertex " + std::to_string(v) + " is outside 1.." + std::to_string(n));
  }
}

}  // namespace

GluingSpec::GluingSpec(Graph g, Graph g2, std::vector<std::pair<Vertex, Vertex>> common, EndpointLocation s,
                       EndpointLocation t)
    : g_(std::move(g)), g2_(std::move(g2)), common_(std::move(common)), s_(s), t_(t) {
  const std::size_t n = g_.vertex_count();
  const std::size_t n2 = g2_.vertex_count();
  std::vector<bool> used(n + 1, false);
  std::vector<bool> used2(n2 + 1, false);
  for (std::size_t k = 0; k < common_.size(); ++k) {
    const auto [a, b] = common_[k];
    const std::string field = "common[" + std::to_string(k) + "]";
    check_id(n, a, field + " (id in g)");
    check_id(n2, b, field + " (id in g2)");
    if (used[a]) throw InputError(field + ": g vertex " + std::to_string(a) + " is listed twice");
    if (used2[b]) throw InputError(field + ": g2 vertex " + std::to_string(b) + " is listed twice");
    used[a] = used2[b] = true;
  }

  auto normalise = [&](EndpointLocation& loc, const std::string& name) {
    if (!loc.in_g && !loc.in_g2) throw InputError("endpoints." + name + ": must lie in g, in g2, or in both");
    if (loc.in_g) check_id(n, *loc.in_g, "endpoints." + name + "_in_g");
    if (loc.in_g2) check_id(n2, *loc.in_g2, "endpoints." + name + "_in_g2");
    const auto slot = loc.in_g ? common_slot_of_g(*loc.in_g) : std::nullopt;
    const auto slot2 = loc.in_g2 ? common_slot_of_g2(*loc.in_g2) : std::nullopt;
    if (loc.in_g && loc.in_g2) {
      if (!slot || common_[*slot].second != *loc.in_g2) {
        throw InputError("endpoints." + name + ": ids in g and g2 are not identified by the common map");
      }
    } else if (slot) {
      loc.in_g2 = common_[*slot].second;
    } else if (slot2) {
      loc.in_g = common_[*slot2].first;
    }
  };
  normalise(s_, "s");
  normalise(t_, "t");

  const bool same = (s_.in_g && t_.in_g && *s_.in_g == *t_.in_g) || (s_.in_g2 && t_.in_g2 && *s_.in_g2 == *t_.in_g2);
  if (same) throw InputError("endpoints: s and t coincide after gluing");
}

std::vector<std::size_t> GluingSpec::common_coords_g() const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : common_) out.push_back(a - 1);
  return out;
}

std::vector<std::size_t> GluingSpec::common_coords_g2() const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : common_) out.push_back(b - 1);
  return out;
}

std::optional<std::size_t> GluingSpec::common_slot_of_g(Vertex v) const {
  for (std::size_t k = 0; k < common_.size(); ++k)
    if (common_[k].first == v) return k;
  return std::nullopt;
}

std::optional<std::size_t> GluingSpec::common_slot_of_g2(Vertex v) const {
  for (std::size_t k = 0; k < common_.size(); ++k)
    if (common_[k].second == v) return k;
  return std::nullopt;
}

GluedGraph glue(const GluingSpec& spec) {
  const std::size_t n = spec.g().vertex_count();
  const std::size_t n2 = spec.g2().vertex_count();
  const std::size_t c = spec.common().size();

  GluedGraph out{Graph(n + n2 - c), std::vector<Vertex>(n + 1), std::vector<Vertex>(n2 + 1, 0)};
  for (Vertex v = 1; v <= n; ++v) out.j_map[v] = v;
  for (const auto& [a, b] : spec.common()) out.j2_map[b] = a;
  Vertex next = n + 1;
  for (Vertex v = 1; v <= n2; ++v)
    if (out.j2_map[v] == 0) out.j2_map[v] = next++;

  for (const auto& e : spec.g().edges()) out.g_star.add_edge(out.j_map[e.u], out.j_map[e.v]);
  for (const auto& e : spec.g2().edges()) out.g_star.add_edge(out.j2_map[e.u], out.j2_map[e.v]);
  return out;
}

Vertex glued_endpoint(const GluingSpec&, const GluedGraph& glued, const EndpointLocation& loc) {
  return loc.in_g ? glued.j_map[*loc.in_g] : glued.j2_map[*loc.in_g2];
}

JSpaces j_spaces(const GluingSpec& spec) {
  std::vector<Vertex> in_g;
  std::vector<Vertex> in_g2;
  std::vector<std::size_t> in_c;
  for (const auto* loc : {&spec.s(), &spec.t()}) {
    if (loc->in_g) in_g.push_back(*loc->in_g);
    if (loc->in_g2) in_g2.push_back(*loc->in_g2);
    if (loc->in_g) {
      if (auto slot = spec.common_slot_of_g(*loc->in_g)) in_c.push_back(*slot);
    }
  }
  return JSpaces{endpoint_space(spec.g().vertex_count(), in_g), endpoint_space(spec.g2().vertex_count(), in_g2),
                 Subspace::coordinate(spec.common().size(), in_c)};
}

namespace {

bool joins_endpoints(const Subspace& i, std::size_t n, const std::optional<Vertex>& s,
                     const std::optional<Vertex>& t) {
  return s && t && i.contains(endpoint_difference(n, *s, *t));
}

}  // namespace

Decision decide(const GluingSpec& spec) {
  const Graph& g = spec.g();
  const Graph& g2 = spec.g2();
  const std::size_t n = g.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  const std::size_t c = spec.common().size();
  const auto coords = spec.common_coords_g();
  const auto coords2 = spec.common_coords_g2();

  const Subspace i = edge_space(g);
  const Subspace i2 = edge_space(g2);
  const JSpaces j = j_spaces(spec);
  const Subspace i_aug = sum(i, j.j_g);
  const Subspace i2_aug = sum(i2, j.j_g2);

  const Subspace pi = preimage(i, coords);
  const Subspace pi2 = preimage(i2, coords2);
  const Subspace pi_aug = preimage(i_aug, coords);
  const Subspace pi2_aug = preimage(i2_aug, coords2);
  const Subspace pi_common = intersect(pi, pi2);
  const Subspace numerator = intersect(pi_aug, pi2_aug);
  const Subspace denominator = sum(pi_common, j.j_star);
  if (!numerator.contains(denominator)) {
    throw InvariantError("gluing criterion: denominator is not contained in the numerator");
  }

  Decision out;
  DimensionReport& r = out.report;
  r.g = {n, g.edge_count(), components(g).size(), n - i_aug.dim(),
         joins_endpoints(i, n, spec.s().in_g, spec.t().in_g)};
  r.g2 = {n2, g2.edge_count(), components(g2).size(), n2 - i2_aug.dim(),
          joins_endpoints(i2, n2, spec.s().in_g2, spec.t().in_g2)};
  r.common_count = c;
  r.pullback_from_g = c - pi.dim();
  r.pullback_from_g2 = c - pi2.dim();
  r.common_system_dim = c - pi_common.dim();
  r.h1_common = c - denominator.dim();
  r.pi_h1_g = c - pi_aug.dim();
  r.pi_h1_g2 = c - pi2_aug.dim();
  r.kernel_dim = numerator.dim();
  r.quotienting_dim = denominator.dim();
  r.pi_i_g = pi.dim();
  r.pi_i_g2 = pi2.dim();
  r.pi_intersection = pi_common.dim();
  r.augmented_dim = denominator.dim();
  r.pi_aug_g = pi_aug.dim();
  r.pi_aug_g2 = pi2_aug.dim();
  r.numerator_dim = numerator.dim();

  out.numerator_dim = numerator.dim();
  out.denominator_dim = denominator.dim();
  if (r.g.has_path) {
    out.verdict = PathVerdict::AlreadyConnectedInG;
  } else if (r.g2.has_path) {
    out.verdict = PathVerdict::AlreadyConnectedInG2;
  } else {
    out.verdict = numerator.dim() > denominator.dim() ? PathVerdict::EmergedPath : PathVerdict::NoPath;
  }
  return out;
}

PathVerdict oracle_decide(const GluingSpec& spec) {
  const auto& s = spec.s();
  const auto& t = spec.t();
  if (s.in_g && t.in_g && connected(spec.g(), *s.in_g, *t.in_g)) return PathVerdict::AlreadyConnectedInG;
  if (s.in_g2 && t.in_g2 && connected(spec.g2(), *s.in_g2, *t.in_g2)) return PathVerdict::AlreadyConnectedInG2;
  const GluedGraph glued = glue(spec);
  const bool linked = connected(glued.g_star, glued_endpoint(spec, glued, s), glued_endpoint(spec, glued, t));
  return linked ? PathVerdict::EmergedPath : PathVerdict::NoPath;
}

}  // namespace genfx
