// Acceptance gate: one PASS/FAIL line per criterion. Tolerances are zero
// (every quantity is an exact integer); time limits and sample sizes are
// pinned below.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "genfx/batch.hpp"
#include "genfx/exactseq.hpp"
#include "genfx/gluing.hpp"
#include "genfx/graphlift.hpp"
#include "genfx/input_document.hpp"
#include "genfx/linear_map.hpp"
#include "genfx/matching.hpp"
#include "genfx/semilattice.hpp"
#include "genfx/veil_examples.hpp"
#include "support.hpp"

using namespace genfx;
using namespace genfx::testing;

namespace {

constexpr double kLimitReferenceRunsMs = 1000;
constexpr double kLimitInstancesMs = 100;
constexpr double kLimitOracleMs = 10000;
constexpr double kLimitExactnessMs = 30000;
constexpr double kLimitCombinatorialMs = 60000;
constexpr double kLimitLiftMs = 10000;
constexpr double kLimitVeilsMs = 10000;

constexpr std::size_t kOracleSamples = 500;
constexpr std::size_t kExactnessSamples = 200;
constexpr std::size_t kCombinatorialSamples = 200;
constexpr std::size_t kLiftSamples = 500;

/// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << count_ - failed_ << "/" << count_ << " checks";
    for (const auto& f : failures_) out << "; " << f;
    return out.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string data(const std::string& name) { return std::string(GENFX_TEST_DATA) + "/" + name; }

Vertex other_endpoint(Rng& rng, std::size_t n, Vertex s) {
  Vertex t = uniform_size(rng, 1, n - 1);
  return t >= s ? t + 1 : t;
}

void reference_runs(Check& c) {
  struct Expected {
    const char* file;
    std::vector<std::pair<const char*, std::size_t>> fields;
    PathVerdict verdict;
  };
  const std::vector<Expected> runs{
      {"reference_run1.json",
       {{"piI_G", 1}, {"piI_H", 1}, {"intersection", 0}, {"augmented", 2}, {"pi(I_G+<A,E>)", 3},
        {"pi(I_H+<A,E>)", 3}, {"numerator", 3}},
       PathVerdict::EmergedPath},
      {"reference_run2.json", {{"augmented", 3}, {"numerator", 3}}, PathVerdict::NoPath},
      {"reference_run3.json",
       {{"H1(G)", 2}, {"H1(H)", 7}, {"pullback G", 3}, {"pullback H", 2}, {"common system", 4}, {"H1(common)", 4},
        {"piH1(G)", 2}, {"piH1(H)", 1}, {"kernel", 2}, {"quotienting", 1}, {"piI_G", 2}, {"piI_H", 3},
        {"intersection", 1}, {"augmented", 1}, {"numerator", 2}},
       PathVerdict::EmergedPath},
  };
  for (const auto& run : runs) {
    const Decision d = decide(to_spec(load_input(data(run.file))));
    const DimensionReport& r = d.report;
    const std::map<std::string, std::size_t> got{
        {"piI_G", r.pi_i_g},          {"piI_H", r.pi_i_g2},          {"intersection", r.pi_intersection},
        {"augmented", r.augmented_dim}, {"pi(I_G+<A,E>)", r.pi_aug_g}, {"pi(I_H+<A,E>)", r.pi_aug_g2},
        {"numerator", r.numerator_dim}, {"H1(G)", r.g.h1_dim},        {"H1(H)", r.g2.h1_dim},
        {"pullback G", r.pullback_from_g}, {"pullback H", r.pullback_from_g2},
        {"common system", r.common_system_dim}, {"H1(common)", r.h1_common}, {"piH1(G)", r.pi_h1_g},
        {"piH1(H)", r.pi_h1_g2},      {"kernel", r.kernel_dim},      {"quotienting", r.quotienting_dim}};
    for (const auto& [name, value] : run.fields)
      c.expect(got.at(name) == value, std::string(run.file) + " " + name + " = " + std::to_string(got.at(name)));
    c.expect(d.verdict == run.verdict, std::string(run.file) + " verdict " + std::string(to_string(d.verdict)));
  }
}

void instances(Check& c) {
  // a..e = 1..5.
  const auto q1 = emergence_same_vertices(Graph(3, {{2, 1}}), Graph(3, {{3, 2}}), 1, 3);
  c.expect(q1.verdict == PathVerdict::EmergedPath, "chain verdict");

  const Graph g2(5, {{2, 1}, {4, 3}});
  const Graph h2(5, {{3, 2}, {5, 4}});
  c.expect(emergence_same_vertices(g2, h2, 1, 5).verdict == PathVerdict::EmergedPath, "zigzag verdict");
  // Kernels of H(i), H(i') inside R^5 / (I_G n I_H + <a, e>), coordinates b, c, d.
  const std::vector<Vertex> ends{1, 5};
  const Subspace base = sum(intersect(edge_space(g2), edge_space(h2)), endpoint_space(5, ends));
  auto in_quotient = [&](const Subspace& x) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < x.dim(); ++r) rows.push_back(base.quotient_coordinates(x.basis().row_vector(r)));
    return span(rows, 5 - base.dim());
  };
  const Subspace k = intersect(in_quotient(sum(edge_space(g2), endpoint_space(5, ends))),
                               in_quotient(sum(edge_space(h2), endpoint_space(5, ends))));
  const std::vector<Vector> bcd{{Rational(1), Rational(-1), Rational(1)}};
  c.expect(k == span(bcd, 3), "zigzag kernel intersection is <b - c + d>");

  const Graph g3(4, {{2, 1}, {4, 3}});
  const Graph h3(4, {{1, 3}, {4, 2}});
  c.expect(emergence_same_vertices(g3, h3, 1, 4).verdict == PathVerdict::EmergedPath, "square verdict");
  const std::vector<Vector> abdc{{Rational(1), Rational(-1), Rational(-1), Rational(1)}};
  c.expect(intersect(edge_space(g3), edge_space(h3)) == span(abdc, 4), "square I_G n I_H = <a - b + d - c>");
}

void oracle(Check& c) {
  const BatchBounds bounds{8, 4};
  for (std::size_t i = 0; i < kOracleSamples; ++i) {
    const GluingSpec spec = random_gluing_spec(20240601, i, bounds);
    const PathVerdict got = decide(spec).verdict;
    const PathVerdict want = oracle_decide(spec);
    c.expect(got == want, "instance " + std::to_string(i) + ": " + serialize(to_document(spec)));
  }
  c.expect(run_batch(20240601, kOracleSamples, bounds).all_agree(), "parallel batch agreement");
}

void exactness(Check& c) {
  Rng rng(404);
  for (std::size_t trial = 0; trial < kExactnessSamples; ++trial) {
    const std::size_t n = uniform_size(rng, 2, 9);
    const Graph g = random_graph(rng, n, 0.25);
    const Graph g2 = random_graph(rng, n, 0.25);
    const Vertex s = uniform_size(rng, 1, n);
    const Vertex t = other_endpoint(rng, n, s);
    const SixTermSequence seq = six_term_for_pair(g, g2, s, t);
    const std::string tag = "trial " + std::to_string(trial);
    c.expect(seq.certificate.exact, tag + " certificate");
    c.expect(rank(seq.maps[0]) == seq.dims[0], tag + " head injective");
    c.expect(rank(seq.maps[4]) == seq.dims[5], tag + " tail surjective");
    for (std::size_t k = 0; k + 1 < seq.maps.size(); ++k) {
      c.expect((seq.maps[k + 1] * seq.maps[k]).is_zero(), tag + " composite zero");
      c.expect(rank(seq.maps[k]) + rank(seq.maps[k + 1]) == seq.dims[k + 1], tag + " im = ker");
    }
    c.expect(seq.alternating_sum() == 0, tag + " alternating sum");
  }
}

void combinatorial(Check& c) {
  constexpr Vertex a = 1, b = 2, cc = 3, d = 4, e = 5;
  const auto q1 = combinatorial_decide(Graph(3, {{b, a}}), Graph(3, {{cc, b}}), a, cc);
  c.expect(q1.path && q1.witness == mask_of({b}), "chain witness {b}");
  const auto q2 = combinatorial_decide(Graph(5, {{b, a}, {d, cc}}), Graph(5, {{cc, b}, {e, d}}), a, e);
  c.expect(q2.path && q2.witness == mask_of({b, cc, d}), "zigzag witness {b,c,d}");
  const Graph g3(4, {{b, a}, {d, cc}});
  const Graph h3(4, {{a, cc}, {d, b}});
  const auto q3 = combinatorial_decide(g3, h3, a, d);
  c.expect(q3.path && (q3.witness == mask_of({b}) || q3.witness == mask_of({cc})), "square witness {b} or {c}");
  c.expect(is_witness(g3, h3, a, d, mask_of({b})) && is_witness(g3, h3, a, d, mask_of({cc})), "square: both witnesses");

  Rng rng(505);
  std::size_t compared = 0;
  while (compared < kCombinatorialSamples) {
    const std::size_t n = uniform_size(rng, 2, 8);
    const Graph g = random_clique_union(rng, n, uniform_size(rng, 1, n));
    const Graph g2 = random_clique_union(rng, n, uniform_size(rng, 1, n));
    const Vertex s = uniform_size(rng, 1, n);
    const Vertex t = other_endpoint(rng, n, s);
    if (bfs_connected(g, s, t) || bfs_connected(g2, s, t)) continue;
    ++compared;
    const bool comb = combinatorial_decide(g, g2, s, t).path;
    const bool lin = emergence_same_vertices(g, g2, s, t).verdict == PathVerdict::EmergedPath;
    c.expect(comb == lin, "clique pair " + std::to_string(compared));
  }
}

void lift_structure(Check& c) {
  Rng rng(606);
  for (std::size_t trial = 0; trial < kLiftSamples; ++trial) {
    const std::size_t n = uniform_size(rng, 2, 10);
    const Graph g = random_graph(rng, n, 0.3);
    const Vertex s = uniform_size(rng, 1, n);
    const Vertex t = other_endpoint(rng, n, s);
    std::size_t comps = 0, avoiding = 0;
    for (Vertex v = 1; v <= n; ++v) {
      bool leader = true;
      for (Vertex u = 1; u < v && leader; ++u) leader = !bfs_connected(g, u, v);
      if (!leader) continue;
      ++comps;
      if (!bfs_connected(g, v, s) && !bfs_connected(g, v, t)) ++avoiding;
    }
    const LiftData d = lift(g, s, t);
    const std::string tag = "trial " + std::to_string(trial);
    c.expect(n - d.i_g.dim() == comps, tag + " n - dim I_G");
    c.expect(d.phi_dim == (bfs_connected(g, s, t) ? 1u : 0u), tag + " phi_dim");
    c.expect(d.h_dim == avoiding, tag + " h_dim");
    const Graph g2 = random_graph(rng, n, 0.3);
    const Subspace u = union_lift(g, g2);
    c.expect(u == sum(edge_space(g), edge_space(g2)) && u == edge_space(graph_union(g, g2)), tag + " union lift");
  }
}

/// Exhaustive when the join is tabulated, the declared sampling otherwise.
bool semilattice_ok(const FiniteSemilattice& l) {
  return l.size() <= FiniteSemilattice::kTableLimit ? l.exhaustive_audit().ok() : l.audit().ok();
}

void audit_veil(Check& c, const Veil& v, const std::string& name) {
  c.expect(semilattice_ok(v.source()), name + " source semilattice axioms");
  c.expect(semilattice_ok(v.target()), name + " target semilattice axioms");
  c.expect(v.audit().ok(), name + " veil axioms");
}

/// phi(a v b) and phi(a) v phi(b) as point sets.
std::pair<std::uint64_t, std::uint64_t> sides(const Veil& v, std::size_t a, std::size_t b) {
  return {v.phenome_set(v.phi(v.source().join(a, b))), v.phenome_set(v.target().join(v.phi(a), v.phi(b)))};
}

void veils(Check& c) {
  const Veil subset = subset_of_u_veil(2);
  audit_veil(c, subset, "subset-of-U");
  const auto w = detect(subset);
  c.expect(w.size() == 1 && w[0].a == 0b01 && w[0].b == 0b10, "subset-of-U witness is the complement pair");

  const Veil behavior = behavioral_veil(2, 2);
  audit_veil(c, behavior, "behavioral");
  const std::size_t m = 0b1001, change = 0b1010;
  c.expect(behavior.phi(behavior.source().join(m, change)) == 0b10, "behavioral pi(M n C) = {s2}");
  c.expect(behavior.target().join(behavior.phi(m), behavior.phi(change)) == 0b11, "behavioral pi(M) n pi(C) = S");

  const Veil threshold = threshold_veil();
  audit_veil(c, threshold, "threshold");
  for (const auto& f : all_closure_operators(3))
    c.expect(ClosureOperator::audit(3, f.table()).ok(), "closure operator axioms");
  const Graph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  const auto ta = threshold_index(threshold_system(triangle, {2, 3, 1}));
  const auto tb = threshold_index(threshold_system(triangle, {0, 2, 2}));
  c.expect(sides(threshold, ta, tb) == std::pair<std::uint64_t, std::uint64_t>{0b111, 0b001},
           "threshold all three vs {left}");

  const ReachabilityVeil reach = reachability_veil(4);
  audit_veil(c, reach.veil, "reachability");
  auto index = [&](std::uint32_t r) {
    return static_cast<std::size_t>(std::ranges::lower_bound(reach.systems, r) - reach.systems.begin());
  };
  const auto [rl, rr] = sides(reach.veil, index(relation_bit(4, 1, 2) | relation_bit(4, 3, 4)),
                              index(relation_bit(4, 2, 3) | relation_bit(4, 4, 1)));
  c.expect(std::popcount(rl) == 12 && std::popcount(rr) == 4, "reachability 12 pairs vs 4");

  const RewritingVeil rw = rewriting_veil({{"aa", "a"}, {"bb", "b"}, {"ab", "ba"}}, "ab", 4);
  audit_veil(c, rw.veil, "rewriting");
  std::uint64_t mixed = 0, sorted_or_swapped = 0;
  for (std::size_t i = 0; i < rw.words.size(); ++i) {
    const std::string& word = rw.words[i];
    const bool has_a = word.find('a') != std::string::npos;
    const bool has_b = word.find('b') != std::string::npos;
    if (has_a && has_b) mixed |= std::uint64_t{1} << i;
    const bool sorted = has_a && has_b && word.find("ba") == std::string::npos;
    if (sorted || word == "ba") sorted_or_swapped |= std::uint64_t{1} << i;
  }
  c.expect(sides(rw.veil, 0b011, 0b100) == std::pair{mixed, sorted_or_swapped},
           "rewriting all mixed words vs sorted words and ba");
}

struct Criterion {
  const char* name;
  double limit_ms;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"reference run reproduction", kLimitReferenceRunsMs, reference_runs},
      {"small instances: chain, zigzag, square", kLimitInstancesMs, instances},
      {"oracle equivalence, 500 gluing instances", kLimitOracleMs, oracle},
      {"exactness audit, 200 same-vertex pairs", kLimitExactnessMs, exactness},
      {"combinatorial = linear, 200 clique-union pairs", kLimitCombinatorialMs, combinatorial},
      {"lift structure, 500 graphs", kLimitLiftMs, lift_structure},
      {"veil suite", kLimitVeilsMs, veils},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].run(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < criteria[k].limit_ms;
    const bool pass = error.empty() && check.ok() && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %zu: %s (%.1f ms / limit %.0f ms) %s%s%s\n", pass ? "PASS" : "FAIL", k + 1,
                criteria[k].name, ms, criteria[k].limit_ms, check.summary().c_str(),
                error.empty() ? "" : "; exception: ", error.c_str());
  }
  return failed == 0 ? 0 : 1;
}
