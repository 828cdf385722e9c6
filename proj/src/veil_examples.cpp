#include "genfx/veil_examples.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <sstream>

#include "genfx/errors.hpp"

namespace genfx {
namespace {

std::string mask_label(std::uint64_t m, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!(m >> i & 1)) continue;
    if (!first) out += ", ";
    out += names[i];
    first = false;
  }
  return out + "}";
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

FiniteSemilattice powerset(std::string name, std::size_t bits, bool by_union, std::vector<std::string> names) {
  return FiniteSemilattice(
      std::move(name), std::size_t{1} << bits,
      [by_union](std::size_t a, std::size_t b) { return by_union ? (a | b) : (a & b); },
      [names = std::move(names)](std::size_t a) { return mask_label(a, names); });
}

bool valid_word(const std::string& w) {
  return std::ranges::all_of(w, [](char c) { return c == 'a' || c == 'b'; });
}

std::string rule_label(const RewriteRule& r) {
  auto shown = [](const std::string& w) { return w.empty() ? std::string("1") : w; };
  return shown(r.lhs) + "<->" + shown(r.rhs);
}

}  // namespace

Veil subset_of_u_veil(std::size_t u) {
  if (u > 10) throw SizeError("subset-of-U veil enumerates 2^|U| systems; |U| <= 10");
  const std::size_t full = (std::size_t{1} << u) - 1;
  std::vector<std::size_t> phi(full + 1, 0);
  phi[full] = 1;
  return Veil(powerset("2^U", u, true, numbered("", u)), powerset("2^{*}", 1, true, {"*"}), std::move(phi),
              [](std::size_t p) { return std::uint64_t{p}; });
}

std::uint32_t behavior_projection(std::uint32_t behavior, std::size_t s_count, std::size_t r_count) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < s_count; ++i) {
    const std::uint32_t row = ((std::uint32_t{1} << r_count) - 1) << (i * r_count);
    if (behavior & row) out |= std::uint32_t{1} << i;
  }
  return out;
}

Veil behavioral_veil(std::size_t s_count, std::size_t r_count) {
  if (s_count == 0 || r_count == 0) throw InputError("behavioral veil needs nonempty universes");
  if (s_count * r_count > 6) throw SizeError("behavioral veil enumerates 2^{|S||R|} behaviors; |S||R| <= 6");
  std::vector<std::string> pairs;
  for (std::size_t i = 1; i <= s_count; ++i)
    for (std::size_t j = 1; j <= r_count; ++j) pairs.push_back("(s" + std::to_string(i) + ",r" + std::to_string(j) + ")");
  const std::size_t bits = s_count * r_count;
  std::vector<std::size_t> phi(std::size_t{1} << bits);
  for (std::size_t b = 0; b < phi.size(); ++b) phi[b] = behavior_projection(static_cast<std::uint32_t>(b), s_count, r_count);
  return Veil(powerset("2^{SxR}", bits, false, pairs), powerset("2^S", s_count, false, numbered("s", s_count)),
              std::move(phi));
}

ClosureOperator threshold_system(const Graph& g, const std::vector<Threshold>& thresholds) {
  const std::size_t n = g.vertex_count();
  if (thresholds.size() != n) throw InputError("one threshold per node is required");
  if (n > ClosureOperator::kMaxGround) throw SizeError("threshold systems are tabulated up to 16 nodes");
  std::vector<ClosureOperator::Mask> table(std::size_t{1} << n);
  for (std::size_t a = 0; a < table.size(); ++a) {
    auto black = static_cast<ClosureOperator::Mask>(a);
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex v = 1; v <= n; ++v) {
        if (black >> (v - 1) & 1 || !thresholds[v - 1]) continue;
        std::size_t lit = 0;
        for (const auto& e : g.edges()) {
          if (e.u == v && (black >> (e.v - 1) & 1)) ++lit;
          if (e.v == v && (black >> (e.u - 1) & 1)) ++lit;
        }
        if (lit >= *thresholds[v - 1]) {
          black |= ClosureOperator::Mask{1} << (v - 1);
          grew = true;
        }
      }
    }
    table[a] = black;
  }
  return ClosureOperator(n, std::move(table));
}

std::vector<Threshold> threshold_join(const std::vector<Threshold>& a, const std::vector<Threshold>& b) {
  if (a.size() != b.size()) throw InputError("threshold vectors differ in length");
  std::vector<Threshold> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) out[i] = b[i];
    else if (!b[i]) out[i] = a[i];
    else out[i] = std::min(*a[i], *b[i]);
  }
  return out;
}

std::vector<ClosureOperator> all_closure_operators(std::size_t ground) {
  if (ground > 4) throw SizeError("closure operators are enumerated through Moore families; ground <= 4");
  const std::size_t subsets = std::size_t{1} << ground;
  const std::size_t full = subsets - 1;
  std::vector<ClosureOperator> out;
  // A family of closed sets: contains the full set, closed under intersection.
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!(fam >> full & 1)) continue;
    bool moore = true;
    for (std::size_t x = 0; x < subsets && moore; ++x)
      for (std::size_t y = 0; y < subsets && moore; ++y)
        if ((fam >> x & 1) && (fam >> y & 1) && !(fam >> (x & y) & 1)) moore = false;
    if (!moore) continue;
    std::vector<ClosureOperator::Mask> table(subsets);
    for (std::size_t a = 0; a < subsets; ++a) {
      std::size_t meet = full;
      for (std::size_t x = 0; x < subsets; ++x)
        if ((fam >> x & 1) && (a & ~x) == 0) meet &= x;
      table[a] = static_cast<ClosureOperator::Mask>(meet);
    }
    out.emplace_back(ground, std::move(table));
  }
  std::ranges::sort(out);
  return out;
}

namespace {

const std::vector<ClosureOperator>& three_point_operators() {
  static const std::vector<ClosureOperator> ops = all_closure_operators(3);
  return ops;
}

std::string closure_label(const ClosureOperator& f) {
  std::string out = "f[";
  for (std::size_t a = 0; a < f.table().size(); ++a) {
    if (a) out += ' ';
    out += std::to_string(f.apply(static_cast<ClosureOperator::Mask>(a)));
  }
  return out + "]";
}

}  // namespace

std::size_t threshold_index(const ClosureOperator& f) {
  const auto& ops = three_point_operators();
  const auto it = std::ranges::lower_bound(ops, f);
  if (it == ops.end() || !(*it == f)) throw InputError("not a closure operator on 3 points");
  return static_cast<std::size_t>(it - ops.begin());
}

Veil threshold_veil() {
  const auto& ops = three_point_operators();
  auto source = make_semilattice(
      "closure operators on 3 points", ops, [](const ClosureOperator& f, const ClosureOperator& g) { return join(f, g); },
      closure_label);
  std::vector<std::size_t> phi;
  for (const auto& f : ops) phi.push_back(f.least_fixpoint());
  return Veil(std::move(source), powerset("2^3", 3, true, numbered("v", 3)), std::move(phi),
              [](std::size_t p) { return std::uint64_t{p}; });
}

std::size_t relation_pair_count(std::size_t n) { return n * (n - (n ? 1 : 0)); }

std::uint32_t relation_bit(std::size_t n, std::size_t a, std::size_t b) {
  if (a < 1 || a > n || b < 1 || b > n || a == b) throw InputError("relation pair must join two distinct points");
  const std::size_t column = b < a ? b - 1 : b - 2;
  return std::uint32_t{1} << ((a - 1) * (n - 1) + column);
}

std::uint32_t transitive_closure(std::size_t n, std::uint32_t r) {
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b) {
        if (a == b || !(r & relation_bit(n, a, b))) continue;
        for (std::size_t c = 1; c <= n; ++c) {
          if (c == b || c == a || !(r & relation_bit(n, b, c)) || (r & relation_bit(n, a, c))) continue;
          r |= relation_bit(n, a, c);
          grew = true;
        }
      }
  }
  return r;
}

ReachabilityVeil reachability_veil(std::size_t n) {
  if (n > 4) throw SizeError("reachability veil enumerates relations; n <= 4");
  if (n < 2) throw InputError("reachability veil needs at least two points");
  const std::size_t bits = relation_pair_count(n);
  std::vector<std::string> names;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b)
      if (a != b) names.push_back(std::to_string(a) + "->" + std::to_string(b));

  std::vector<std::uint32_t> systems;
  for (std::uint32_t r = 0; r < (std::uint32_t{1} << bits); ++r)
    if (transitive_closure(n, r) == r) systems.push_back(r);

  auto source = make_semilattice(
      "transitive relations", systems,
      [n](std::uint32_t a, std::uint32_t b) { return transitive_closure(n, a | b); },
      [names](std::uint32_t r) { return mask_label(r, names); });
  std::vector<std::size_t> phi(systems.begin(), systems.end());
  Veil veil(std::move(source), powerset("relations", bits, true, names), std::move(phi),
            [](std::size_t p) { return std::uint64_t{p}; });
  return ReachabilityVeil{n, std::move(systems), std::move(veil)};
}

std::set<std::string> rewriting_phenome(const std::vector<RewriteRule>& rules, const std::string& w,
                                        std::size_t max_len) {
  if (!valid_word(w)) throw InputError("rewriting: word '" + w + "' is not over {a, b}");
  if (w.size() > max_len) throw InputError("rewriting: start word is longer than max_len");
  for (const auto& r : rules) {
    if (!valid_word(r.lhs) || !valid_word(r.rhs)) throw InputError("rewriting: rule " + rule_label(r) + " is not over {a, b}");
  }
  std::set<std::string> seen{w};
  std::deque<std::string> queue{w};
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    for (const auto& r : rules) {
      for (const auto& [from, to] : {std::pair{r.lhs, r.rhs}, std::pair{r.rhs, r.lhs}}) {
        if (from.empty() || cur.size() - from.size() + to.size() > max_len) continue;
        for (auto pos = cur.find(from); pos != std::string::npos; pos = cur.find(from, pos + 1)) {
          std::string next = cur;
          next.replace(pos, from.size(), to);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
    }
  }
  return seen;
}

RewritingVeil rewriting_veil(std::vector<RewriteRule> pool, std::string w, std::size_t max_len) {
  if (max_len > 5) throw SizeError("rewriting veil stores phenomes as 64-bit word masks; max_len <= 5");
  if (pool.size() > 8) throw SizeError("rewriting veil enumerates rule subsets; at most 8 rules");

  std::vector<std::string> words{""};
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      std::string word(len, 'a');
      for (std::size_t i = 0; i < len; ++i)
        if (code >> (len - 1 - i) & 1) word[i] = 'b';
      words.push_back(std::move(word));
    }
  std::map<std::string, std::size_t> word_index;
  for (std::size_t i = 0; i < words.size(); ++i) word_index[words[i]] = i;

  std::vector<std::uint64_t> image(std::size_t{1} << pool.size());
  for (std::size_t s = 0; s < image.size(); ++s) {
    std::vector<RewriteRule> rules;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (s >> k & 1) rules.push_back(pool[k]);
    for (const auto& word : rewriting_phenome(rules, w, max_len)) image[s] |= std::uint64_t{1} << word_index.at(word);
  }

  std::set<std::uint64_t> closed(image.begin(), image.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (auto x : std::vector<std::uint64_t>(closed.begin(), closed.end()))
      for (auto y : std::vector<std::uint64_t>(closed.begin(), closed.end()))
        if (closed.insert(x | y).second) grew = true;
  }
  std::vector<std::uint64_t> phenomes(closed.begin(), closed.end());

  std::vector<std::string> rule_names;
  for (const auto& r : pool) rule_names.push_back(rule_label(r));
  auto source = powerset("rule sets", pool.size(), true, rule_names);
  auto target = make_semilattice(
      "reachable word sets", phenomes, [](std::uint64_t x, std::uint64_t y) { return x | y; },
      [words](std::uint64_t m) { return mask_label(m, words); });
  std::vector<std::size_t> phi;
  for (auto m : image) phi.push_back(static_cast<std::size_t>(std::ranges::lower_bound(phenomes, m) - phenomes.begin()));
  Veil veil(std::move(source), std::move(target), std::move(phi),
            [phenomes](std::size_t p) { return phenomes[p]; });
  return RewritingVeil{std::move(pool), std::move(w), max_len, std::move(words), std::move(phenomes), std::move(veil)};
}

namespace {

constexpr std::size_t kDemoWitnessLines = 20;

void describe(std::ostream& out, const Veil& v) {
  const auto src = v.source().audit();
  const auto tgt = v.target().audit();
  const auto veil = v.audit();
  out << "Systems:  " << v.source().name() << ", " << v.source().size() << " elements, semilattice axioms "
      << (src.ok() ? "hold" : "FAIL") << (src.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  out << "Phenomes: " << v.target().name() << ", " << v.target().size() << " elements, semilattice axioms "
      << (tgt.ok() ? "hold" : "FAIL") << (tgt.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  out << "Veil axioms (order preserving, simplest systems): " << (veil.ok() ? "hold" : "FAIL: " + veil.first_failure) << "\n";
}

void witness_line(std::ostream& out, const Veil& v, std::size_t a, std::size_t b) {
  const std::size_t lhs = v.phi(v.source().join(a, b));
  const std::size_t rhs = v.target().join(v.phi(a), v.phi(b));
  out << "  a = " << v.source().label(a) << "\n  b = " << v.source().label(b) << "\n  phi(a v b)      = "
      << v.target().label(lhs) << "\n  phi(a) v phi(b) = " << v.target().label(rhs) << "\n  generative: "
      << (lhs != rhs ? "yes" : "no") << "\n";
}

void list_witnesses(std::ostream& out, const Veil& v) {
  const auto all = detect(v);
  out << "Witnesses: " << all.size() << "\n";
  for (std::size_t i = 0; i < all.size() && i < kDemoWitnessLines; ++i) {
    const auto& w = all[i];
    out << "  " << v.source().label(w.a) << " v " << v.source().label(w.b) << ": " << v.target().label(w.lhs)
        << " != " << v.target().label(w.rhs) << "\n";
  }
  if (all.size() > kDemoWitnessLines) out << "  ... " << all.size() - kDemoWitnessLines << " more\n";
}

}  // namespace

std::string veil_demo(const std::string& name) {
  std::ostringstream out;
  out << "== " << name << " ==\n";
  if (name == "subset-of-u") {
    const Veil v = subset_of_u_veil(2);
    describe(out, v);
    out << "Example S = {1}, complement {2}:\n";
    witness_line(out, v, 0b01, 0b10);
    list_witnesses(out, v);
  } else if (name == "behavioral") {
    const Veil v = behavioral_veil(2, 2);
    describe(out, v);
    out << "Example M = {(s1,r1),(s2,r2)}, C = {(s1,r2),(s2,r2)}:\n";
    witness_line(out, v, 0b1001, 0b1010);
    list_witnesses(out, v);
  } else if (name == "threshold") {
    const Veil v = threshold_veil();
    describe(out, v);
    const Graph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
    const std::vector<Threshold> a{2, 3, 1};
    const std::vector<Threshold> b{0, 2, 2};
    out << "Example on the triangle, v1 = left, v2 = top, v3 = right, thresholds A = (2,3,1), B = (0,2,2), A v B = (0,2,1):\n";
    witness_line(out, v, threshold_index(threshold_system(triangle, a)), threshold_index(threshold_system(triangle, b)));
    list_witnesses(out, v);
  } else if (name == "reachability") {
    const ReachabilityVeil r = reachability_veil(4);
    describe(out, r.veil);
    auto index = [&](std::uint32_t m) {
      return static_cast<std::size_t>(std::ranges::lower_bound(r.systems, m) - r.systems.begin());
    };
    const auto s = relation_bit(4, 1, 2) | relation_bit(4, 3, 4);
    const auto s2 = relation_bit(4, 2, 3) | relation_bit(4, 4, 1);
    out << "Example S = {1->2, 3->4}, S' = {2->3, 4->1}:\n";
    witness_line(out, r.veil, index(s), index(s2));
    list_witnesses(out, r.veil);
  } else if (name == "rewriting") {
    const RewritingVeil r = rewriting_veil({{"aa", "a"}, {"bb", "b"}, {"ab", "ba"}}, "ab", 4);
    describe(out, r.veil);
    out << "Word ab, words up to length " << r.max_len << "; S = {aa<->a, bb<->b}, S' = {ab<->ba}:\n";
    witness_line(out, r.veil, 0b011, 0b100);
    list_witnesses(out, r.veil);
  } else {
    throw InputError("unknown veil example '" + name + "' (subset-of-u, behavioral, threshold, reachability, rewriting)");
  }
  return out.str();
}

}  // namespace genfx
