#include "genfx/semilattice.hpp"

#include <random>

namespace genfx {

FiniteSemilattice::FiniteSemilattice(std::string name, std::size_t size, JoinFn join, LabelFn label)
    : name_(std::move(name)), size_(size), join_(std::move(join)), label_(std::move(label)) {
  if (size_ == 0) throw InputError(name_ + ": a semilattice needs at least one element");
  if (size_ <= kTableLimit) {
    auto table = std::make_shared<std::vector<Index>>(size_ * size_);
    for (Index a = 0; a < size_; ++a) {
      for (Index b = 0; b < size_; ++b) {
        const Index j = join_(a, b);
        if (j >= size_) throw InputError(name_ + ": join result out of range");
        (*table)[a * size_ + b] = j;
      }
    }
    table_ = std::move(table);
  }
  const Audit a = audit();
  if (!a.ok()) throw InputError(name_ + ": " + a.first_failure);
}

FiniteSemilattice::Index FiniteSemilattice::join(Index a, Index b) const {
  if (table_) return (*table_)[a * size_ + b];
  const Index j = join_(a, b);
  if (j >= size_) throw InputError(name_ + ": join result out of range");
  return j;
}

FiniteSemilattice::Audit FiniteSemilattice::audit() const { return audit(size_ <= kExhaustiveAuditSize); }

FiniteSemilattice::Audit FiniteSemilattice::exhaustive_audit() const { return audit(true); }

FiniteSemilattice::Audit FiniteSemilattice::audit(bool exhaustive) const {
  Audit out;
  auto note = [&](bool& flag, const std::string& what) {
    if (flag) {
      flag = false;
      if (out.first_failure.empty()) out.first_failure = what;
    }
  };
  auto check = [&](Index a, Index b, Index c) {
    if (join(a, a) != a) note(out.idempotent, "idempotence fails at " + label(a));
    if (join(a, b) != join(b, a)) note(out.commutative, "commutativity fails at (" + label(a) + ", " + label(b) + ")");
    if (join(join(a, b), c) != join(a, join(b, c))) {
      note(out.associative, "associativity fails at (" + label(a) + ", " + label(b) + ", " + label(c) + ")");
    }
  };

  if (exhaustive) {
    for (Index a = 0; a < size_; ++a)
      for (Index b = 0; b < size_; ++b)
        for (Index c = 0; c < size_; ++c) check(a, b, c);
    return out;
  }
  out.exhaustive = false;
  for (Index a = 0; a < size_; ++a) check(a, a, a);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Index> pick(0, size_ - 1);
  for (std::size_t i = 0; i < kSampledTriples && out.ok(); ++i) check(pick(rng), pick(rng), pick(rng));
  return out;
}

Veil::Veil(FiniteSemilattice source, FiniteSemilattice target, std::vector<Index> phi, PhenomeSet as_set)
    : source_(std::move(source)), target_(std::move(target)), phi_(std::move(phi)), as_set_(std::move(as_set)) {
  if (phi_.size() != source_.size()) throw InputError("veil map must be defined on every system");
  for (Index p : phi_)
    if (p >= target_.size()) throw InputError("veil map leaves the phenome set");
  const Audit a = audit();
  if (!a.ok()) throw InputError(source_.name() + " -> " + target_.name() + ": " + a.first_failure);
}

std::optional<Veil::Index> Veil::simplest_system(Index p) const {
  std::optional<Index> best;
  for (Index s = 0; s < source_.size(); ++s) {
    if (!target_.leq(p, phi_[s])) continue;
    if (!best || source_.leq(s, *best)) best = s;
  }
  if (!best) return std::nullopt;
  for (Index s = 0; s < source_.size(); ++s) {
    if (target_.leq(p, phi_[s]) && !source_.leq(*best, s)) return std::nullopt;
  }
  return best;
}

Veil::Audit Veil::audit() const {
  Audit out;
  for (Index a = 0; a < source_.size() && out.order_preserving; ++a) {
    for (Index b = 0; b < source_.size(); ++b) {
      if (source_.leq(a, b) && !target_.leq(phi_[a], phi_[b])) {
        out.order_preserving = false;
        out.first_failure = "order preservation fails: " + source_.label(a) + " <= " + source_.label(b) + " but phenomes are not ordered";
        break;
      }
    }
  }
  for (Index p = 0; p < target_.size(); ++p) {
    if (!simplest_system(p)) {
      out.simplest_systems = false;
      if (out.first_failure.empty()) out.first_failure = "simplest systems fail: phenome " + target_.label(p) + " has no simplest system";
      break;
    }
  }
  return out;
}

std::vector<Witness> detect(const Veil& v, std::size_t limit) {
  std::vector<Witness> out;
  const auto& src = v.source();
  const auto& tgt = v.target();
  for (std::size_t a = 0; a < src.size() && out.size() < limit; ++a) {
    for (std::size_t b = a + 1; b < src.size() && out.size() < limit; ++b) {
      const std::size_t lhs = v.phi(src.join(a, b));
      const std::size_t rhs = tgt.join(v.phi(a), v.phi(b));
      if (lhs != rhs) out.push_back({a, b, lhs, rhs});
    }
  }
  return out;
}

bool union_map_surjective(const Veil& v, std::size_t a, std::size_t b) {
  if (!v.is_set_valued()) throw PreconditionError("union_map_surjective needs a set-valued veil");
  const std::uint64_t combined = v.phenome_set(v.phi(v.source().join(a, b)));
  const std::uint64_t separate = v.phenome_set(v.phi(a)) | v.phenome_set(v.phi(b));
  return (combined & ~separate) == 0;
}

Veil identity_veil(const FiniteSemilattice& l) {
  std::vector<std::size_t> phi(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) phi[i] = i;
  return Veil(l, l, std::move(phi));
}

Veil terminal_veil(const FiniteSemilattice& l) {
  FiniteSemilattice point("{*}", 1, [](std::size_t, std::size_t) { return std::size_t{0}; },
                          [](std::size_t) { return std::string("*"); });
  return Veil(l, std::move(point), std::vector<std::size_t>(l.size(), 0));
}

ClosureOperator::ClosureOperator(std::size_t ground, std::vector<Mask> table)
    : ground_(ground), table_(std::move(table)) {
  if (ground_ > kMaxGround) throw SizeError("closure operators are tabulated up to 16 points");
  if (table_.size() != (std::size_t{1} << ground_)) throw InputError("closure table must have 2^|S| entries");
  const Audit a = audit(ground_, table_);
  if (!a.ok()) throw InputError(a.first_failure);
}

ClosureOperator::Audit ClosureOperator::audit(std::size_t ground, const std::vector<Mask>& table) {
  Audit out;
  const Mask universe = static_cast<Mask>((std::size_t{1} << ground) - 1);
  auto note = [&](bool& flag, const std::string& what) {
    if (flag) {
      flag = false;
      if (out.first_failure.empty()) out.first_failure = what;
    }
  };
  for (std::size_t a = 0; a < table.size(); ++a) {
    const Mask fa = table[a];
    if (fa & ~universe) {
      note(out.extensive, "closure value leaves the ground set at " + std::to_string(a));
      continue;
    }
    if ((a & ~fa) != 0) note(out.extensive, "extensiveness fails at subset " + std::to_string(a));
    if (table[fa] != fa) note(out.idempotent, "idempotence fails at subset " + std::to_string(a));
    // Monotone iff f(A) <= f(A + x) for every single added point x.
    for (std::size_t x = 0; x < ground; ++x) {
      const std::size_t bigger = a | (std::size_t{1} << x);
      if (bigger != a && (fa & ~table[bigger]) != 0) {
        note(out.monotone, "monotonicity fails between subsets " + std::to_string(a) + " and " + std::to_string(bigger));
      }
    }
  }
  return out;
}

ClosureOperator join(const ClosureOperator& f, const ClosureOperator& g) {
  if (f.ground_size() != g.ground_size()) throw InputError("closure operators on different ground sets");
  std::vector<ClosureOperator::Mask> table(f.table().size());
  for (std::size_t a = 0; a < table.size(); ++a) {
    auto x = static_cast<ClosureOperator::Mask>(a);
    for (;;) {
      const auto next = g.apply(f.apply(x));
      if (next == x) break;
      x = next;
    }
    table[a] = x;
  }
  return ClosureOperator(f.ground_size(), std::move(table));
}

}  // namespace genfx
