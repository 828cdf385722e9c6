#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genfx/errors.hpp"

namespace genfx {

/// A finite join-semilattice on element indices 0..size-1.
///
/// The join is supplied as a function and tabulated when the carrier is
/// small. Construction audits associativity, commutativity and idempotence
/// (exhaustively up to kExhaustiveAuditSize elements, on a fixed random
/// sample of triples beyond) and throws InputError on a violation.
class FiniteSemilattice {
 public:
  using Index = std::size_t;
  using JoinFn = std::function<Index(Index, Index)>;
  using LabelFn = std::function<std::string(Index)>;

  static constexpr std::size_t kExhaustiveAuditSize = 64;
  static constexpr std::size_t kTableLimit = 1024;
  static constexpr std::size_t kSampledTriples = 20000;

  FiniteSemilattice(std::string name, std::size_t size, JoinFn join, LabelFn label);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return size_; }
  Index join(Index a, Index b) const;
  /// a <= b iff a v b = b.
  bool leq(Index a, Index b) const { return join(a, b) == b; }
  std::string label(Index a) const { return label_(a); }

  struct Audit {
    bool associative = true;
    bool commutative = true;
    bool idempotent = true;
    bool exhaustive = true;
    std::string first_failure;
    bool ok() const { return associative && commutative && idempotent; }
  };
  Audit audit() const;
  /// Every triple, whatever the size.
  Audit exhaustive_audit() const;

 private:
  Audit audit(bool exhaustive) const;

  std::string name_;
  std::size_t size_;
  JoinFn join_;
  LabelFn label_;
  std::shared_ptr<const std::vector<Index>> table_;
};

/// Builds a semilattice over explicit values; `join` must stay inside them.
template <class T, class Join, class Label>
FiniteSemilattice make_semilattice(std::string name, std::vector<T> elements, Join join, Label label) {
  auto values = std::make_shared<const std::vector<T>>(std::move(elements));
  auto index = std::make_shared<std::map<T, std::size_t>>();
  for (std::size_t i = 0; i < values->size(); ++i) (*index)[(*values)[i]] = i;
  auto join_fn = [values, index, join](std::size_t a, std::size_t b) {
    auto it = index->find(join((*values)[a], (*values)[b]));
    if (it == index->end()) throw InputError("join leaves the element set");
    return it->second;
  };
  auto label_fn = [values, label](std::size_t a) { return label((*values)[a]); };
  return FiniteSemilattice(std::move(name), values->size(), join_fn, label_fn);
}

/// phi(s v s') != phi(s) v phi(s').
struct Witness {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t lhs = 0;  ///< phi(a v b)
  std::size_t rhs = 0;  ///< phi(a) v phi(b)
};

/// A map of semilattices satisfying the veil axioms: phi is order
/// preserving, and each phenome p has a least system s with p <= phi(s).
class Veil {
 public:
  using Index = FiniteSemilattice::Index;
  /// Phenome as a bitmask, for targets whose join is set union.
  using PhenomeSet = std::function<std::uint64_t(Index)>;

  /// Audits both axioms and throws InputError naming the offending element.
  Veil(FiniteSemilattice source, FiniteSemilattice target, std::vector<Index> phi, PhenomeSet as_set = {});

  const FiniteSemilattice& source() const noexcept { return source_; }
  const FiniteSemilattice& target() const noexcept { return target_; }
  Index phi(Index s) const { return phi_.at(s); }
  bool is_set_valued() const noexcept { return static_cast<bool>(as_set_); }
  std::uint64_t phenome_set(Index p) const { return as_set_(p); }

  struct Audit {
    bool order_preserving = true;
    bool simplest_systems = true;
    std::string first_failure;
    bool ok() const { return order_preserving && simplest_systems; }
  };
  Audit audit() const;

  /// The least system explaining phenome p, if one exists.
  std::optional<Index> simplest_system(Index p) const;

 private:
  FiniteSemilattice source_;
  FiniteSemilattice target_;
  std::vector<Index> phi_;
  PhenomeSet as_set_;
};

/// Pairs a < b (by index) witnessing generative effects, up to `limit`.
std::vector<Witness> detect(const Veil& v, std::size_t limit = std::numeric_limits<std::size_t>::max());

/// For set-valued veils: is every point of phi(a v b) already in phi(a) or
/// phi(b)? Equivalently, is phi(a) + phi(b) -> phi(a v b) surjective.
bool union_map_surjective(const Veil& v, std::size_t a, std::size_t b);

/// (L, id): never generative.
Veil identity_veil(const FiniteSemilattice& l);
/// ({*}, *): never generative.
Veil terminal_veil(const FiniteSemilattice& l);

/// Map on subsets of a ground set of size <= 16, stored as a table.
class ClosureOperator {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t kMaxGround = 16;

  /// Checks extensive, monotone and idempotent exhaustively;
  /// throws InputError naming the first failure.
  ClosureOperator(std::size_t ground, std::vector<Mask> table);

  std::size_t ground_size() const noexcept { return ground_; }
  Mask apply(Mask a) const { return table_.at(a); }
  /// f(empty).
  Mask least_fixpoint() const { return table_.front(); }
  const std::vector<Mask>& table() const noexcept { return table_; }

  struct Audit {
    bool extensive = true;
    bool monotone = true;
    bool idempotent = true;
    std::string first_failure;
    bool ok() const { return extensive && monotone && idempotent; }
  };
  static Audit audit(std::size_t ground, const std::vector<Mask>& table);

  friend bool operator==(const ClosureOperator&, const ClosureOperator&) = default;
  friend auto operator<=>(const ClosureOperator& a, const ClosureOperator& b) { return a.table_ <=> b.table_; }

 private:
  std::size_t ground_;
  std::vector<Mask> table_;
};

/// The least closure operator above both: iterate g . f to a fixpoint.
ClosureOperator join(const ClosureOperator& f, const ClosureOperator& g);

}  // namespace genfx
