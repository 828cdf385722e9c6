#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "genfx/matrix.hpp"

namespace genfx {

/// A linear subspace of R^n held in canonical form.
///
/// The basis rows are the nonzero rows of the reduced row echelon form of
/// any generating set, so two Subspace values are equal iff they contain
/// the same vectors. Coordinates are 0-based here; callers at the edges
/// translate from 1-based vertex ids.
class Subspace {
 public:
  /// The zero subspace of R^n.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  /// Row space of `generators` (rows are vectors of R^cols).
  static Subspace row_space(Matrix generators);
  /// Span of the listed coordinate vectors e_i.
  static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim_; }

  /// RREF basis, one row per basis vector.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Coordinates not used as pivots; e_k for these k is a basis of R^n / *this.
  std::vector<std::size_t> complement_coords() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Subtracts the basis until `v` vanishes on every pivot coordinate.
  /// The result is zero iff v lies in the subspace.
  Vector reduce(std::span<const Rational> v) const;

  /// Coordinates of a member vector in the RREF basis (its pivot entries).
  Vector coordinates_of(std::span<const Rational> v) const;

  /// Coordinates of the class v + *this in the complement basis.
  Vector quotient_coordinates(std::span<const Rational> v) const;
  /// The projection R^n -> R^n / *this as a matrix in the complement basis.
  Matrix quotient_projection() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Linear span of `vectors`, each of length `ambient_dim`.
Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);

Subspace sum(const Subspace& a, const Subspace& b);

/// A n B via the kernel of the stacked-basis map: solutions of x.A = y.B.
Subspace intersect(const Subspace& a, const Subspace& b);
/// A n B via the Zassenhaus block elimination. Must agree with intersect().
Subspace intersect_zassenhaus(const Subspace& a, const Subspace& b);

/// {a in R^c : iota(a) in i}, where iota places a on the listed coordinates.
Subspace preimage(const Subspace& i, std::span<const std::size_t> coords);

/// dim big - dim small, after checking small is contained in big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

/// Checks a and b live in the same ambient space.
void require_same_ambient(const Subspace& a, const Subspace& b);

}  // namespace genfx
