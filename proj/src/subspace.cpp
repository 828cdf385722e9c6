#include "genfx/subspace.hpp"

#include <algorithm>
#include <utility>

#include "genfx/errors.hpp"
#include "genfx/linear_map.hpp"
#include "genfx/rref.hpp"

namespace genfx {

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(Matrix::identity(ambient_dim));
}

Subspace Subspace::row_space(Matrix generators) {
  const std::size_t n = generators.cols();
  auto r = rref(std::move(generators));
  return Subspace(n, std::move(r.reduced), std::move(r.pivots));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices) {
  Matrix gens(indices.size(), ambient_dim);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= ambient_dim) throw InputError("coordinate index out of range");
    gens(i, indices[i]) = 1;
  }
  return row_space(std::move(gens));
}

std::vector<std::size_t> Subspace::complement_coords() const {
  std::vector<std::size_t> out;
  out.reserve(ambient_dim_ - dim());
  std::size_t p = 0;
  for (std::size_t k = 0; k < ambient_dim_; ++k) {
    if (p < pivots_.size() && pivots_[p] == k) {
      ++p;
    } else {
      out.push_back(k);
    }
  }
  return out;
}

Vector Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw InputError("vector length does not match ambient dimension");
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rational factor = w[pivots_[i]];
    if (sgn(factor) == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < ambient_dim_; ++j) w[j] -= factor * row[j];
  }
  return w;
}

bool Subspace::contains(std::span<const Rational> v) const { return genfx::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

Vector Subspace::coordinates_of(std::span<const Rational> v) const {
  if (!contains(v)) throw PreconditionError("vector is not a member of the subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vector Subspace::quotient_coordinates(std::span<const Rational> v) const {
  const Vector w = reduce(v);
  const auto free = complement_coords();
  Vector c(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) c[i] = w[free[i]];
  return c;
}

Matrix Subspace::quotient_projection() const {
  const auto free = complement_coords();
  Matrix p(free.size(), ambient_dim_);
  for (std::size_t k = 0; k < ambient_dim_; ++k) {
    const Vector q = quotient_coordinates(unit_vector(ambient_dim_, k));
    for (std::size_t i = 0; i < q.size(); ++i) p(i, k) = q[i];
  }
  return p;
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspaces live in different ambient spaces");
}

Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  return Subspace::row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  // (x, y) with x.A + y.B = 0 gives x.A = (-y).B in A n B.
  const Matrix stacked = vstack(a.basis(), b.basis());
  const Subspace relations = kernel(stacked.transpose());
  Matrix gens(relations.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < relations.dim(); ++r) {
    auto coeffs = relations.basis().row(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (sgn(coeffs[i]) == 0) continue;
      auto row = a.basis().row(i);
      for (std::size_t j = 0; j < a.ambient_dim(); ++j) gens(r, j) += coeffs[i] * row[j];
    }
  }
  return Subspace::row_space(std::move(gens));
}

Subspace intersect_zassenhaus(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  const Matrix top = hstack(a.basis(), a.basis());
  const Matrix bottom = hstack(b.basis(), Matrix::zero(b.dim(), n));
  const auto r = rref(vstack(top, bottom));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] < n) continue;
    Vector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = r.reduced(i, n + j);
    rows.push_back(std::move(v));
  }
  return span(rows, n);
}

Subspace preimage(const Subspace& i, std::span<const std::size_t> coords) {
  const std::size_t n = i.ambient_dim();
  std::vector<bool> seen(n, false);
  for (std::size_t k : coords) {
    if (k >= n) throw InputError("preimage coordinate out of range");
    if (seen[k]) throw InputError("preimage coordinates must be distinct");
    seen[k] = true;
  }
  // I is cut out by its annihilator W (rows w with w.v = 0 for all v in I);
  // iota(a) lies in I iff W restricted to `coords` kills a.
  const Subspace annihilator = kernel(i.basis());
  Matrix restricted(annihilator.dim(), coords.size());
  for (std::size_t r = 0; r < annihilator.dim(); ++r)
    for (std::size_t c = 0; c < coords.size(); ++c) restricted(r, c) = annihilator.basis()(r, coords[c]);
  return kernel(restricted);
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  require_same_ambient(big, small);
  if (!big.contains(small)) throw PreconditionError("quotient_dim: divisor is not contained in the dividend");
  return big.dim() - small.dim();
}

}  // namespace genfx
