#include "genfx/linear_map.hpp"

#include <utility>

#include "genfx/errors.hpp"
#include "genfx/rref.hpp"

namespace genfx {

std::size_t rank(const Matrix& f) { return rref(f).rank; }

Subspace kernel(const Matrix& f) {
  const std::size_t n = f.cols();
  const auto r = rref(f);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector x(n);
    x[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.reduced(i, free);
    gens.push_back(std::move(x));
  }
  return span(gens, n);
}

Subspace image(const Matrix& f) { return Subspace::row_space(f.transpose()); }

std::size_t cokernel_dim(const Matrix& f) { return f.rows() - rank(f); }

bool is_injective(const Matrix& f) { return rank(f) == f.cols(); }

bool is_surjective(const Matrix& f) { return rank(f) == f.rows(); }

std::optional<Vector> solve(const Matrix& f, std::span<const Rational> b) {
  if (b.size() != f.rows()) throw InputError("right-hand side length does not match the map");
  Matrix rhs(f.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  const auto r = rref(hstack(f, rhs));
  Vector x(f.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == f.cols()) return std::nullopt;
    x[r.pivots[i]] = r.reduced(i, f.cols());
  }
  return x;
}

Matrix basis_columns(const Subspace& s) { return s.basis().transpose(); }

}  // namespace genfx
