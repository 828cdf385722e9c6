#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "genfx/matrix.hpp"
#include "genfx/subspace.hpp"

namespace genfx {

std::size_t rank(const Matrix& f);

/// {x : f x = 0} as a subspace of the domain R^cols.
Subspace kernel(const Matrix& f);
/// Column space of f as a subspace of the codomain R^rows.
Subspace image(const Matrix& f);
/// rows - rank.
std::size_t cokernel_dim(const Matrix& f);

bool is_injective(const Matrix& f);
bool is_surjective(const Matrix& f);

/// Some x with f x = b, or nullopt if b is not in the image.
std::optional<Vector> solve(const Matrix& f, std::span<const Rational> b);

/// Matrix whose columns are the basis vectors of s.
Matrix basis_columns(const Subspace& s);

}  // namespace genfx
