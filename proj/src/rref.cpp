#include "genfx/rref.hpp"

#include <utility>

namespace genfx {
namespace {

// Swaps the row holding the first nonzero in `col` (at or below `lead`) into
// position `lead` and scales it to a unit pivot. Returns false if the column
// has no pivot.
bool prepare_pivot(Matrix& m, std::size_t lead, std::size_t col) {
  std::size_t pivot_row = lead;
  while (pivot_row < m.rows() && sgn(m(pivot_row, col)) == 0) ++pivot_row;
  if (pivot_row == m.rows()) return false;
  if (pivot_row != lead) {
    auto a = m.row(pivot_row);
    auto b = m.row(lead);
    for (std::size_t j = col; j < m.cols(); ++j) std::swap(a[j], b[j]);
  }
  const Rational inv = 1 / m(lead, col);
  for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) *= inv;
  return true;
}

void eliminate_row(Matrix& m, std::size_t target, std::size_t lead, std::size_t col) {
  if (target == lead) return;
  const Rational factor = m(target, col);
  if (sgn(factor) == 0) return;
  auto dst = m.row(target);
  auto src = m.row(lead);
  for (std::size_t j = col; j < m.cols(); ++j) {
    if (sgn(src[j]) != 0) dst[j] -= factor * src[j];
  }
}

RrefResult finish(Matrix m, std::size_t rank, std::vector<std::size_t> pivots) {
  return RrefResult{m.row_block(0, rank), rank, std::move(pivots)};
}

}  // namespace

RrefResult rref_serial(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    if (!prepare_pivot(m, lead, col)) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) eliminate_row(m, r, lead, col);
    pivots.push_back(col);
    ++lead;
  }
  return finish(std::move(m), lead, std::move(pivots));
}

RrefResult rref(Matrix m) {
  if (m.rows() * m.cols() < kParallelRrefMinCells) return rref_serial(std::move(m));

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  const auto rows = static_cast<long>(m.rows());
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    if (!prepare_pivot(m, lead, col)) continue;
#pragma omp parallel for schedule(static)
    for (long r = 0; r < rows; ++r) eliminate_row(m, static_cast<std::size_t>(r), lead, col);
    pivots.push_back(col);
    ++lead;
  }
  return finish(std::move(m), lead, std::move(pivots));
}

}  // namespace genfx
