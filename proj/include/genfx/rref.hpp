#pragma once

#include <cstddef>
#include <vector>

#include "genfx/matrix.hpp"

namespace genfx {

struct RrefResult {
  /// Reduced row echelon form with zero rows removed.
  Matrix reduced;
  std::size_t rank = 0;
  /// Pivot column of each row of `reduced`, strictly increasing.
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form.
///
/// Eliminating a pivot column touches every other row independently, so
/// that step runs as an OpenMP parallel loop once the matrix is large
/// enough to pay for the fork. Results are bit-identical to rref_serial.
RrefResult rref(Matrix m);

/// Single-threaded reference kernel, kept for testing and benchmarking.
RrefResult rref_serial(Matrix m);

/// Matrix size (rows x cols) from which rref() parallelises elimination.
inline constexpr std::size_t kParallelRrefMinCells = 2048;

}  // namespace genfx
