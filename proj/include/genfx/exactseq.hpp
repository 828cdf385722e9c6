#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genfx/graph.hpp"
#include "genfx/matrix.hpp"
#include "genfx/subspace.hpp"

namespace genfx {

/// Outcome of an s-t path-emergence question.
enum class PathVerdict {
  EmergedPath,
  NoPath,
  AlreadyConnectedInG,
  AlreadyConnectedInG2,
};

std::string_view to_string(PathVerdict v);

/// Result of checking im = ker along a chain of maps.
struct ExactnessReport {
  bool exact = true;
  /// One human-readable line per failing node.
  std::vector<std::string> failures;
};

/// Audits 0 -> V_0 -> V_1 -> ... -> V_k -> 0, where maps[i] : V_i -> V_{i+1}
/// and dims[i] = dim V_i. Checks injectivity at the head, surjectivity at the
/// tail and im = ker at every interior node.
ExactnessReport audit_exact_sequence(std::span<const std::size_t> dims, std::span<const Matrix> maps);

/// A commutative diagram with exact rows
///
///     0 -> U  -f->  V  -g->  W  -> 0
///          |u       |v       |w
///     0 -> U' -f'-> V' -g'-> W' -> 0
///
/// Space dimensions are read off the matrix shapes.
struct Complex3x4 {
  Matrix f, g;
  Matrix f_bottom, g_bottom;
  Matrix u, v, w;

  std::size_t dim_u() const { return f.cols(); }
  std::size_t dim_v() const { return g.cols(); }
  std::size_t dim_w() const { return g.rows(); }
  std::size_t dim_u_bottom() const { return f_bottom.cols(); }
  std::size_t dim_v_bottom() const { return g_bottom.cols(); }
  std::size_t dim_w_bottom() const { return g_bottom.rows(); }
};

/// Throws PreconditionError naming the first failing node if the rows are
/// not exact, shapes disagree, or a square does not commute.
void validate(const Complex3x4& d);

/// The kernel-cokernel sequence
///   0 -> ker u -> ker v -> ker w -delta-> coker u -> coker v -> coker w -> 0
/// with kernels in their RREF bases and cokernels in complement bases.
struct SixTermSequence {
  std::array<std::size_t, 6> dims{};
  /// maps[k] : space k -> space k + 1; maps[2] is the connecting map.
  std::array<Matrix, 5> maps;
  ExactnessReport certificate;

  /// Sum of (-1)^k dims[k]; zero for any exact sequence.
  long alternating_sum() const;
};

/// Snake lemma, with delta built by lifting along g, applying v and pulling
/// back along f'. Throws InvariantError if the result fails its audit.
SixTermSequence snake(const Complex3x4& d);

/// The diagram 0 -> I n I' -> I (+) I' -> I + I' -> 0 over
/// 0 -> R^n -> R^n (+) R^n -> R^n -> 0 with inclusions as verticals.
Complex3x4 inclusion_diagram(const Subspace& i, const Subspace& i2);

/// The R^2 rows over the quotient rows R^n/(I n I') -> R^n/I (+) R^n/I' ->
/// R^n/(I + I'), verticals sending the generators of R^2 to e_s, e_t.
Complex3x4 endpoint_diagram(const Graph& g, const Graph& g2, Vertex s, Vertex t);

/// 0 -> Phi(I_G n I_G') -> Phi I_G (+) Phi I_G' -> Phi I_{G u G'}
///   -> H(I_G n I_G') -> H I_G (+) H I_G' -> H I_{G u G'} -> 0
SixTermSequence six_term_for_pair(const Graph& g, const Graph& g2, Vertex s, Vertex t);

struct SplitDimensions {
  /// dim coker(V_0 -> V_1).
  std::size_t coker_head = 0;
  /// dim ker(V_3 -> V_4).
  std::size_t ker_fourth = 0;
  /// coker_head + ker_fourth; equals dims[2] on an exact sequence.
  std::size_t middle = 0;
  /// dim coker(V_3 -> V_4); equals dims[5] on an exact sequence.
  std::size_t tail = 0;
};

/// V_2 = coker(V_0 -> V_1) (+) ker(V_3 -> V_4) and V_5 = coker(V_3 -> V_4).
SplitDimensions split(const SixTermSequence& seq);

struct SameVertexEmergence {
  PathVerdict verdict = PathVerdict::NoPath;
  /// dim (I_G + E) n (I_G' + E), E = <e_s, e_t>.
  std::size_t numerator_dim = 0;
  /// dim (I_G n I_G') + E.
  std::size_t denominator_dim = 0;
};

/// Path emergence for two graphs on the same vertices, by comparing the
/// numerator and denominator dimensions of ker(H(i), H(i')).
SameVertexEmergence emergence_same_vertices(const Graph& g, const Graph& g2, Vertex s, Vertex t);

}  // namespace genfx
