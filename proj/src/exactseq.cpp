#include "genfx/exactseq.hpp"

#include "genfx/errors.hpp"
#include "genfx/graphlift.hpp"
#include "genfx/linear_map.hpp"

namespace genfx {

std::string_view to_string(PathVerdict v) {
  switch (v) {
    case PathVerdict::EmergedPath: return "EmergedPath";
    case PathVerdict::NoPath: return "NoPath";
    case PathVerdict::AlreadyConnectedInG: return "AlreadyConnectedInG";
    case PathVerdict::AlreadyConnectedInG2: return "AlreadyConnectedInG2";
  }
  return "?";
}

ExactnessReport audit_exact_sequence(std::span<const std::size_t> dims, std::span<const Matrix> maps) {
  if (maps.empty() || dims.size() != maps.size() + 1) {
    throw InputError("an exact-sequence audit needs k maps between k + 1 spaces");
  }
  ExactnessReport report;
  auto fail = [&](std::string msg) {
    report.exact = false;
    report.failures.push_back(std::move(msg));
  };

  std::vector<std::size_t> ranks(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].rows() != dims[i + 1] || maps[i].cols() != dims[i]) {
      throw InputError("map " + std::to_string(i) + " has the wrong shape for its spaces");
    }
    ranks[i] = rank(maps[i]);
  }
  if (ranks.front() != dims.front()) fail("node 0: first map is not injective");
  if (ranks.back() != dims.back()) fail("node " + std::to_string(dims.size() - 1) + ": last map is not surjective");
  for (std::size_t node = 1; node + 1 < dims.size(); ++node) {
    const Matrix composite = maps[node] * maps[node - 1];
    if (!composite.is_zero()) {
      fail("node " + std::to_string(node) + ": image is not inside the kernel");
    } else if (ranks[node - 1] != dims[node] - ranks[node]) {
      fail("node " + std::to_string(node) + ": image is strictly smaller than the kernel");
    }
  }
  return report;
}

void validate(const Complex3x4& d) {
  auto shape = [](const Matrix& m, std::size_t r, std::size_t c, const char* name) {
    if (m.rows() != r || m.cols() != c) throw PreconditionError(std::string("diagram map ") + name + " has the wrong shape");
  };
  shape(d.f, d.dim_v(), d.dim_u(), "f");
  shape(d.f_bottom, d.dim_v_bottom(), d.dim_u_bottom(), "f'");
  shape(d.u, d.dim_u_bottom(), d.dim_u(), "u");
  shape(d.v, d.dim_v_bottom(), d.dim_v(), "v");
  shape(d.w, d.dim_w_bottom(), d.dim_w(), "w");

  const std::size_t top_dims[] = {d.dim_u(), d.dim_v(), d.dim_w()};
  const Matrix top_maps[] = {d.f, d.g};
  if (auto r = audit_exact_sequence(top_dims, top_maps); !r.exact) {
    throw PreconditionError("top row is not exact: " + r.failures.front());
  }
  const std::size_t bottom_dims[] = {d.dim_u_bottom(), d.dim_v_bottom(), d.dim_w_bottom()};
  const Matrix bottom_maps[] = {d.f_bottom, d.g_bottom};
  if (auto r = audit_exact_sequence(bottom_dims, bottom_maps); !r.exact) {
    throw PreconditionError("bottom row is not exact: " + r.failures.front());
  }
  if (d.v * d.f != d.f_bottom * d.u) throw PreconditionError("left square does not commute");
  if (d.w * d.g != d.g_bottom * d.v) throw PreconditionError("right square does not commute");
}

long SixTermSequence::alternating_sum() const {
  long total = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    total += (k % 2 == 0 ? 1 : -1) * static_cast<long>(dims[k]);
  }
  return total;
}

namespace {

// Restriction of `map` to ker_from -> ker_to, in RREF bases.
Matrix restrict_to_kernels(const Matrix& map, const Subspace& ker_from, const Subspace& ker_to) {
  Matrix out(ker_to.dim(), ker_from.dim());
  for (std::size_t j = 0; j < ker_from.dim(); ++j) {
    const Vector image = map * ker_from.basis().row(j);
    const Vector c = ker_to.coordinates_of(image);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

// Map induced by `map` on cokernels: V/im_from -> W/im_to.
Matrix induce_on_cokernels(const Matrix& map, const Subspace& im_from, const Subspace& im_to) {
  const auto free = im_from.complement_coords();
  Matrix out(im_to.ambient_dim() - im_to.dim(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    const Vector q = im_to.quotient_coordinates(map.column(free[j]));
    for (std::size_t i = 0; i < q.size(); ++i) out(i, j) = q[i];
  }
  return out;
}

}  // namespace

SixTermSequence snake(const Complex3x4& d) {
  validate(d);
  const Subspace ker_u = kernel(d.u);
  const Subspace ker_v = kernel(d.v);
  const Subspace ker_w = kernel(d.w);
  const Subspace im_u = image(d.u);
  const Subspace im_v = image(d.v);
  const Subspace im_w = image(d.w);

  SixTermSequence seq;
  seq.dims = {ker_u.dim(),
              ker_v.dim(),
              ker_w.dim(),
              d.dim_u_bottom() - im_u.dim(),
              d.dim_v_bottom() - im_v.dim(),
              d.dim_w_bottom() - im_w.dim()};

  seq.maps[0] = restrict_to_kernels(d.f, ker_u, ker_v);
  seq.maps[1] = restrict_to_kernels(d.g, ker_v, ker_w);

  Matrix delta(seq.dims[3], ker_w.dim());
  for (std::size_t j = 0; j < ker_w.dim(); ++j) {
    const auto lifted = solve(d.g, ker_w.basis().row(j));
    if (!lifted) throw InvariantError("snake: g is not surjective onto ker w");
    const Vector pushed = d.v * *lifted;
    const auto pulled = solve(d.f_bottom, pushed);
    if (!pulled) throw InvariantError("snake: v(lift) does not land in im f'");
    const Vector q = im_u.quotient_coordinates(*pulled);
    for (std::size_t i = 0; i < q.size(); ++i) delta(i, j) = q[i];
  }
  seq.maps[2] = std::move(delta);

  seq.maps[3] = induce_on_cokernels(d.f_bottom, im_u, im_v);
  seq.maps[4] = induce_on_cokernels(d.g_bottom, im_v, im_w);

  seq.certificate = audit_exact_sequence(seq.dims, seq.maps);
  if (!seq.certificate.exact) {
    throw InvariantError("snake produced a non-exact sequence: " + seq.certificate.failures.front());
  }
  return seq;
}

Complex3x4 inclusion_diagram(const Subspace& i, const Subspace& i2) {
  require_same_ambient(i, i2);
  const std::size_t n = i.ambient_dim();
  const Subspace common = intersect(i, i2);
  const Subspace total = sum(i, i2);

  Complex3x4 d;
  // f: I n I' -> I (+) I',  x -> (x, x).
  d.f = Matrix(i.dim() + i2.dim(), common.dim());
  for (std::size_t j = 0; j < common.dim(); ++j) {
    const auto x = common.basis().row(j);
    const Vector a = i.coordinates_of(x);
    const Vector b = i2.coordinates_of(x);
    for (std::size_t r = 0; r < a.size(); ++r) d.f(r, j) = a[r];
    for (std::size_t r = 0; r < b.size(); ++r) d.f(i.dim() + r, j) = b[r];
  }
  // g: I (+) I' -> I + I',  (a, b) -> a - b.
  d.g = Matrix(total.dim(), i.dim() + i2.dim());
  for (std::size_t j = 0; j < i.dim(); ++j) {
    const Vector c = total.coordinates_of(i.basis().row(j));
    for (std::size_t r = 0; r < c.size(); ++r) d.g(r, j) = c[r];
  }
  for (std::size_t j = 0; j < i2.dim(); ++j) {
    const Vector c = total.coordinates_of(i2.basis().row(j));
    for (std::size_t r = 0; r < c.size(); ++r) d.g(r, i.dim() + j) = -c[r];
  }
  const Matrix id = Matrix::identity(n);
  d.f_bottom = vstack(id, id);
  d.g_bottom = hstack(id, Matrix::zero(n, n) - id);
  d.u = basis_columns(common);
  d.v = block_diagonal(basis_columns(i), basis_columns(i2));
  d.w = basis_columns(total);
  return d;
}

namespace {

// R^n/from -> R^n/to induced by the identity; requires from <= to.
Matrix quotient_map(const Subspace& from, const Subspace& to) {
  const auto free = from.complement_coords();
  const std::size_t n = from.ambient_dim();
  Matrix out(n - to.dim(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    const Vector q = to.quotient_coordinates(unit_vector(n, free[j]));
    for (std::size_t i = 0; i < q.size(); ++i) out(i, j) = q[i];
  }
  return out;
}

// R^2 -> R^n/j, generators to the classes of e_s, e_t.
Matrix endpoint_map(const Subspace& j, Vertex s, Vertex t) {
  const std::size_t n = j.ambient_dim();
  const Vector qs = j.quotient_coordinates(unit_vector(n, s - 1));
  const Vector qt = j.quotient_coordinates(unit_vector(n, t - 1));
  Matrix out(qs.size(), 2);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    out(i, 0) = qs[i];
    out(i, 1) = qt[i];
  }
  return out;
}

}  // namespace

Complex3x4 endpoint_diagram(const Graph& g, const Graph& g2, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  if (g2.vertex_count() != n) throw InputError("graphs must share the vertex set");
  if (s < 1 || s > n || t < 1 || t > n) throw InputError("endpoint outside the vertex set");
  if (s == t) throw InputError("endpoints s and t must differ");

  const Subspace i = edge_space(g);
  const Subspace i2 = edge_space(g2);
  const Subspace common = intersect(i, i2);
  const Subspace total = sum(i, i2);

  Complex3x4 d;
  const Matrix id2 = Matrix::identity(2);
  d.f = vstack(id2, id2);
  d.g = hstack(id2, Matrix::zero(2, 2) - id2);
  d.f_bottom = vstack(quotient_map(common, i), quotient_map(common, i2));
  d.g_bottom = hstack(quotient_map(i, total), Matrix::zero(n - total.dim(), n - i2.dim()) - quotient_map(i2, total));
  d.u = endpoint_map(common, s, t);
  d.v = block_diagonal(endpoint_map(i, s, t), endpoint_map(i2, s, t));
  d.w = endpoint_map(total, s, t);
  return d;
}

SixTermSequence six_term_for_pair(const Graph& g, const Graph& g2, Vertex s, Vertex t) {
  return snake(endpoint_diagram(g, g2, s, t));
}

SplitDimensions split(const SixTermSequence& seq) {
  if (!seq.certificate.exact) throw PreconditionError("split needs an exact sequence");
  SplitDimensions out;
  const std::size_t rank_head = rank(seq.maps[0]);
  const std::size_t rank_fourth = rank(seq.maps[3]);
  out.coker_head = seq.dims[1] - rank_head;
  out.ker_fourth = seq.dims[3] - rank_fourth;
  out.middle = out.coker_head + out.ker_fourth;
  out.tail = seq.dims[4] - rank_fourth;
  return out;
}

SameVertexEmergence emergence_same_vertices(const Graph& g, const Graph& g2, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  if (g2.vertex_count() != n) throw InputError("graphs must share the vertex set");
  if (s == t) throw InputError("endpoints s and t must differ");

  const Subspace i = edge_space(g);
  const Subspace i2 = edge_space(g2);
  const Vector diff = endpoint_difference(n, s, t);
  if (i.contains(diff)) return {PathVerdict::AlreadyConnectedInG, 0, 0};
  if (i2.contains(diff)) return {PathVerdict::AlreadyConnectedInG2, 0, 0};

  const Vertex ends[] = {s, t};
  const Subspace e = endpoint_space(n, ends);
  const Subspace numerator = intersect(sum(i, e), sum(i2, e));
  const Subspace denominator = sum(intersect(i, i2), e);
  const std::size_t extra = quotient_dim(numerator, denominator);

  SameVertexEmergence out;
  out.numerator_dim = numerator.dim();
  out.denominator_dim = denominator.dim();
  out.verdict = extra > 0 ? PathVerdict::EmergedPath : PathVerdict::NoPath;
  return out;
}

}  // namespace genfx
