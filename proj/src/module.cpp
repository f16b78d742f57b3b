#include "gcdim/module.hpp"

#include <algorithm>


namespace gcdim {

namespace {

void check_action(const Algebra& a, std::size_t dim, const std::vector<Matrix>& action) {
  const Field& f = a.field();
  if (action.size() != a.dim()) throw InputError("module needs one action matrix per algebra basis element");
  for (const auto& m : action) {
    if (m.rows() != dim || m.cols() != dim) throw InputError("action matrix has wrong shape");
    if (m.field() != f) throw InputError("action matrix is over a different field");
  }
  Matrix unit(f, dim, dim);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.unit()[i] != 0) unit = unit + action[i].scaled(a.unit()[i]);
  }
  if (unit != Matrix::identity(f, dim)) throw InputError("algebra unit does not act as the identity");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix expected(f, dim, dim);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (a.structure(i, j, k) != 0) expected = expected + action[k].scaled(a.structure(i, j, k));
      }
      if (action[i] * action[j] != expected) {
        throw InputError("action is not multiplicative on basis elements " + a.labels()[i] + ", " + a.labels()[j]);
      }
    }
  }
}

/// Left inverse of a full-column-rank matrix, built from an invertible row subset.
Matrix left_inverse(const Matrix& k) {
  const Field& f = k.field();
  auto rows = independent_columns(k.transpose());
  if (rows.size() != k.cols()) throw InternalError("subspace basis is not linearly independent");
  Matrix square = k.select_rows(rows);
  auto inv = solve(square, Matrix::identity(f, square.rows()));
  if (!inv) throw InternalError("selected rows are singular");
  Matrix selector(f, k.cols(), k.rows());
  for (std::size_t r = 0; r < rows.size(); ++r) selector(r, rows[r]) = 1;
  return *inv * selector;
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<Matrix> action) {
  if (!algebra) throw InputError("module without an algebra");
  std::size_t dim = action.empty() ? 0 : action.front().rows();
  check_action(*algebra, dim, action);
  auto d = std::make_shared<Data>();
  d->algebra = std::move(algebra);
  d->dim = dim;
  d->action = std::move(action);
  d_ = std::move(d);
}

Module Module::trusted(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action,
                       std::optional<std::size_t> free_rank) {
  auto d = std::make_shared<Data>();
  d->algebra = std::move(algebra);
  d->dim = dim;
  d->action = std::move(action);
  d->free_rank = free_rank;
  return Module(std::shared_ptr<const Data>(std::move(d)));
}

Module Module::zero(AlgebraPtr algebra) {
  const Field f = algebra->field();
  std::vector<Matrix> action(algebra->dim(), Matrix(f, 0, 0));
  return trusted(std::move(algebra), 0, std::move(action), 0);
}

Module Module::regular(AlgebraPtr algebra) { return free(std::move(algebra), 1); }

Module Module::free(AlgebraPtr algebra, std::size_t rank) {
  const Field f = algebra->field();
  std::vector<Matrix> action;
  action.reserve(algebra->dim());
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    std::vector<Matrix> blocks(rank, algebra->left_multiplication(i));
    action.push_back(Matrix::block_diagonal(f, blocks));
  }
  std::size_t dim = rank * algebra->dim();
  return trusted(std::move(algebra), dim, std::move(action), rank);
}

Matrix Module::action_of(const Vector& element) const {
  const Algebra& a = *algebra();
  if (element.size() != a.dim()) throw InputError("algebra element has wrong length");
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (element[i] != 0) m = m + action(i).scaled(element[i]);
  }
  return m;
}

bool Module::operator==(const Module& o) const {
  if (d_ == o.d_) return true;
  return same_algebra(algebra(), o.algebra()) && dim() == o.dim() && actions() == o.actions();
}

bool intertwines(const Module& source, const Module& target, const Matrix& matrix) {
  if (!same_algebra(source.algebra(), target.algebra())) return false;
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
  for (auto g : source.algebra()->generators()) {
    if (matrix * source.action(g) != target.action(g) * matrix) return false;
  }
  return true;
}

ModuleHom::ModuleHom(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!same_algebra(source_.algebra(), target_.algebra())) throw InputError("hom between modules over different algebras");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) throw InputError("hom matrix has wrong shape");
  if (!intertwines(source_, target_, matrix_)) throw InputError("matrix does not intertwine the module actions");
}

ModuleHom::ModuleHom(Module source, Module target, Matrix matrix, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

ModuleHom ModuleHom::trusted(Module source, Module target, Matrix matrix) {
  return ModuleHom(std::move(source), std::move(target), std::move(matrix), Unchecked{});
}

ModuleHom ModuleHom::identity(const Module& m) { return trusted(m, m, Matrix::identity(m.field(), m.dim())); }

ModuleHom ModuleHom::zero(const Module& source, const Module& target) {
  return trusted(source, target, Matrix(source.field(), target.dim(), source.dim()));
}

ModuleHom ModuleHom::compose(const ModuleHom& other) const {
  if (other.target_.dim() != source_.dim()) throw InputError("composition of incompatible homs");
  return trusted(other.source_, target_, matrix_ * other.matrix_);
}

std::vector<ModuleHom> hom_basis(const Module& m, const Module& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw InputError("hom_basis: modules over different algebras");
  const Field& f = m.field();
  const std::size_t p = m.dim(), q = n.dim();
  std::vector<ModuleHom> out;
  if (p == 0 || q == 0) return out;

  if (auto g = m.free_rank()) {
    // Hom(A^g, n) ~ n^g: a hom is determined by where the generators go.
    for (std::size_t j = 0; j < *g; ++j) {
      for (std::size_t t = 0; t < q; ++t) {
        Vector images(*g * q);
        images[j * q + t] = 1;
        Matrix mat(f, q, p);
        const std::size_t d = m.algebra()->dim();
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t r = 0; r < q; ++r) mat(r, j * d + k) = n.action(k)(r, t);
        }
        out.push_back(ModuleHom::trusted(m, n, std::move(mat)));
      }
    }
    return out;
  }

  // Unknown X (q x p), variable r*p + c. For each generator g:
  // (X A_g)[r][c] - (B_g X)[r][c] = 0.
  const auto& gens = m.algebra()->generators();
  Matrix system(f, gens.size() * q * p, q * p);
  std::size_t row = 0;
  for (auto g : gens) {
    const Matrix& a = m.action(g);
    const Matrix& b = n.action(g);
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t c = 0; c < p; ++c, ++row) {
        for (std::size_t k = 0; k < p; ++k) {
          if (a(k, c) != 0) system(row, r * p + k) = f.add(system(row, r * p + k), a(k, c));
        }
        for (std::size_t k = 0; k < q; ++k) {
          if (b(r, k) != 0) system(row, k * p + c) = f.sub(system(row, k * p + c), b(r, k));
        }
      }
    }
  }
  Matrix ker = kernel_basis(system);
  for (std::size_t col = 0; col < ker.cols(); ++col) {
    Matrix x(f, q, p);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < p; ++c) x(r, c) = ker(r * p + c, col);
    out.push_back(ModuleHom::trusted(m, n, std::move(x)));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) {
  if (auto g = m.free_rank()) return *g * n.dim();
  return hom_basis(m, n).size();
}

DirectSum direct_sum(std::span<const Module> parts) {
  if (parts.empty()) throw InputError("direct sum of no modules");
  const AlgebraPtr& alg = parts.front().algebra();
  const Field& f = alg->field();
  std::size_t total = 0;
  bool all_free = true;
  std::size_t free_total = 0;
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), alg)) throw InputError("direct sum of modules over different algebras");
    total += p.dim();
    if (p.free_rank()) {
      free_total += *p.free_rank();
    } else {
      all_free = false;
    }
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(i));
    action.push_back(Matrix::block_diagonal(f, blocks));
  }
  Module sum = Module::trusted(alg, total, std::move(action),
                               all_free ? std::optional<std::size_t>(free_total) : std::nullopt);
  DirectSum out{sum, {}, {}};
  std::size_t offset = 0;
  for (const auto& p : parts) {
    Matrix inc(f, total, p.dim()), proj(f, p.dim(), total);
    for (std::size_t k = 0; k < p.dim(); ++k) {
      inc(offset + k, k) = 1;
      proj(k, offset + k) = 1;
    }
    out.inclusions.push_back(ModuleHom::trusted(p, sum, std::move(inc)));
    out.projections.push_back(ModuleHom::trusted(sum, p, std::move(proj)));
    offset += p.dim();
  }
  return out;
}

Module direct_sum(const Module& a, const Module& b) {
  std::vector<Module> parts{a, b};
  return direct_sum(parts).sum;
}

Module power(const Module& m, std::size_t copies) {
  if (copies == 0) return Module::zero(m.algebra());
  std::vector<Module> parts(copies, m);
  return direct_sum(parts).sum;
}

Submodule submodule(const Module& m, const Matrix& basis) {
  const Field& f = m.field();
  const AlgebraPtr& alg = m.algebra();
  const std::size_t k = basis.cols();
  if (basis.rows() != m.dim()) throw InputError("submodule basis has wrong length");
  if (k == 0) {
    Module z = Module::zero(alg);
    return {z, ModuleHom::trusted(z, m, Matrix(f, m.dim(), 0))};
  }
  Matrix linv = left_inverse(basis);
  std::vector<Matrix> action;
  action.reserve(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    Matrix image = m.action(i) * basis;
    Matrix restricted = linv * image;
    if (basis * restricted != image) throw InternalError("subspace is not invariant under the algebra action");
    action.push_back(std::move(restricted));
  }
  Module sub = Module::trusted(alg, k, std::move(action));
  return {sub, ModuleHom::trusted(sub, m, basis)};
}

Quotient quotient(const Module& m, const Matrix& span) {
  const Field& f = m.field();
  const AlgebraPtr& alg = m.algebra();
  const std::size_t n = m.dim();
  if (span.rows() != n) throw InputError("quotient subspace has wrong length");
  // Rows of the reduced transpose span the subspace; standard basis vectors at
  // non-pivot coordinates span a complement.
  std::vector<std::size_t> pivots;
  Matrix reduced(f, 0, n);
  if (!span.empty()) {
    auto r = rref(span.transpose());
    pivots = r.pivots;
    reduced = r.reduced.submatrix(0, pivots.size(), 0, n);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) complement.push_back(j);
  }
  const std::size_t qd = complement.size();
  // proj(v) = (v - sum_i v[p_i] row_i) restricted to complement coordinates.
  Matrix proj(f, qd, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector v(n);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      Scalar coef = v[pivots[i]];
      if (coef == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reduced(i, j) != 0) v[j] = f.sub(v[j], f.mul(coef, reduced(i, j)));
      }
    }
    for (std::size_t r = 0; r < qd; ++r) proj(r, c) = v[complement[r]];
  }
  Matrix lift(f, n, qd);
  for (std::size_t r = 0; r < qd; ++r) lift(complement[r], r) = 1;
  std::vector<Matrix> action;
  action.reserve(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    Matrix qa = proj * m.action(i);
    if (!span.empty() && !(qa * span).is_zero()) throw InternalError("quotient by a non-invariant subspace");
    action.push_back(qa * lift);
  }
  Module q = Module::trusted(alg, qd, std::move(action));
  return {q, ModuleHom::trusted(m, q, std::move(proj))};
}

Submodule kernel_of(const ModuleHom& f) { return submodule(f.source(), kernel_basis(f.matrix())); }

Quotient cokernel_of(const ModuleHom& f) { return quotient(f.target(), f.matrix()); }

Image image_of(const ModuleHom& f) {
  auto cols = independent_columns(f.matrix());
  Submodule sub = submodule(f.target(), f.matrix().select_columns(cols));
  // Coordinates of f(x) in the chosen column basis.
  Matrix coords(f.matrix().field(), cols.size(), f.source().dim());
  if (!cols.empty()) {
    auto c = solve(f.matrix().select_columns(cols), f.matrix());
    if (!c) throw InternalError("image coordinates not solvable");
    coords = *c;
  }
  return {sub.module, sub.inclusion, ModuleHom::trusted(f.source(), sub.module, std::move(coords))};
}

std::optional<ModuleHom> find_isomorphism(const Module& m, const Module& n, std::size_t attempts) {
  if (!same_algebra(m.algebra(), n.algebra()) || m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return ModuleHom::trusted(m, n, Matrix(m.field(), 0, 0));
  auto basis = hom_basis(m, n);
  if (basis.empty()) return std::nullopt;
  for (const auto& h : basis) {
    if (h.is_bijective()) return h;
  }
  const Field& f = m.field();
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (std::size_t t = 0; t < attempts; ++t) {
    Matrix acc(f, n.dim(), m.dim());
    for (const auto& h : basis) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      long long c = static_cast<long long>((state >> 33) % 7) - 3;
      if (c != 0) acc = acc + h.matrix().scaled(f.from_int(c));
    }
    if (rank(acc) == m.dim()) return ModuleHom::trusted(m, n, std::move(acc));
  }
  return std::nullopt;
}

EndomorphismAlgebra endomorphism_algebra(const Module& m) {
  if (m.dim() == 0) throw InputError("endomorphism algebra of the zero module");
  const Field& f = m.field();
  auto basis = hom_basis(m, m);
  const std::size_t r = basis.size(), n = m.dim();
  auto flatten = [&](const Matrix& x) {
    Vector v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = x(i, j);
    return v;
  };
  std::vector<Vector> cols;
  for (const auto& h : basis) cols.push_back(flatten(h.matrix()));
  Matrix flat = Matrix::from_columns(f, n * n, cols);

  std::vector<Vector> rhs;
  rhs.reserve(r * r + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rhs.push_back(flatten(basis[i].matrix() * basis[j].matrix()));
  rhs.push_back(flatten(Matrix::identity(f, n)));
  auto coords = solve(flat, Matrix::from_columns(f, n * n, rhs));
  if (!coords) throw InternalError("endomorphism products leave the endomorphism space");

  std::vector<Scalar> structure(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) structure[(i * r + j) * r + k] = (*coords)(k, i * r + j);
  Vector unit(r);
  for (std::size_t k = 0; k < r; ++k) unit[k] = (*coords)(k, r * r);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("h" + std::to_string(i));
  auto alg = std::make_shared<const Algebra>(f, r, std::move(structure), std::move(unit), std::move(labels));
  return {alg, std::move(basis)};
}

Module module_over_endomorphisms(const Module& m, const EndomorphismAlgebra& e) {
  std::vector<Matrix> action;
  for (const auto& h : e.basis) action.push_back(h.matrix());
  return Module::trusted(e.algebra, m.dim(), std::move(action));
}

Module from_representation(AlgebraPtr algebra, const std::vector<std::size_t>& dims,
                           const std::vector<Matrix>& arrow_maps) {
  const auto& pb = algebra->path_basis();
  if (!pb) throw InputError("representation data needs a quiver-presented algebra");
  const Field& f = algebra->field();
  if (dims.size() != pb->vertices) throw InputError("dimension vector length does not match the vertex count");
  if (arrow_maps.size() != pb->arrows.size()) throw InputError("need one matrix per arrow");
  std::vector<std::size_t> offset(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v) offset[v + 1] = offset[v] + dims[v];
  const std::size_t total = offset.back();
  for (std::size_t a = 0; a < arrow_maps.size(); ++a) {
    const auto& arrow = pb->arrows[a];
    if (arrow_maps[a].rows() != dims[arrow.source] || arrow_maps[a].cols() != dims[arrow.target]) {
      throw InputError("matrix for arrow '" + arrow.name + "' must be dim(source) x dim(target)");
    }
  }
  std::vector<Matrix> action;
  for (const auto& el : pb->elements) {
    Matrix m(f, total, total);
    Matrix block = Matrix::identity(f, dims[el.start]);
    for (auto a : el.arrows) block = block * arrow_maps[a];
    m.set_block(offset[el.start], offset[el.end], block);
    action.push_back(std::move(m));
  }
  return Module(std::move(algebra), std::move(action));
}

Module simple_module(AlgebraPtr algebra, std::size_t vertex) {
  const auto& pb = algebra->path_basis();
  if (!pb) throw InputError("simple modules by vertex need a quiver-presented algebra");
  if (vertex >= pb->vertices) throw InputError("vertex out of range");
  std::vector<std::size_t> dims(pb->vertices, 0);
  dims[vertex] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : pb->arrows) maps.emplace_back(algebra->field(), dims[a.source], dims[a.target]);
  return from_representation(std::move(algebra), dims, maps);
}

Module indecomposable_projective(AlgebraPtr algebra, const Vector& idempotent) {
  Module reg = Module::regular(algebra);
  // A e: image of right multiplication by e.
  Matrix re(algebra->field(), algebra->dim(), algebra->dim());
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    if (idempotent[i] != 0) re = re + algebra->right_multiplication(i).scaled(idempotent[i]);
  }
  auto cols = independent_columns(re);
  return submodule(reg, re.select_columns(cols)).module;
}

Module indecomposable_injective(AlgebraPtr algebra, const Vector& idempotent) {
  const Field& f = algebra->field();
  const std::size_t d = algebra->dim();
  // U = e A, a right ideal; D(U) carries (a phi)(u) = phi(u a), i.e. the
  // transpose of right multiplication restricted to U.
  Matrix le = algebra->left_multiplication(idempotent);
  auto cols = independent_columns(le);
  Matrix u = le.select_columns(cols);
  Matrix linv = left_inverse(u);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix restricted = linv * (algebra->right_multiplication(i) * u);
    action.push_back(restricted.transpose());
  }
  (void)f;
  return Module(std::move(algebra), std::move(action));
}

Module dual_of_right_regular(AlgebraPtr algebra) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < algebra->dim(); ++i) action.push_back(algebra->right_multiplication(i).transpose());
  const std::size_t d = algebra->dim();
  return Module::trusted(std::move(algebra), d, std::move(action));
}

std::optional<Module> top_of_regular(AlgebraPtr algebra) {
  auto rad = algebra->radical();
  if (!rad) return std::nullopt;
  return quotient(Module::regular(std::move(algebra)), *rad).module;
}

}  // namespace gcdim
