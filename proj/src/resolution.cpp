#include "gcdim/resolution.hpp"


namespace gcdim {

namespace {

/// Surjection from A^g to m given the generator images.
FreeCover cover_from_generators(const Module& m, std::vector<Vector> gens) {
  const AlgebraPtr& alg = m.algebra();
  Module free = Module::free(alg, gens.size());
  Matrix surj(m.field(), m.dim(), gens.size() * alg->dim());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t k = 0; k < alg->dim(); ++k) {
      Vector img = m.action(k).apply(gens[j]);
      for (std::size_t r = 0; r < m.dim(); ++r) surj(r, j * alg->dim() + k) = img[r];
    }
  }
  return {free, ModuleHom::trusted(free, m, std::move(surj)), std::move(gens)};
}

/// Adds the cyclic submodule A v to the span.
void add_orbit(EchelonBasis& span, const Module& m, const Vector& v) {
  for (std::size_t k = 0; k < m.algebra()->dim(); ++k) span.add(m.action(k).apply(v));
}

bool generates(const Module& m, const EchelonBasis& base, const std::vector<Vector>& gens) {
  EchelonBasis span = base;
  for (const auto& g : gens) {
    add_orbit(span, m, g);
    if (span.dim() == m.dim()) return true;
  }
  return span.dim() == m.dim();
}

/// Greedy choice over the basis order, then each generator is folded into an
/// earlier one whenever the sum still does the job.
std::vector<Vector> greedy_generators(const Module& m, const EchelonBasis& base) {
  EchelonBasis span = base;
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < m.dim() && span.dim() < m.dim(); ++i) {
    Vector e(m.dim());
    e[i] = 1;
    if (span.contains(e)) continue;
    gens.push_back(e);
    add_orbit(span, m, e);
  }
  const Field& f = m.field();
  for (std::size_t j = 1; j < gens.size();) {
    bool merged = false;
    for (std::size_t i = 0; i < j && !merged; ++i) {
      std::vector<Vector> trial;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k == j) continue;
        if (k == i) {
          Vector sum = gens[i];
          for (std::size_t r = 0; r < sum.size(); ++r) sum[r] = f.add(sum[r], gens[j][r]);
          trial.push_back(std::move(sum));
        } else {
          trial.push_back(gens[k]);
        }
      }
      if (generates(m, base, trial)) {
        gens = std::move(trial);
        merged = true;
      }
    }
    if (!merged) ++j;
  }
  return gens;
}

}  // namespace

FreeCover free_cover(const Module& m, std::size_t extra_generators) {
  EchelonBasis span(m.field(), m.dim());
  auto gens = greedy_generators(m, span);
  for (std::size_t t = 0; t < extra_generators; ++t) gens.push_back(Vector(m.dim()));
  return cover_from_generators(m, std::move(gens));
}

FreeCover free_cover_modulo(const Module& m, const Matrix& covered) {
  if (covered.rows() != m.dim()) throw InputError("covered subspace has wrong length");
  EchelonBasis span(m.field(), m.dim());
  for (std::size_t c = 0; c < covered.cols(); ++c) add_orbit(span, m, covered.column_vector(c));
  return cover_from_generators(m, greedy_generators(m, span));
}

namespace {

FreeCover initial_cover(const Module& m, std::size_t extra) { return free_cover(m, extra); }

}  // namespace

FreeResolution::FreeResolution(Module m, std::size_t extra_generators)
    : module_(m), extra_(extra_generators), augmentation_(ModuleHom::identity(m)) {
  FreeCover cover = initial_cover(m, extra_);
  augmentation_ = cover.surjection;
  free_.push_back(cover.free);
  covers_.push_back(cover.surjection);
  syzygies_.push_back(m);
  Submodule k = kernel_of(cover.surjection);
  syzygies_.push_back(k.module);
  syzygy_inclusions_.push_back(k.inclusion);
}

void FreeResolution::push_step() {
  const std::size_t k = free_.size();
  const Module& omega = syzygies_[k];
  FreeCover cover = free_cover(omega, extra_);
  const ModuleHom& incl = syzygy_inclusions_[k - 1];
  differentials_.push_back(ModuleHom::trusted(cover.free, free_[k - 1], incl.matrix() * cover.surjection.matrix()));
  free_.push_back(cover.free);
  covers_.push_back(cover.surjection);
  Submodule next = kernel_of(cover.surjection);
  syzygies_.push_back(next.module);
  syzygy_inclusions_.push_back(next.inclusion);
}

FreeResolution FreeResolution::extended(std::size_t length) const {
  FreeResolution out = *this;
  while (out.length() < length) out.push_step();
  return out;
}

std::shared_ptr<const FreeResolution> Module::resolution(std::size_t length) const {
  std::lock_guard<std::mutex> lock(d_->resolution_mutex);
  if (d_->resolution && d_->resolution->length() >= length) return d_->resolution;
  std::shared_ptr<const FreeResolution> next;
  if (d_->resolution) {
    next = std::make_shared<const FreeResolution>(d_->resolution->extended(length));
  } else {
    // A detached copy avoids a reference cycle through the cache.
    Module detached = Module::trusted(d_->algebra, d_->dim, d_->action, d_->free_rank);
    next = std::make_shared<const FreeResolution>(FreeResolution(detached).extended(length));
  }
  d_->resolution = next;
  return next;
}

Module syzygy(const Module& m, std::size_t n) {
  if (n == 0) return m;
  return m.resolution(n)->syzygy(n);
}

Matrix precompose_free(const ModuleHom& d, const Module& n) {
  const Module& src = d.source();
  const Module& tgt = d.target();
  if (!src.free_rank() || !tgt.free_rank()) throw PreconditionError("precompose_free needs free modules");
  const AlgebraPtr& alg = src.algebra();
  const std::size_t dd = alg->dim(), q = n.dim();
  const std::size_t gs = *src.free_rank(), gt = *tgt.free_rank();
  Matrix out(n.field(), gs * q, gt * q);
  const Vector& unit = alg->unit();
  for (std::size_t j = 0; j < gs; ++j) {
    // d(unit in block j), split into its gt blocks.
    Vector image(gt * dd);
    for (std::size_t k = 0; k < dd; ++k) {
      if (unit[k] == 0) continue;
      for (std::size_t r = 0; r < gt * dd; ++r) {
        const Scalar& x = d.matrix()(r, j * dd + k);
        if (x != 0) image[r] = n.field().add(image[r], n.field().mul(unit[k], x));
      }
    }
    for (std::size_t l = 0; l < gt; ++l) {
      Vector x(image.begin() + l * dd, image.begin() + (l + 1) * dd);
      bool zero = true;
      for (const auto& v : x) zero = zero && v == 0;
      if (zero) continue;
      out.set_block(j * q, l * q, n.action_of(x));
    }
  }
  return out;
}

Matrix hom_from_generator_images(const Module& free, const Module& n, const Vector& images) {
  if (!free.free_rank()) throw PreconditionError("hom_from_generator_images needs a free module");
  const std::size_t g = *free.free_rank(), dd = free.algebra()->dim(), q = n.dim();
  if (images.size() != g * q) throw InputError("generator images have wrong length");
  Matrix out(n.field(), q, g * dd);
  for (std::size_t j = 0; j < g; ++j) {
    Vector y(images.begin() + j * q, images.begin() + (j + 1) * q);
    for (std::size_t k = 0; k < dd; ++k) {
      Vector img = n.action(k).apply(y);
      for (std::size_t r = 0; r < q; ++r) out(r, j * dd + k) = img[r];
    }
  }
  return out;
}

namespace {

/// Rank of Hom(P_i, n) -> Hom(P_{i+1}, n).
std::size_t coboundary_rank(const FreeResolution& res, const Module& n, std::size_t i) {
  return rank(precompose_free(res.differential(i + 1), n));
}

}  // namespace

std::vector<std::size_t> ext_profile(const FreeResolution& res, const Module& n, std::size_t max_degree) {
  if (res.length() < max_degree + 1) throw PreconditionError("resolution too short for the requested Ext degree");
  if (!same_algebra(res.module().algebra(), n.algebra())) throw InputError("Ext between modules over different algebras");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i <= max_degree; ++i) ranks.push_back(coboundary_rank(res, n, i));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    std::size_t cochains = res.rank(i) * n.dim();
    out.push_back(cochains - ranks[i] - (i == 0 ? 0 : ranks[i - 1]));
  }
  return out;
}

std::vector<std::size_t> ext_profile(const Module& m, const Module& n, std::size_t max_degree) {
  return ext_profile(*m.resolution(max_degree + 1), n, max_degree);
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i) {
  if (!same_algebra(m.algebra(), n.algebra())) throw InputError("Ext between modules over different algebras");
  if (m.dim() == 0 || n.dim() == 0) return 0;
  auto res = m.resolution(i + 1);
  std::size_t cochains = res->rank(i) * n.dim();
  std::size_t out = cochains - coboundary_rank(*res, n, i);
  if (i > 0) out -= coboundary_rank(*res, n, i - 1);
  return out;
}

std::optional<std::size_t> projective_dimension(const Module& m, std::size_t limit) {
  auto top = top_of_regular(m.algebra());
  if (!top) throw PreconditionError("projective dimension needs a certified radical");
  if (m.dim() == 0) return 0;
  for (std::size_t i = 1; i <= limit + 1; ++i) {
    if (m.resolution(i)->syzygy(i + 1).dim() > kSyzygyBudget) {
      throw PreconditionError("syzygy " + std::to_string(i + 1) + " exceeds the size budget for certifying dimensions");
    }
    if (ext_dim(m, *top, i) == 0) return i - 1;
  }
  return std::nullopt;
}

std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t limit) {
  auto top = top_of_regular(a);
  if (!top) throw PreconditionError("global dimension needs a certified radical");
  return projective_dimension(*top, limit);
}

bool is_projective(const Module& m) {
  if (m.dim() == 0 || m.free_rank()) return true;
  FreeCover cover = free_cover(m);
  const Matrix& pi = cover.surjection.matrix();
  auto basis = hom_basis(m, cover.free);
  const std::size_t n = m.dim();
  std::vector<Vector> cols;
  for (const auto& h : basis) {
    Matrix c = pi * h.matrix();
    cols.push_back(c.entries());
  }
  Matrix id = Matrix::identity(m.field(), n);
  if (cols.empty()) return false;
  Matrix system = Matrix::from_columns(m.field(), n * n, cols);
  return solve(system, Matrix::column(m.field(), id.entries())).has_value();
}

}  // namespace gcdim
